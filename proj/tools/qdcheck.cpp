#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qdalg/document.hpp"
#include "qdalg/report.hpp"
#include "qdalg/selftest.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kExpectFailed = 1;
constexpr int kLoadError = 2;

qdalg::StructureDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qdalg::DocumentError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return qdalg::load_document(buf.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify first-order bidifferential brackets and quasi-derivations"};
  app.require_subcommand(1);
  app.fallthrough();
  qdalg::RunOptions opts;
  app.add_option("--max-degree", opts.max_degree, "degree bound for randomized confirmation")
      ->check(CLI::Range(0u, 8u));

  std::string file;
  auto* check = app.add_subcommand("check", "classify a structure document and print the report");
  check->add_option("file", file)->required();
  auto* anchors = app.add_subcommand("anchors", "print the anchor data of a structure document");
  anchors->add_option("file", file)->required();
  auto* selftest = app.add_subcommand("selftest", "run the exhaustive sweep and the SN corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kLoadError;
  }

  if (selftest->parsed()) {
    const auto sweep = qdalg::rank1_line_sweep();
    const auto corpus = qdalg::sn_equivalence_corpus();
    std::cout << qdalg::render_selftest(sweep, corpus);
    const bool ok = sweep.skew_violations == 0 && sweep.jacobi_structures == qdalg::kRank1LineJacobiStructures &&
                    corpus.disagreements == 0 && corpus.anchor_mismatches == 0;
    std::cout << (ok ? "selftest passed\n" : "selftest FAILED\n");
    return ok ? kOk : kExpectFailed;
  }

  qdalg::StructureDocument doc;
  try {
    doc = read_document(file);
  } catch (const qdalg::DocumentError& e) {
    std::cerr << "qdcheck: " << e.what() << '\n';
    return kLoadError;
  }

  if (anchors->parsed()) {
    std::cout << qdalg::render_anchors(doc);
    return kOk;
  }
  (void)check;
  const auto run = qdalg::run_classify(doc, opts);
  std::cout << run.text;
  return run.expectations_met() ? kOk : kExpectFailed;
}
