#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "qdalg/document.hpp"
#include "qdalg/errors.hpp"
#include "qdalg/report.hpp"
#include "support.hpp"

using namespace qdtest;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture(const std::string& name) { return slurp(std::string(QD_FIXTURE_DIR) + "/" + name); }

// Path of the DocumentError raised by `text`, or "" if it loads.
std::string error_of(const std::string& text) {
  try {
    load_document(text);
  } catch (const DocumentError& e) {
    return e.what();
  }
  return "";
}

std::string bracket_doc(const std::string& body, const std::string& extra = "") {
  return R"({"variables":["x","y"],"rank":2,"bracket":)" + body + extra + "}";
}

StructureDocument random_document(RandomSource& rnd) {
  StructureDocument doc;
  const std::size_t n = rnd.integer(1, 3);
  doc.variables = names(n);
  switch (rnd.integer(0, 3)) {
    case 0:
      doc.kind = PayloadKind::kBracket;
      doc.rank = rnd.integer(1, 2);
      doc.bracket = random_near_qd_bracket(rnd, n, doc.rank, 2);
      break;
    case 1:
      doc.kind = PayloadKind::kJacobiStructure;
      doc.lambda = random_multivector(rnd, n, 2, 2);
      doc.gamma = random_multivector(rnd, n, 1, 2);
      doc.bracket = BidiffBracket(n, 1);
      break;
    case 2:
      doc.kind = PayloadKind::kOperator;
      doc.rank = rnd.integer(1, 2);
      doc.op = random_operator(rnd, n, doc.rank, 2);
      doc.bracket = BidiffBracket(n, doc.rank);
      break;
    default:
      doc.kind = PayloadKind::kVectorField;
      doc.gamma = random_multivector(rnd, n, 1, 2);
      doc.bracket = BidiffBracket(n, 1);
      break;
  }
  if (doc.kind != PayloadKind::kJacobiStructure && doc.kind != PayloadKind::kVectorField) {
    doc.lambda = Multivector(n, 2);
    doc.gamma = Multivector(n, 1);
  } else if (doc.kind == PayloadKind::kVectorField) {
    doc.lambda = Multivector(n, 2);
  }
  if (doc.kind != PayloadKind::kOperator) doc.op = FirstOrderOperator(n, doc.rank);
  const auto flags = known_flags(doc.kind);
  for (const auto& f : flags) {
    if (rnd.chance(30)) doc.expect.emplace_back(f, static_cast<Tri>(rnd.integer(0, 2)));
  }
  std::sort(doc.expect.begin(), doc.expect.end());
  return doc;
}

}  // namespace

TEST_CASE("load: minimal document") {
  const StructureDocument doc = load_document(fixture("minimal.json"));
  CHECK(doc.variables.empty());
  CHECK(doc.rank == 1);
  CHECK(doc.kind == PayloadKind::kBracket);
  CHECK(doc.bracket == BidiffBracket(0, 1));
  CHECK(doc.expect.empty());
  CHECK(canonical_json(doc) == R"({"variables":[],"rank":1,"bracket":{"C":[],"L":[],"R":[],"M":[]}})");
}

TEST_CASE("load: tangent algebroid document") {
  const StructureDocument doc = load_document(fixture("tangent2.json"));
  CHECK(doc.to_bracket() == tangent_algebroid(2));
  REQUIRE(doc.expect.size() == 1);
  CHECK(doc.expect[0] == std::pair<std::string, Tri>{"is_lie_algebroid", Tri::kTrue});
}

TEST_CASE("load: other payloads map to their brackets") {
  const StructureDocument jy = load_document(fixture("jacobi_y.json"));
  CHECK(jy.to_bracket() == jacobi_bracket(bivector(2, {{{0, 1}, "y"}}), field({"0", "1"})));
  const StructureDocument vf = load_document(fixture("vector_field_x.json"));
  CHECK(vf.kind == PayloadKind::kVectorField);
  CHECK(vf.to_bracket() == rank1_from_vector_field(vf.gamma.to_derivation()));
  const StructureDocument op = load_document(fixture("operator_dx.json"));
  CHECK(op.op == FirstOrderOperator::componentwise(Derivation::partial(2, 0), 2));
  CHECK_THROWS_AS(op.to_bracket(), std::logic_error);
}

TEST_CASE("load: index out of range") {
  CHECK(error_of(fixture("index_out_of_range.json")) == "$.bracket.C[0].indices[0]: index 1 out of range [0, 1)");
}

TEST_CASE("load: every error path names its location") {
  const std::string empty = R"({"C":[],"L":[],"R":[],"M":[]})";
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"[1,2]", "$: document must be an object"},
      {"{", "$: invalid JSON"},
      {R"({"variables":["x"],"rank":1,"bracket":{},"colour":1})", "$.colour: unknown key"},
      {R"({"variables":["x"],"rank":1})", "$: exactly one of"},
      {R"({"variables":["x"],"rank":1,"bracket":{},"operator":{}})", "$: exactly one of"},
      {R"({"rank":1,"bracket":{}})", "$.variables: missing"},
      {R"({"variables":"x","rank":1,"bracket":{}})", "$.variables: must be an array"},
      {R"({"variables":[1],"rank":1,"bracket":{}})", "$.variables[0]: must be a string"},
      {R"({"variables":["2x"],"rank":1,"bracket":{}})", "$.variables[0]: '2x' is not an identifier"},
      {R"({"variables":["x","x"],"rank":1,"bracket":{}})", "$.variables[1]: duplicate variable 'x'"},
      {R"({"variables":[],"bracket":{}})", "$.rank: missing"},
      {R"({"variables":[],"rank":0,"bracket":{}})", "$.rank: must be an integer >= 1"},
      {R"({"variables":[],"rank":1.5,"bracket":{}})", "$.rank: must be an integer >= 1"},
      {R"({"variables":["x"],"rank":2,"vector_field":{}})", "$.rank: vector_field requires rank 1"},
      {R"({"variables":["x"],"rank":2,"jacobi_structure":{}})", "$.rank: jacobi_structure requires rank 1"},
      {R"({"variables":["x"],"rank":1,"bracket":[]})", "$.bracket: must be an object"},
      {R"({"variables":["x"],"rank":1,"bracket":{"Q":[]}})", "$.bracket.Q: unknown tensor"},
      {R"({"variables":["x"],"rank":1,"bracket":{"C":{}}})", "$.bracket.C: must be an array of entries"},
      {R"({"variables":["x"],"rank":1,"bracket":{"C":[3]}})", "$.bracket.C[0]: entry must be an object"},
      {R"({"variables":["x"],"rank":1,"bracket":{"C":[{"poly":"1"}]}})", "$.bracket.C[0].indices: missing"},
      {R"({"variables":["x"],"rank":1,"bracket":{"C":[{"indices":[0,0],"poly":"1"}]}})",
       "$.bracket.C[0].indices: expected 3 indices"},
      {R"({"variables":["x"],"rank":1,"bracket":{"C":[{"indices":[0,0,0]}]}})", "$.bracket.C[0].poly: missing"},
      {R"({"variables":["x"],"rank":1,"bracket":{"C":[{"indices":[0,0,0],"poly":"1","w":0}]}})",
       "$.bracket.C[0].w: unknown key"},
      {R"({"variables":["x"],"rank":1,"bracket":{"C":[{"indices":[0,"x",0],"poly":"1"}]}})",
       "$.bracket.C[0].indices[1]: must be an integer"},
      {R"({"variables":["x"],"rank":1,"bracket":{"L":[{"indices":[0,"z",0,0],"poly":"1"}]}})",
       "$.bracket.L[0].indices[1]: unknown variable 'z'"},
      {R"({"variables":["x"],"rank":1,"bracket":{"L":[{"indices":[0,true,0,0],"poly":"1"}]}})",
       "$.bracket.L[0].indices[1]: must be a variable name or index"},
      {R"({"variables":["x"],"rank":1,"bracket":{"M":[{"indices":[0,0,1,0,0],"poly":"1"}]}})",
       "$.bracket.M[0].indices[2]: index 1 out of range [0, 1)"},
      {R"({"variables":["x"],"rank":1,"bracket":{"C":[{"indices":[0,0,0],"poly":"x +"}]}})",
       "$.bracket.C[0].poly: unexpected end of input at offset 3"},
      {R"({"variables":["x"],"rank":1,"bracket":{"C":[{"indices":[0,0,0],"poly":"1"},{"indices":[0,0,0],"poly":"2"}]}})",
       "$.bracket.C[1]: duplicate entry"},
      {R"({"variables":["x","y"],"rank":1,"jacobi_structure":{"Lambda":[{"indices":["y","x"],"poly":"1"}]}})",
       "$.jacobi_structure.Lambda[0]: Lambda entries need strictly increasing indices"},
      {R"({"variables":["x"],"rank":1,"bracket":{},"expect":[]})", "$.expect: must be an object"},
      {R"({"variables":["x"],"rank":1,"bracket":{},"expect":{"is_quasi_derivation":true}})",
       "$.expect.is_quasi_derivation: unknown flag for a bracket document"},
      {R"({"variables":["x"],"rank":1,"bracket":{},"expect":{"is_skew":"yes"}})",
       "$.expect.is_skew: must be true, false or \"not-applicable\""},
  };
  for (const auto& [text, prefix] : cases) {
    CAPTURE(text);
    const std::string err = error_of(text);
    CHECK(err.rfind(prefix, 0) == 0);
  }
  CHECK(error_of(bracket_doc(empty)).empty());
}

TEST_CASE("load: the nonqd document reads as written") {
  const StructureDocument doc = load_document(fixture("nonqd.json"));
  BidiffBracket expected(2, 2);
  expected.m(0, 0, 1, 1, 1) = P("1");
  CHECK(doc.bracket == expected);
}

TEST_CASE("property: canonical JSON round-trips and is a fixed point") {
  RandomSource rnd(60);
  for (int s = 0; s < 150; ++s) {
    const StructureDocument doc = random_document(rnd);
    const std::string text = canonical_json(doc);
    CAPTURE(text);
    const StructureDocument back = load_document(text);
    CHECK(back.kind == doc.kind);
    CHECK(back.variables == doc.variables);
    CHECK(back.rank == doc.rank);
    CHECK(back.expect == doc.expect);
    if (doc.kind == PayloadKind::kOperator) {
      CHECK(back.op == doc.op);
    } else {
      CHECK(back.to_bracket() == doc.to_bracket());
    }
    CHECK(canonical_json(back) == text);
  }
}

TEST_CASE("run_classify flags match the classifier") {
  RandomSource rnd(61);
  for (const char* name : {"tangent2.json", "poisson_plane.json", "nonqd.json", "so3.json", "c_only.json"}) {
    CAPTURE(name);
    const StructureDocument doc = load_document(fixture(name));
    const ClassifyRun run = run_classify(doc);
    const auto expected = classify(doc.to_bracket()).flags();
    REQUIRE(run.flags.size() >= expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(run.flags[i] == expected[i]);
  }
}

TEST_CASE("run_classify is deterministic") {
  RandomSource rnd(62);
  for (int s = 0; s < 15; ++s) {
    const StructureDocument doc = random_document(rnd);
    const RunOptions opts{2, 5, 1};
    CHECK(run_classify(doc, opts).text == run_classify(doc, opts).text);
  }
  const StructureDocument doc = load_document(fixture("contact.json"));
  CHECK(run_classify(doc).text == run_classify(load_document(canonical_json(doc))).text);
}

TEST_CASE("expectation semantics") {
  const std::string base = R"({"variables":["x","y"],"rank":1,"jacobi_structure":{"Lambda":[{"indices":["x","y"],"poly":"1"}]},)";
  const ClassifyRun ok = run_classify(load_document(base + R"("expect":{"is_skew":true,"anchors_opposite":"not-applicable"}})"));
  REQUIRE(ok.expectations.size() == 2);
  CHECK(ok.expectations[0].flag == "anchors_opposite");
  CHECK(ok.expectations_met());

  const ClassifyRun bad = run_classify(load_document(base + R"("expect":{"is_lie_algebroid":true,"sn_compatible":true}})"));
  CHECK_FALSE(bad.expectations_met());
  REQUIRE(bad.expectations.size() == 2);
  CHECK_FALSE(bad.expectations[0].ok());
  CHECK(bad.expectations[0].actual == Tri::kFalse);
  CHECK(bad.expectations[1].ok());
  CHECK(bad.text.find("FAILED") != std::string::npos);

  CHECK(run_classify(load_document(fixture("minimal.json"))).expectations_met());
}

TEST_CASE("operator reports") {
  const ClassifyRun run = run_classify(load_document(fixture("operator_dx.json")));
  REQUIRE(run.flags.size() == 1);
  CHECK(run.flags[0] == std::pair<std::string, Tri>{"is_quasi_derivation", Tri::kTrue});
  CHECK(run.expectations_met());

  FirstOrderOperator off(2, 2);
  off.b(0, 0, 1) = P("1");
  StructureDocument doc;
  doc.variables = names(2);
  doc.rank = 2;
  doc.kind = PayloadKind::kOperator;
  doc.op = off;
  doc.bracket = BidiffBracket(2, 2);
  doc.lambda = Multivector(2, 2);
  doc.gamma = Multivector(2, 1);
  CHECK(run_classify(doc).flags[0].second == tri(static_cast<bool>(is_quasi_derivation(off))));
}

TEST_CASE("render_anchors") {
  const std::string t = render_anchors(load_document(fixture("tangent2.json")));
  CHECK(t == fixture("tangent2.anchors.expected"));
  CHECK(t.find("X^0  ->  d_x") != std::string::npos);
  CHECK(t.find("Y^1  ->  -d_y") != std::string::npos);
  const std::string o = render_anchors(load_document(fixture("operator_dx.json")));
  CHECK(o.find(universal_anchor(FirstOrderOperator::componentwise(Derivation::partial(2, 0), 2)).to_string(names(2))) !=
        std::string::npos);
}

TEST_CASE("command line exit codes") {
  const std::string cli = QD_CLI;
  const std::string dir = QD_FIXTURE_DIR;
  auto run = [&](const std::string& args) {
    const int status = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  CHECK(run("check " + dir + "/tangent2.json") == 0);
  CHECK(run("check " + dir + "/nonqd.json") == 1);
  CHECK(run("check " + dir + "/malformed.json") == 2);
  CHECK(run("check " + dir + "/does_not_exist.json") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("") == 2);
  CHECK(run("--max-degree 99 check " + dir + "/minimal.json") == 2);
  CHECK(run("anchors " + dir + "/operator_dx.json") == 0);
}
