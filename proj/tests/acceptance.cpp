// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qdalg/selftest.hpp"
#include "support.hpp"

using namespace qdtest;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

bool m_zero(const AnchorData& a) {
  for (const auto& p : a.m) {
    if (!p.is_zero()) return false;
  }
  return true;
}

Outcome qd_identities() {
  RandomSource rnd(101);
  Outcome out;
  std::size_t checks = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = rnd.integer(1, 3), k = rnd.integer(1, 3);
    const FirstOrderOperator d = random_qd(rnd, n, k, 2);
    const auto v = is_quasi_derivation(d);
    if (!v) return {false, "generated operator rejected"};
    const Derivation& hat = *v.anchor;
    for (int s = 0; s < 20; ++s) {
      const Poly f = rnd.poly(n, 2), g = rnd.poly(n, 2);
      const Section x = rnd.section(n, k, 2);
      if (d.apply(f * x) != f * d.apply(x) + hat.apply(f) * x) return {false, "operator identity fails"};
      if (hat.apply(f * g) != f * hat.apply(g) + hat.apply(f) * g) return {false, "anchor is not a derivation"};
      ++checks;
    }
  }
  out.detail = std::to_string(checks) + " (f, X) samples over 200 operators";
  return out;
}

Outcome commutator_closure() {
  RandomSource rnd(102);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = rnd.integer(1, 3), k = rnd.integer(1, 3);
    const FirstOrderOperator d1 = random_qd(rnd, n, k, 2), d2 = random_qd(rnd, n, k, 2);
    const FirstOrderOperator c = commutator(d1, d2);
    const auto v = is_quasi_derivation(c);
    if (!v) return {false, "commutator is not a quasi-derivation"};
    if (*v.anchor != commutator(universal_anchor(d1), universal_anchor(d2))) return {false, "anchor is not a homomorphism"};
    const Section x = rnd.section(n, k, 2);
    if (c.apply(x) != d1.apply(d2.apply(x)) - d2.apply(d1.apply(x))) return {false, "commutator differs from composition"};
  }
  return {true, "100 pairs"};
}

Outcome commutator_leibniz() {
  RandomSource rnd(103);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = rnd.integer(1, 3), k = rnd.integer(1, 3);
    const FirstOrderOperator d1 = random_qd(rnd, n, k, 2), d2 = random_qd(rnd, n, k, 2);
    if (!leibniz_defect(d1, d2, rnd.poly(n, 2)).is_zero()) return {false, "nonzero defect"};
  }
  return {true, "100 triples"};
}

Outcome rank2_tensorial() {
  RandomSource rnd(104);
  std::size_t passing = 0, generated = 0, checked = 0;
  while (checked < 100) {
    const std::size_t k = rnd.integer(2, 3), n = rnd.integer(1, 2);
    const BidiffBracket br = random_near_qd_bracket(rnd, n, k, 1);
    ++generated;
    const auto r = right_qd_check(br), l = left_qd_check(br);
    if (!r || !l) continue;
    ++passing;
    if (!m_zero(*r.anchor) || !m_zero(*l.anchor) || !anchors_tensorial(br)) return {false, "nonzero m-tensor at rank >= 2"};
    const Section d = expansion_identity_defect(br, rnd.poly(n, 2), rnd.poly(n, 2), rnd.section(n, k, 2), rnd.section(n, k, 2));
    if (!d.is_zero()) return {false, "expansion identity defect nonzero"};
    ++checked;
  }
  return {true, std::to_string(passing) + " of " + std::to_string(generated) + " brackets passed both slot checks"};
}

BidiffBracket lie_algebra(RandomSource& rnd) {
  const Rational s(rnd.integer(1, 3));
  std::vector<Rational> c(27, 0);
  auto set = [&](std::size_t cc, std::size_t a, std::size_t b, Rational v) {
    c[(cc * 3 + a) * 3 + b] += v;
    c[(cc * 3 + b) * 3 + a] -= v;
  };
  switch (rnd.integer(0, 2)) {
    case 0:  // so(3)
      set(2, 0, 1, s);
      set(0, 1, 2, s);
      set(1, 2, 0, s);
      break;
    case 1:  // Heisenberg
      set(2, 0, 1, s);
      break;
    default:  // sl(2)
      set(1, 0, 1, 2 * s);
      set(2, 0, 2, -2 * s);
      set(0, 1, 2, s);
      break;
  }
  return structure_constant_algebra(3, c);
}

std::optional<BidiffBracket> random_jacobi_pair_bracket(RandomSource& rnd) {
  const std::size_t n = rnd.integer(1, 3);
  Multivector lam = random_multivector(rnd, n, 2, n == 3 ? 1 : 2);
  Multivector gam = random_multivector(rnd, n, 1, 1);
  switch (rnd.integer(0, 2)) {
    case 0:
      lam = Multivector(n, 2);
      break;
    case 1:
      gam = Multivector(n, 1);
      break;
    default:
      break;
  }
  if (!jacobi_pair_check(lam, gam)) return std::nullopt;
  return jacobi_bracket(lam, gam);
}

Outcome anchor_homomorphism() {
  RandomSource rnd(105);
  std::size_t count = 0, by_source[4] = {0, 0, 0, 0};
  while (count < 100) {
    const std::size_t src = count % 4;
    BidiffBracket br;
    if (src == 0) {
      br = tangent_algebroid(rnd.integer(1, 3));
    } else if (src == 1) {
      const std::size_t n = rnd.integer(1, 3);
      br = rank1_from_vector_field(rnd.derivation(n, 2));
    } else if (src == 2) {
      auto b = random_jacobi_pair_bracket(rnd);
      if (!b) continue;
      br = *b;
    } else {
      br = lie_algebra(rnd);
    }
    if (!jacobiator_is_zero(br)) return {false, "generator produced a nonzero jacobiator"};
    if (!right_qd_check(br) || !left_qd_check(br)) return {false, "slot check fails"};
    if (!anchor_homomorphism_check(br)) return {false, "anchor is not a homomorphism"};
    ++by_source[src];
    ++count;
  }
  std::ostringstream ss;
  ss << "tangent " << by_source[0] << ", vector field " << by_source[1] << ", jacobi pair " << by_source[2]
     << ", lie algebra " << by_source[3];
  return {true, ss.str()};
}

Outcome rank1_sweep() {
  const SweepResult r = rank1_line_sweep();
  std::ostringstream ss;
  ss << r.brackets << " brackets, " << r.jacobi_structures << " jacobi structures, " << r.skew_violations
     << " not skew";
  const bool ok = r.skew_violations == 0 && r.jacobi_structures == kRank1LineJacobiStructures;
  return {ok, ss.str()};
}

Outcome sn_equivalence() {
  const SnCorpusResult r = sn_equivalence_corpus(300, 7);
  std::ostringstream ss;
  ss << r.cases << " cases, " << r.negatives << " negative, " << r.disagreements << " disagreements, "
     << r.anchor_mismatches << " anchor mismatches";
  const bool ok = r.cases == 300 && r.negatives >= 30 && r.disagreements == 0 && r.anchor_mismatches == 0;
  return {ok, ss.str()};
}

Outcome poisson_skew() {
  RandomSource rnd(106);
  std::size_t count = 0;
  while (count < 100) {
    const auto br = random_jacobi_pair_bracket(rnd);
    if (!br) continue;
    const std::size_t n = br->num_vars();
    const auto d = poisson_skew_identity_check(*br, rnd.poly(n, 2), rnd.poly(n, 2), rnd.poly(n, 2));
    if (!d.identity_defect.is_zero()) return {false, "nonzero defect"};
    ++count;
  }
  return {true, "100 brackets"};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome fixtures() {
  const std::string dir = QD_FIXTURE_DIR;
  std::ifstream manifest(dir + "/manifest.txt");
  if (!manifest) return {false, "manifest missing"};
  std::string line;
  std::size_t count = 0;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string command, file;
    int expected_exit = 0;
    fields >> command >> file >> expected_exit;
    const std::string cmd = "cd '" + dir + "' && '" + std::string(QD_CLI) + "' " + command + " " + file + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {false, "cannot run " + command};
    std::string output;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    const std::string stem = file.substr(0, file.rfind('.'));
    if (output != slurp(dir + "/" + stem + "." + command + ".expected")) return {false, line + ": output differs"};
    if (code != expected_exit) return {false, line + ": exit " + std::to_string(code)};
    ++count;
  }
  return {count > 0, std::to_string(count) + " documents"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "quasi-derivation identities", 30, qd_identities},
      {2, "commutator closure", 30, commutator_closure},
      {3, "commutator Leibniz rule", 30, commutator_leibniz},
      {4, "tensorial anchors at rank >= 2", 60, rank2_tensorial},
      {5, "anchor homomorphism", 60, anchor_homomorphism},
      {6, "rank-1 sweep", 600, rank1_sweep},
      {7, "Schouten-Nijenhuis equivalence", 120, sn_equivalence},
      {8, "Poisson skew identity", 30, poisson_skew},
      {9, "fixture regression", 10, fixtures},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      o.ok = false;
      o.detail += "; over time budget";
    }
    if (!o.ok) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << "  (" << o.detail << ", " << timing
              << ")\n";
  }
  return failures == 0 ? 0 : 1;
}
