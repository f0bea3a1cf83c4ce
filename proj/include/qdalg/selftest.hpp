#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace qdalg {

// Every rank-1 bracket on one variable whose C, L, R, M are a + b x with
// a, b in {-1, 0, 1}.
struct SweepResult {
  std::size_t brackets = 0;
  std::size_t quasi_derivation_both = 0;
  std::size_t jacobi_structures = 0;  // both slot checks and a zero jacobiator
  std::size_t skew_violations = 0;    // jacobi structures that are not skew
};

SweepResult rank1_line_sweep();

// Random and constructed (Lambda, Gamma) pairs on at most three variables.
struct SnCorpusResult {
  std::size_t cases = 0;
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t disagreements = 0;       // SN verdict differs from the bracket jacobiator
  std::size_t anchor_mismatches = 0;   // hamiltonian anchor differs from the left anchor
};

SnCorpusResult sn_equivalence_corpus(std::size_t cases = 300, std::uint64_t seed = 7);

// Number of jacobi structures the sweep is known to find.
inline constexpr std::size_t kRank1LineJacobiStructures = 9;

std::string render_selftest(const SweepResult& sweep, const SnCorpusResult& corpus);

}  // namespace qdalg
