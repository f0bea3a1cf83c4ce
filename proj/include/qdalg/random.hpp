#pragma once

// Seeded generators for random polynomials and sections. The mapping from the
// engine's output to values avoids std::uniform_*_distribution so that a
// given seed produces the same values on every standard library.

#include <cstddef>
#include <cstdint>
#include <random>

#include "qdalg/derivation.hpp"
#include "qdalg/section.hpp"

namespace qdalg {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  bool chance(unsigned percent) { return integer(0, 99) < static_cast<std::int64_t>(percent); }

  /// Up to `max_terms` monomials of degree <= max_degree, coefficients in
  /// [-coeff_bound, coeff_bound] (zero allowed).
  Poly poly(std::size_t num_vars, std::uint32_t max_degree, std::size_t max_terms = 4,
            std::int64_t coeff_bound = 3);
  Section section(std::size_t num_vars, std::size_t rank, std::uint32_t max_degree,
                  std::size_t max_terms = 3);
  Derivation derivation(std::size_t num_vars, std::uint32_t max_degree, std::size_t max_terms = 3);

 private:
  std::mt19937_64 engine_;
};

}  // namespace qdalg
