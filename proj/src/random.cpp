#include "qdalg/random.hpp"

namespace qdalg {

std::int64_t RandomSource::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Poly RandomSource::poly(std::size_t num_vars, std::uint32_t max_degree, std::size_t max_terms,
                        std::int64_t coeff_bound) {
  const auto grid = monomial_grid(num_vars, max_degree);
  const auto terms = static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(max_terms)));
  std::vector<Poly::Term> out;
  for (std::size_t t = 0; t < terms; ++t) {
    const auto& e = grid[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(grid.size()) - 1))];
    out.push_back({e, Rational(static_cast<long>(integer(-coeff_bound, coeff_bound)))});
  }
  return Poly::from_terms(num_vars, std::move(out));
}

Section RandomSource::section(std::size_t num_vars, std::size_t rank, std::uint32_t max_degree,
                              std::size_t max_terms) {
  std::vector<Poly> comps;
  for (std::size_t a = 0; a < rank; ++a) comps.push_back(poly(num_vars, max_degree, max_terms));
  return Section(num_vars, std::move(comps));
}

Derivation RandomSource::derivation(std::size_t num_vars, std::uint32_t max_degree, std::size_t max_terms) {
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < num_vars; ++i) comps.push_back(poly(num_vars, max_degree, max_terms));
  return Derivation(std::move(comps));
}

}  // namespace qdalg
