#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qdalg/poly.hpp"

namespace qdalg {

/// An element of the free module A^k over the polynomial ring in n variables.
class Section {
 public:
  Section() = default;
  // The zero section.
  Section(std::size_t num_vars, std::size_t rank);
  Section(std::size_t num_vars, std::vector<Poly> components);

  /// x^exps e_index
  static Section monomial(std::size_t rank, std::size_t index, const Exponents& exps);
  static Section basis(std::size_t num_vars, std::size_t rank, std::size_t index);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t rank() const { return components_.size(); }
  const Poly& operator[](std::size_t a) const { return components_[a]; }
  Poly& operator[](std::size_t a) { return components_[a]; }
  const std::vector<Poly>& components() const { return components_; }
  bool is_zero() const;

  Section& operator+=(const Section& rhs);
  Section& operator-=(const Section& rhs);
  friend Section operator+(Section a, const Section& b) { return a += b; }
  friend Section operator-(Section a, const Section& b) { return a -= b; }
  friend Section operator*(const Poly& f, const Section& x);
  friend bool operator==(const Section&, const Section&) = default;

  /// "[p_1, ..., p_k]"
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t num_vars_ = 0;
  std::vector<Poly> components_;
};

/// All monomials of total degree <= max_degree in n variables, ordered by
/// degree and, within a degree, with higher powers of earlier variables
/// first (1, x, y, x^2, x*y, y^2, ...).
std::vector<Exponents> monomial_grid(std::size_t num_vars, std::uint32_t max_degree);

/// The sections x^b e_a for every monomial of the grid, monomial-major and
/// basis index second.
std::vector<Section> monomial_sections(std::size_t num_vars, std::size_t rank,
                                       std::uint32_t max_degree);

}  // namespace qdalg
