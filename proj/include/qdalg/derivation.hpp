#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qdalg/poly.hpp"

namespace qdalg {

/// A polynomial vector field sum_i D_i d/dx_i, i.e. an element of Der(A).
class Derivation {
 public:
  Derivation() = default;
  // The zero vector field.
  explicit Derivation(std::size_t num_vars);
  explicit Derivation(std::vector<Poly> components);

  static Derivation partial(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const { return components_.size(); }
  const Poly& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Poly>& components() const { return components_; }
  bool is_zero() const;

  Derivation& operator+=(const Derivation& rhs);
  Derivation& operator-=(const Derivation& rhs);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend Derivation operator*(const Poly& f, const Derivation& d);
  friend bool operator==(const Derivation&, const Derivation&) = default;

  /// D(f) = sum_i D_i * df/dx_i
  Poly apply(const Poly& f) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::vector<Poly> components_;
};

/// [D1, D2] with components D1(D2_i) - D2(D1_i).
Derivation commutator(const Derivation& d1, const Derivation& d2);

}  // namespace qdalg
