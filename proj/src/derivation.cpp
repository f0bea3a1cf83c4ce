#include "qdalg/derivation.hpp"

#include "qdalg/errors.hpp"

namespace qdalg {

Derivation::Derivation(std::size_t num_vars) : components_(num_vars, Poly(num_vars)) {}

Derivation::Derivation(std::vector<Poly> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.num_vars() != components_.size()) {
      throw ShapeError("derivation component count must equal the number of variables");
    }
  }
}

Derivation Derivation::partial(std::size_t num_vars, std::size_t index) {
  Derivation d(num_vars);
  d.components_.at(index) = Poly::constant(num_vars, 1);
  return d;
}

bool Derivation::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Derivation& Derivation::operator+=(const Derivation& rhs) {
  if (rhs.num_vars() != num_vars()) throw ShapeError("derivation dimension mismatch");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += rhs.components_[i];
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& rhs) {
  if (rhs.num_vars() != num_vars()) throw ShapeError("derivation dimension mismatch");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= rhs.components_[i];
  return *this;
}

Derivation operator*(const Poly& f, const Derivation& d) {
  if (f.num_vars() != d.num_vars()) throw ShapeError("derivation dimension mismatch");
  Derivation r = d;
  for (auto& c : r.components_) c = f * c;
  return r;
}

Poly Derivation::apply(const Poly& f) const {
  if (f.num_vars() != num_vars()) throw ShapeError("derivation applied to polynomial of wrong arity");
  Poly sum(num_vars());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].is_zero()) continue;
    sum += components_[i] * f.derivative(i);
  }
  return sum;
}

std::string Derivation::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const Poly& c = components_[i];
    if (c.is_zero()) continue;
    out += joined_term(out.empty(), coefficient_prefix(c, names) + "d_" + names[i]);
  }
  return out.empty() ? "0" : out;
}

Derivation commutator(const Derivation& d1, const Derivation& d2) {
  if (d1.num_vars() != d2.num_vars()) throw ShapeError("derivation dimension mismatch");
  std::vector<Poly> comps;
  comps.reserve(d1.num_vars());
  for (std::size_t i = 0; i < d1.num_vars(); ++i) {
    comps.push_back(d1.apply(d2[i]) - d2.apply(d1[i]));
  }
  return Derivation(std::move(comps));
}

}  // namespace qdalg
