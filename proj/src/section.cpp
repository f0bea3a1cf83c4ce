#include "qdalg/section.hpp"

#include <functional>

#include "qdalg/errors.hpp"

namespace qdalg {

Section::Section(std::size_t num_vars, std::size_t rank)
    : num_vars_(num_vars), components_(rank, Poly(num_vars)) {}

Section::Section(std::size_t num_vars, std::vector<Poly> components)
    : num_vars_(num_vars), components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.num_vars() != num_vars_) throw ShapeError("section component has wrong arity");
  }
}

Section Section::monomial(std::size_t rank, std::size_t index, const Exponents& exps) {
  Section s(exps.size(), rank);
  s.components_.at(index) = Poly::monomial(exps);
  return s;
}

Section Section::basis(std::size_t num_vars, std::size_t rank, std::size_t index) {
  return monomial(rank, index, Exponents(num_vars, 0));
}

bool Section::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Section& Section::operator+=(const Section& rhs) {
  if (rhs.num_vars_ != num_vars_ || rhs.rank() != rank()) throw ShapeError("section shape mismatch");
  for (std::size_t a = 0; a < components_.size(); ++a) components_[a] += rhs.components_[a];
  return *this;
}

Section& Section::operator-=(const Section& rhs) {
  if (rhs.num_vars_ != num_vars_ || rhs.rank() != rank()) throw ShapeError("section shape mismatch");
  for (std::size_t a = 0; a < components_.size(); ++a) components_[a] -= rhs.components_[a];
  return *this;
}

Section operator*(const Poly& f, const Section& x) {
  if (f.num_vars() != x.num_vars_) throw ShapeError("scalar has wrong arity");
  Section r = x;
  for (auto& c : r.components_) c = f * c;
  return r;
}

std::string Section::to_string(std::span<const std::string> names) const {
  std::string out = "[";
  for (std::size_t a = 0; a < components_.size(); ++a) {
    if (a > 0) out += ", ";
    out += components_[a].to_string(names);
  }
  return out + "]";
}

std::vector<Exponents> monomial_grid(std::size_t num_vars, std::uint32_t max_degree) {
  std::vector<Exponents> grid;
  Exponents current(num_vars, 0);
  // Distributes `remaining` over variables from `var` on, earlier variables
  // taking the largest share first.
  std::function<void(std::size_t, std::uint32_t)> fill = [&](std::size_t var, std::uint32_t remaining) {
    if (var + 1 >= num_vars) {
      if (num_vars == 0) {
        if (remaining == 0) grid.push_back(current);
        return;
      }
      current[var] = remaining;
      grid.push_back(current);
      current[var] = 0;
      return;
    }
    for (std::uint32_t e = remaining + 1; e-- > 0;) {
      current[var] = e;
      fill(var + 1, remaining - e);
    }
    current[var] = 0;
  };
  for (std::uint32_t d = 0; d <= max_degree; ++d) {
    if (num_vars == 0 && d > 0) break;
    fill(0, d);
  }
  return grid;
}

std::vector<Section> monomial_sections(std::size_t num_vars, std::size_t rank,
                                       std::uint32_t max_degree) {
  std::vector<Section> out;
  for (const auto& e : monomial_grid(num_vars, max_degree)) {
    for (std::size_t a = 0; a < rank; ++a) out.push_back(Section::monomial(rank, a, e));
  }
  return out;
}

}  // namespace qdalg
