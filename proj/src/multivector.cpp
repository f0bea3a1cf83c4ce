#include "qdalg/multivector.hpp"

#include <algorithm>

#include "qdalg/errors.hpp"

namespace qdalg {

namespace {

// Sorts `idx` in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(Multivector::Indices& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (idx[i] == idx[i - 1]) return 0;
  }
  return sign;
}

}  // namespace

Multivector Multivector::function(const Poly& f) {
  Multivector m(f.num_vars(), 0);
  if (!f.is_zero()) m.comps_[{}] = f;
  return m;
}

Multivector Multivector::vector_field(const Derivation& d) {
  Multivector m(d.num_vars(), 1);
  for (std::size_t i = 0; i < d.num_vars(); ++i) {
    if (!d[i].is_zero()) m.comps_[{i}] = d[i];
  }
  return m;
}

Poly Multivector::at(const Indices& indices) const {
  auto it = comps_.find(indices);
  return it == comps_.end() ? Poly(num_vars_) : it->second;
}

Poly Multivector::skew_at(const Indices& indices) const {
  Indices sorted = indices;
  const int sign = sort_with_sign(sorted);
  if (sign == 0) return Poly(num_vars_);
  Poly p = at(sorted);
  return sign > 0 ? p : -p;
}

void Multivector::add(const Indices& indices, const Poly& value) {
  if (indices.size() != degree_) throw ShapeError("index tuple length does not match multivector degree");
  if (value.num_vars() != num_vars_) throw ShapeError("multivector component has wrong arity");
  for (auto i : indices) {
    if (i >= num_vars_) throw ShapeError("multivector index out of range");
  }
  if (value.is_zero()) return;
  Indices sorted = indices;
  const int sign = sort_with_sign(sorted);
  if (sign == 0) return;
  auto [it, inserted] = comps_.try_emplace(sorted, num_vars_);
  if (sign > 0) {
    it->second += value;
  } else {
    it->second -= value;
  }
  if (it->second.is_zero()) comps_.erase(it);
}

Derivation Multivector::to_derivation() const {
  if (degree_ != 1) throw ShapeError("only a 1-vector converts to a derivation");
  std::vector<Poly> comps(num_vars_, Poly(num_vars_));
  for (const auto& [idx, p] : comps_) comps[idx[0]] = p;
  return Derivation(std::move(comps));
}

void Multivector::require_compatible(const Multivector& other) const {
  if (other.num_vars_ != num_vars_ || other.degree_ != degree_) {
    throw ShapeError("multivectors of different shape");
  }
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  require_compatible(rhs);
  for (const auto& [idx, p] : rhs.comps_) add(idx, p);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  require_compatible(rhs);
  for (const auto& [idx, p] : rhs.comps_) add(idx, -p);
  return *this;
}

Multivector operator*(const Poly& f, const Multivector& p) {
  if (f.num_vars() != p.num_vars_) throw ShapeError("scalar has wrong arity");
  Multivector r(p.num_vars_, p.degree_);
  for (const auto& [idx, c] : p.comps_) r.add(idx, f * c);
  return r;
}

Multivector operator*(const Rational& c, const Multivector& p) {
  return Poly::constant(p.num_vars_, c) * p;
}

std::string Multivector::to_string(std::span<const std::string> names) const {
  if (degree_ == 0) return at({}).to_string(names);
  std::string out;
  for (const auto& [idx, p] : comps_) {
    std::string basis;
    for (auto i : idx) {
      if (!basis.empty()) basis += '^';
      basis += "d_" + names[i];
    }
    out += joined_term(out.empty(), coefficient_prefix(p, names) + basis);
  }
  return out.empty() ? "0" : out;
}

Multivector wedge(const Multivector& p, const Multivector& q) {
  if (p.num_vars() != q.num_vars()) throw ShapeError("multivectors over different variable sets");
  Multivector r(p.num_vars(), p.degree() + q.degree());
  for (const auto& [i, f] : p.components()) {
    for (const auto& [j, g] : q.components()) {
      Multivector::Indices idx = i;
      idx.insert(idx.end(), j.begin(), j.end());
      r.add(idx, f * g);
    }
  }
  return r;
}

namespace {

// f d_{i_1} ^ d_{i_2} ^ ... as the list (f d_{i_1}, d_{i_2}, ...).
std::vector<Derivation> decompose(std::size_t n, const Multivector::Indices& idx, const Poly& f) {
  std::vector<Derivation> vs;
  for (std::size_t s = 0; s < idx.size(); ++s) {
    Derivation d = Derivation::partial(n, idx[s]);
    vs.push_back(s == 0 ? f * d : d);
  }
  return vs;
}

Multivector wedge_all(std::size_t n, const std::vector<const Derivation*>& vs) {
  Multivector acc = Multivector::function(Poly::constant(n, 1));
  for (const auto* v : vs) acc = wedge(acc, Multivector::vector_field(*v));
  return acc;
}

std::vector<const Derivation*> all_but(const std::vector<Derivation>& vs, std::size_t skip) {
  std::vector<const Derivation*> out;
  for (std::size_t s = 0; s < vs.size(); ++s) {
    if (s != skip) out.push_back(&vs[s]);
  }
  return out;
}

// [P, g] for p >= 1.
Multivector bracket_with_function(const Multivector& p, const Poly& g) {
  const std::size_t n = p.num_vars();
  const std::size_t deg = p.degree();
  Multivector r(n, deg - 1);
  for (const auto& [idx, f] : p.components()) {
    const auto vs = decompose(n, idx, f);
    for (std::size_t s = 0; s < deg; ++s) {
      Poly coeff = vs[s].apply(g);
      if (coeff.is_zero()) continue;
      // (-1)^{p-s} with s counted from 1
      if ((deg - (s + 1)) % 2 == 1) coeff = -coeff;
      r += coeff * wedge_all(n, all_but(vs, s));
    }
  }
  return r;
}

}  // namespace

Multivector sn_bracket(const Multivector& p, const Multivector& q) {
  if (p.num_vars() != q.num_vars()) throw ShapeError("multivectors over different variable sets");
  const std::size_t n = p.num_vars();
  if (p.degree() == 0 && q.degree() == 0) return Multivector(n, 0);
  if (q.degree() == 0) return bracket_with_function(p, q.at({}));
  if (p.degree() == 0) {
    // graded antisymmetry: [f, Q] = (-1)^q [Q, f]
    Multivector r = bracket_with_function(q, p.at({}));
    return q.degree() % 2 == 0 ? r : Rational(-1) * r;
  }
  Multivector r(n, p.degree() + q.degree() - 1);
  for (const auto& [i, f] : p.components()) {
    const auto vs = decompose(n, i, f);
    for (const auto& [j, g] : q.components()) {
      const auto ws = decompose(n, j, g);
      for (std::size_t s = 0; s < vs.size(); ++s) {
        for (std::size_t t = 0; t < ws.size(); ++t) {
          const Derivation c = commutator(vs[s], ws[t]);
          if (c.is_zero()) continue;
          auto rest = all_but(vs, s);
          const auto wrest = all_but(ws, t);
          rest.insert(rest.end(), wrest.begin(), wrest.end());
          Multivector term = wedge(Multivector::vector_field(c), wedge_all(n, rest));
          // (-1)^{s+t} with 1-based s, t equals (-1)^{s+t} with 0-based ones
          if ((s + t) % 2 == 1) {
            r -= term;
          } else {
            r += term;
          }
        }
      }
    }
  }
  return r;
}

namespace {

void require_jacobi_shapes(const Multivector& lambda, const Multivector& gamma) {
  if (lambda.degree() != 2) throw ShapeError("Lambda must be a bivector");
  if (gamma.degree() != 1) throw ShapeError("Gamma must be a vector field");
  if (lambda.num_vars() != gamma.num_vars()) throw ShapeError("Lambda and Gamma over different variable sets");
}

}  // namespace

Derivation interior_df(const Poly& f, const Multivector& bivector) {
  if (bivector.degree() != 2) throw ShapeError("interior product needs a bivector");
  if (f.num_vars() != bivector.num_vars()) throw ShapeError("function and bivector over different variable sets");
  const std::size_t n = f.num_vars();
  std::vector<Poly> comps(n, Poly(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Poly di = f.derivative(i);
    if (di.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Poly lij = bivector.skew_at({i, j});
      if (!lij.is_zero()) comps[j] += di * lij;
    }
  }
  return Derivation(std::move(comps));
}

JacobiPairVerdict jacobi_pair_check(const Multivector& lambda, const Multivector& gamma) {
  require_jacobi_shapes(lambda, gamma);
  JacobiPairVerdict verdict;
  Multivector first = sn_bracket(gamma, lambda);
  if (!first.is_zero()) {
    verdict.holds = false;
    verdict.failed_condition = 1;
    verdict.defect = std::move(first);
    return verdict;
  }
  Multivector second = sn_bracket(lambda, lambda) + Rational(2) * wedge(lambda, gamma);
  if (!second.is_zero()) {
    verdict.holds = false;
    verdict.failed_condition = 2;
    verdict.defect = std::move(second);
  }
  return verdict;
}

BidiffBracket jacobi_bracket(const Multivector& lambda, const Multivector& gamma) {
  require_jacobi_shapes(lambda, gamma);
  const std::size_t n = lambda.num_vars();
  BidiffBracket br(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Poly g = gamma.at({i});
    br.r(0, i, 0, 0) = g;
    br.l(0, i, 0, 0) = -g;
    for (std::size_t j = 0; j < n; ++j) br.m(0, i, j, 0, 0) = lambda.skew_at({i, j});
  }
  return br;
}

Derivation hamiltonian_anchor(const Multivector& lambda, const Multivector& gamma, const Poly& f) {
  require_jacobi_shapes(lambda, gamma);
  return interior_df(f, lambda) + f * gamma.to_derivation();
}

PoissonSkewDefect poisson_skew_identity_check(const BidiffBracket& br, const Poly& f, const Poly& g,
                                              const Poly& h) {
  if (br.rank() != 1) throw PreconditionError("Poisson skew identity needs a rank-1 bracket");
  if (!right_qd_check(br) || !left_qd_check(br)) {
    throw PreconditionError("bracket is not a quasi-derivation in both arguments");
  }
  if (!jacobiator_is_zero(br)) throw PreconditionError("bracket does not satisfy the Jacobi identity");
  const std::size_t n = br.num_vars();
  auto sec = [n](const Poly& p) { return Section(n, {p}); };
  auto b = [&](const Poly& u, const Poly& v) { return br(sec(u), sec(v))[0]; };
  const Poly f2 = f * f;
  PoissonSkewDefect out;
  out.identity_defect = b(b(f2, g) + b(g, f2), h) - Rational(2) * ((b(f, g) + b(g, f)) * b(f, h));
  out.self_bracket = b(f, f);
  return out;
}

}  // namespace qdalg
