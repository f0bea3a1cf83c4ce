#include "qdalg/qder.hpp"

#include "qdalg/bracket.hpp"
#include "qdalg/errors.hpp"

namespace qdalg {

FirstOrderOperator::FirstOrderOperator(std::size_t num_vars, std::size_t rank)
    : num_vars_(num_vars),
      rank_(rank),
      zeroth_(rank * rank, Poly(num_vars)),
      first_(rank * num_vars * rank, Poly(num_vars)) {}

FirstOrderOperator FirstOrderOperator::identity(std::size_t num_vars, std::size_t rank) {
  return module_action(Poly::constant(num_vars, 1), rank);
}

FirstOrderOperator FirstOrderOperator::componentwise(const Derivation& d, std::size_t rank) {
  FirstOrderOperator op(d.num_vars(), rank);
  for (std::size_t a = 0; a < rank; ++a) {
    for (std::size_t i = 0; i < d.num_vars(); ++i) op.b(a, i, a) = d[i];
  }
  return op;
}

bool FirstOrderOperator::is_zero() const {
  for (const auto& p : zeroth_) {
    if (!p.is_zero()) return false;
  }
  for (const auto& p : first_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

Section FirstOrderOperator::apply(const Section& x) const {
  if (x.num_vars() != num_vars_ || x.rank() != rank_) throw ShapeError("operator/section shape mismatch");
  std::vector<Poly> dx;  // dx[a * n + i] = d_i X^a
  dx.reserve(rank_ * num_vars_);
  for (std::size_t a = 0; a < rank_; ++a) {
    for (std::size_t i = 0; i < num_vars_; ++i) dx.push_back(x[a].derivative(i));
  }
  Section out(num_vars_, rank_);
  for (std::size_t c = 0; c < rank_; ++c) {
    Poly acc(num_vars_);
    for (std::size_t a = 0; a < rank_; ++a) {
      if (!x[a].is_zero() && !this->a(c, a).is_zero()) acc += this->a(c, a) * x[a];
      for (std::size_t i = 0; i < num_vars_; ++i) {
        const Poly& coeff = b(c, i, a);
        const Poly& d = dx[a * num_vars_ + i];
        if (!coeff.is_zero() && !d.is_zero()) acc += coeff * d;
      }
    }
    out[c] = std::move(acc);
  }
  return out;
}

void FirstOrderOperator::require_same_shape(const FirstOrderOperator& other) const {
  if (other.num_vars_ != num_vars_ || other.rank_ != rank_) throw ShapeError("operator shape mismatch");
}

FirstOrderOperator& FirstOrderOperator::operator+=(const FirstOrderOperator& rhs) {
  require_same_shape(rhs);
  for (std::size_t i = 0; i < zeroth_.size(); ++i) zeroth_[i] += rhs.zeroth_[i];
  for (std::size_t i = 0; i < first_.size(); ++i) first_[i] += rhs.first_[i];
  return *this;
}

FirstOrderOperator& FirstOrderOperator::operator-=(const FirstOrderOperator& rhs) {
  require_same_shape(rhs);
  for (std::size_t i = 0; i < zeroth_.size(); ++i) zeroth_[i] -= rhs.zeroth_[i];
  for (std::size_t i = 0; i < first_.size(); ++i) first_[i] -= rhs.first_[i];
  return *this;
}

FirstOrderOperator operator*(const Poly& f, const FirstOrderOperator& d) {
  if (f.num_vars() != d.num_vars_) throw ShapeError("scalar has wrong arity");
  FirstOrderOperator r = d;
  for (auto& p : r.zeroth_) p = f * p;
  for (auto& p : r.first_) p = f * p;
  return r;
}

FirstOrderOperator module_action(const Poly& f, std::size_t rank) {
  FirstOrderOperator op(f.num_vars(), rank);
  for (std::size_t a = 0; a < rank; ++a) op.a(a, a) = f;
  return op;
}

QuasiDerivationVerdict is_quasi_derivation(const FirstOrderOperator& d) {
  const std::size_t n = d.num_vars();
  const std::size_t k = d.rank();
  QuasiDerivationVerdict verdict;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t from = 0; from < k; ++from) {
      for (std::size_t to = 0; to < k; ++to) {
        if (to == from) continue;
        if (!d.b(to, i, from).is_zero()) {
          verdict.witness = QdProbe{QdProbe::Kind::kOffDiagonal, i, from, to, d.b(to, i, from)};
          return verdict;
        }
        if (from == 0 && d.b(to, i, to) != d.b(0, i, 0)) {
          verdict.witness =
              QdProbe{QdProbe::Kind::kDiagonalMismatch, i, 0, to, d.b(to, i, to) - d.b(0, i, 0)};
          return verdict;
        }
      }
    }
  }
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back(k > 0 ? d.b(0, i, 0) : Poly(n));
  verdict.anchor = Derivation(std::move(comps));
  return verdict;
}

Derivation universal_anchor(const FirstOrderOperator& d) {
  auto verdict = is_quasi_derivation(d);
  if (!verdict) throw PreconditionError("operator is not a quasi-derivation");
  return *std::move(verdict.anchor);
}

FirstOrderOperator commutator(const FirstOrderOperator& d1, const FirstOrderOperator& d2) {
  if (d1.num_vars() != d2.num_vars() || d1.rank() != d2.rank()) {
    throw ShapeError("operator shape mismatch");
  }
  const std::size_t n = d1.num_vars();
  const std::size_t k = d1.rank();

  // Symmetrized second-order symbol of D1 o D2 - D2 o D1.
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          Poly s(n);
          for (std::size_t d = 0; d < k; ++d) {
            s += d1.b(c, i, d) * d2.b(d, j, a) - d2.b(c, i, d) * d1.b(d, j, a);
            if (i != j) s += d1.b(c, j, d) * d2.b(d, i, a) - d2.b(c, j, d) * d1.b(d, i, a);
          }
          if (!s.is_zero()) {
            throw UnsupportedInput("commutator of these operators is of second order");
          }
        }
      }
    }
  }

  FirstOrderOperator out(n, k);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t a = 0; a < k; ++a) {
      Poly zeroth(n);
      for (std::size_t d = 0; d < k; ++d) {
        zeroth += d1.a(c, d) * d2.a(d, a) - d2.a(c, d) * d1.a(d, a);
        for (std::size_t i = 0; i < n; ++i) {
          zeroth += d1.b(c, i, d) * d2.a(d, a).derivative(i) - d2.b(c, i, d) * d1.a(d, a).derivative(i);
        }
      }
      out.a(c, a) = std::move(zeroth);
      for (std::size_t j = 0; j < n; ++j) {
        Poly first(n);
        for (std::size_t d = 0; d < k; ++d) {
          first += d1.a(c, d) * d2.b(d, j, a) + d1.b(c, j, d) * d2.a(d, a);
          first -= d2.a(c, d) * d1.b(d, j, a) + d2.b(c, j, d) * d1.a(d, a);
          for (std::size_t i = 0; i < n; ++i) {
            first += d1.b(c, i, d) * d2.b(d, j, a).derivative(i) -
                     d2.b(c, i, d) * d1.b(d, j, a).derivative(i);
          }
        }
        out.b(c, j, a) = std::move(first);
      }
    }
  }
  return out;
}

FirstOrderOperator leibniz_defect(const FirstOrderOperator& d1, const FirstOrderOperator& d2,
                                  const Poly& f) {
  const Derivation anchor1 = universal_anchor(d1);
  if (!is_quasi_derivation(d2)) throw PreconditionError("second operator is not a quasi-derivation");
  return commutator(d1, f * d2) - f * commutator(d1, d2) - anchor1.apply(f) * d2;
}

FirstOrderOperator ad_operator(const BidiffBracket& br, const Section& x) {
  br.require_section(x);
  const std::size_t n = br.num_vars();
  const std::size_t k = br.rank();
  std::vector<Poly> dx;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t i = 0; i < n; ++i) dx.push_back(x[a].derivative(i));
  }
  FirstOrderOperator op(n, k);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t b = 0; b < k; ++b) {
      Poly zeroth(n);
      for (std::size_t a = 0; a < k; ++a) {
        if (x[a].is_zero()) continue;
        if (!br.c(c, a, b).is_zero()) zeroth += br.c(c, a, b) * x[a];
        for (std::size_t i = 0; i < n; ++i) {
          if (!br.l(c, i, a, b).is_zero()) zeroth += br.l(c, i, a, b) * dx[a * n + i];
        }
      }
      op.a(c, b) = std::move(zeroth);
      for (std::size_t j = 0; j < n; ++j) {
        Poly first(n);
        for (std::size_t a = 0; a < k; ++a) {
          if (x[a].is_zero()) continue;
          if (!br.r(c, j, a, b).is_zero()) first += br.r(c, j, a, b) * x[a];
          for (std::size_t i = 0; i < n; ++i) {
            if (!br.m(c, i, j, a, b).is_zero()) first += br.m(c, i, j, a, b) * dx[a * n + i];
          }
        }
        op.b(c, j, b) = std::move(first);
      }
    }
  }
  return op;
}

FirstOrderOperator right_operator(const BidiffBracket& br, const Section& z) {
  br.require_section(z);
  const std::size_t n = br.num_vars();
  const std::size_t k = br.rank();
  std::vector<Poly> dz;
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t j = 0; j < n; ++j) dz.push_back(z[b].derivative(j));
  }
  FirstOrderOperator op(n, k);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t a = 0; a < k; ++a) {
      Poly zeroth(n);
      for (std::size_t b = 0; b < k; ++b) {
        if (z[b].is_zero()) continue;
        if (!br.c(c, a, b).is_zero()) zeroth += br.c(c, a, b) * z[b];
        for (std::size_t j = 0; j < n; ++j) {
          if (!br.r(c, j, a, b).is_zero()) zeroth += br.r(c, j, a, b) * dz[b * n + j];
        }
      }
      op.a(c, a) = std::move(zeroth);
      for (std::size_t i = 0; i < n; ++i) {
        Poly first(n);
        for (std::size_t b = 0; b < k; ++b) {
          if (z[b].is_zero()) continue;
          if (!br.l(c, i, a, b).is_zero()) first += br.l(c, i, a, b) * z[b];
          for (std::size_t j = 0; j < n; ++j) {
            if (!br.m(c, i, j, a, b).is_zero()) first += br.m(c, i, j, a, b) * dz[b * n + j];
          }
        }
        op.b(c, i, a) = std::move(first);
      }
    }
  }
  return op;
}

}  // namespace qdalg
