#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qdalg/bracket.hpp"
#include "qdalg/multivector.hpp"
#include "qdalg/poly.hpp"
#include "qdalg/qder.hpp"
#include "qdalg/random.hpp"
#include "qdalg/section.hpp"

namespace qdtest {

using namespace qdalg;

// gmpxx leaves two-argument rationals unreduced.
inline Rational Q(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::vector<std::string> names(std::size_t n) { return default_var_names(n); }

inline Poly P(std::string_view src, std::size_t n = 2) {
  const auto vars = names(n);
  return parse_poly(src, vars);
}

inline Section S(std::vector<std::string_view> comps, std::size_t n = 2) {
  std::vector<Poly> ps;
  for (auto c : comps) ps.push_back(P(c, n));
  return Section(n, std::move(ps));
}

inline Derivation D(std::vector<std::string_view> comps) {
  const std::size_t n = comps.size();
  std::vector<Poly> ps;
  for (auto c : comps) ps.push_back(P(c, n));
  return Derivation(std::move(ps));
}

inline Multivector bivector(std::size_t n, std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::string_view>> entries) {
  Multivector m(n, 2);
  for (const auto& [ij, src] : entries) m.add({ij.first, ij.second}, P(src, n));
  return m;
}

inline Multivector field(std::vector<std::string_view> comps) { return Multivector::vector_field(D(comps)); }

// A D + b d componentwise: always a quasi-derivation with anchor b.
inline FirstOrderOperator random_qd(RandomSource& rnd, std::size_t n, std::size_t k, std::uint32_t deg) {
  FirstOrderOperator op = FirstOrderOperator::componentwise(rnd.derivation(n, deg, 2), k);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t a = 0; a < k; ++a) op.a(c, a) = rnd.poly(n, deg, 2);
  }
  return op;
}

inline FirstOrderOperator random_operator(RandomSource& rnd, std::size_t n, std::size_t k, std::uint32_t deg) {
  FirstOrderOperator op(n, k);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t a = 0; a < k; ++a) {
      op.a(c, a) = rnd.poly(n, deg, 2);
      for (std::size_t i = 0; i < n; ++i) {
        if (rnd.chance(40)) op.b(c, i, a) = rnd.poly(n, deg, 2);
      }
    }
  }
  return op;
}

inline Multivector random_multivector(RandomSource& rnd, std::size_t n, std::size_t p, std::uint32_t deg) {
  Multivector m(n, p);
  std::vector<std::size_t> idx(p);
  // enumerate increasing tuples
  auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (pos == p) {
      if (rnd.chance(60)) m.add(idx, rnd.poly(n, deg, 2, 2));
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return m;
}

// Brackets near the quasi-derivation locus: slot-wise QD shapes with
// occasional noise, and M tensors of several shapes.
inline BidiffBracket random_near_qd_bracket(RandomSource& rnd, std::size_t n, std::size_t k, std::uint32_t deg) {
  BidiffBracket br(n, k);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) br.c(c, a, b) = rnd.poly(n, deg, 2);
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      const Poly rho = rnd.poly(n, deg, 2);
      const Poly lam = rnd.poly(n, deg, 2);
      for (std::size_t b = 0; b < k; ++b) {
        br.r(b, i, a, b) += rho;
        br.l(b, i, b, a) += lam;
      }
    }
  }
  if (rnd.chance(25)) br.r(rnd.integer(0, k - 1), rnd.integer(0, n - 1), rnd.integer(0, k - 1), rnd.integer(0, k - 1)) += Poly::constant(n, 1);
  if (rnd.chance(25)) br.l(rnd.integer(0, k - 1), rnd.integer(0, n - 1), rnd.integer(0, k - 1), rnd.integer(0, k - 1)) += Poly::constant(n, 1);
  const auto shape = rnd.integer(0, 3);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t a = 0; a < k; ++a) {
        const Poly v = rnd.chance(50) ? rnd.poly(n, deg, 2) : Poly(n);
        for (std::size_t b = 0; b < k; ++b) {
          if (shape == 1) br.m(b, i, j, a, b) += v;  // right-slot shape
          if (shape == 2) br.m(b, i, j, b, a) += v;  // left-slot shape
        }
        if (shape == 3) br.m(a, i, j, a, a) += v;    // diagonal only
      }
    }
  }
  return br;
}

}  // namespace qdtest
