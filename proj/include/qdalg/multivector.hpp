#pragma once

// Polynomial multivector fields, the Schouten-Nijenhuis bracket, and rank-1
// Jacobi brackets built from a bivector and a vector field.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdalg/bracket.hpp"
#include "qdalg/derivation.hpp"

namespace qdalg {

/// sum_I P^I d_{i_1} ^ ... ^ d_{i_p} over strictly increasing index tuples I.
class Multivector {
 public:
  using Indices = std::vector<std::size_t>;

  Multivector() = default;
  // The zero p-vector.
  Multivector(std::size_t num_vars, std::size_t degree) : num_vars_(num_vars), degree_(degree) {}

  static Multivector function(const Poly& f);
  static Multivector vector_field(const Derivation& d);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t degree() const { return degree_; }
  const std::map<Indices, Poly>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  /// Component along increasing `indices`, zero if absent.
  Poly at(const Indices& indices) const;
  /// Skew-extended component for an arbitrary index tuple (zero on repeats).
  Poly skew_at(const Indices& indices) const;
  /// Adds `value` to the component along `indices` (any order, sign applied).
  void add(const Indices& indices, const Poly& value);

  Derivation to_derivation() const;

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const Poly& f, const Multivector& p);
  friend Multivector operator*(const Rational& c, const Multivector& p);
  friend bool operator==(const Multivector&, const Multivector&) = default;

  /// e.g. "x*d_x^d_y + (1 - y)*d_y^d_z"; functions print as polynomials.
  std::string to_string(std::span<const std::string> names) const;

 private:
  void require_compatible(const Multivector& other) const;

  std::size_t num_vars_ = 0;
  std::size_t degree_ = 0;
  std::map<Indices, Poly> comps_;
};

Multivector wedge(const Multivector& p, const Multivector& q);

/// i_{df} L as a vector field: component j is sum_i (d_i f) L^{ij}.
Derivation interior_df(const Poly& f, const Multivector& bivector);

/// Schouten-Nijenhuis bracket, degree p + q - 1, fixed by
///   [V_1^...^V_p, W_1^...^W_q] = sum_{s,t} (-1)^{s+t} [V_s,W_t] ^ V_1..^V_s..V_p ^ W_1..^W_t..W_q
///   [f, Q] = -i_{df} Q,   [P, g] = sum_s (-1)^{p-s} V_s(g) V_1..^V_s..V_p
/// For two functions the result is the zero function.
Multivector sn_bracket(const Multivector& p, const Multivector& q);

struct JacobiPairVerdict {
  bool holds = true;
  // 1: [G, L] != 0.  2: [L, L] + 2 L^G != 0.
  int failed_condition = 0;
  std::optional<Multivector> defect;
  explicit operator bool() const { return holds; }
};

/// [G, L]_SN = 0 and [L, L]_SN + 2 L ^ G = 0.
JacobiPairVerdict jacobi_pair_check(const Multivector& lambda, const Multivector& gamma);

/// Rank-1 bracket [f,g] = L(df,dg) + f G(g) - g G(f).
BidiffBracket jacobi_bracket(const Multivector& lambda, const Multivector& gamma);

/// i_{df} L + f G
Derivation hamiltonian_anchor(const Multivector& lambda, const Multivector& gamma, const Poly& f);

struct PoissonSkewDefect {
  Poly identity_defect;  // [[f^2,g] + [g,f^2], h] - 2([f,g] + [g,f])[f,h]
  Poly self_bracket;     // [f,f]
};

/// Requires rank 1, both slot checks and a zero jacobiator.
PoissonSkewDefect poisson_skew_identity_check(const BidiffBracket& br, const Poly& f, const Poly& g,
                                              const Poly& h);

}  // namespace qdalg
