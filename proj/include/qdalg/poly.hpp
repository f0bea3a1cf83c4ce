#pragma once

// Exact sparse multivariate polynomials over Q.
//
// A Poly over n variables is a finite list of terms (exponent vector,
// nonzero rational coefficient) kept sorted in ascending graded-lex order
// (total degree first, then lexicographic with x_1 most significant).
// The representation is canonical, so structural equality is polynomial
// equality.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qdalg {

using Rational = mpq_class;
using Exponents = std::vector<std::uint32_t>;

/// Graded-lex strict order on exponent vectors of equal length.
bool grlex_less(const Exponents& a, const Exponents& b);
std::uint32_t total_degree(const Exponents& e);

class Poly {
 public:
  struct Term {
    Exponents exps;
    Rational coeff;
  };

  Poly() = default;
  explicit Poly(std::size_t num_vars) : num_vars_(num_vars) {}

  static Poly constant(std::size_t num_vars, const Rational& c);
  static Poly variable(std::size_t num_vars, std::size_t index);
  static Poly monomial(Exponents exps, const Rational& c = 1);
  // Terms may be unsorted, repeated or zero; the result is canonical.
  static Poly from_terms(std::size_t num_vars, std::vector<Term> terms);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // -1 for the zero polynomial.
  long degree() const;
  Rational coefficient(const Exponents& exps) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  // Multiply by c * x^exps without re-sorting (graded-lex is a monomial order).
  Poly times_monomial(const Exponents& exps, const Rational& c = 1) const;
  Poly pow(unsigned e) const;

  /// Formal partial derivative with respect to x_index.
  Poly derivative(std::size_t index) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Descending graded-lex, e.g. "x^2*y - 1/2*y + 3". Re-parses to itself.
  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

 private:
  void require_same_vars(const Poly& other) const;

  std::size_t num_vars_ = 0;
  std::vector<Term> terms_;
};

/// Prefix for `p` multiplying a basis symbol: "" for 1, "-" for -1, "3*x*" for
/// a single term, "(x + 1)*" otherwise.
std::string coefficient_prefix(const Poly& p, std::span<const std::string> names);

/// Appends a signed term to a sum: "a", then " + b" or " - b".
std::string joined_term(bool first, const std::string& term);

/// x, y, z for up to three variables, x1..xn otherwise.
std::vector<std::string> default_var_names(std::size_t num_vars);

/// Parses the polynomial grammar
///   expr   := ["+"|"-"] term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := base ("^" nat)?
///   base   := rational | var | "(" expr ")"
///   rational := int ("/" nat)?
/// over the given ordered variable names. Throws ParseError with the byte
/// offset of the offending token.
Poly parse_poly(std::string_view src, std::span<const std::string> vars);

}  // namespace qdalg
