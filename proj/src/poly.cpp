#include "qdalg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "qdalg/errors.hpp"

namespace qdalg {

std::uint32_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool grlex_less(const Exponents& a, const Exponents& b) {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

bool term_less(const Poly::Term& a, const Poly::Term& b) {
  return grlex_less(a.exps, b.exps);
}

std::vector<Poly::Term> canonicalize(std::vector<Poly::Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<Poly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

}  // namespace

Poly Poly::constant(std::size_t num_vars, const Rational& c) {
  Poly p(num_vars);
  if (c != 0) p.terms_.push_back({Exponents(num_vars, 0), c});
  return p;
}

Poly Poly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) {
    throw ShapeError("variable index " + std::to_string(index) +
                     " out of range for " + std::to_string(num_vars) +
                     " variables");
  }
  Exponents e(num_vars, 0);
  e[index] = 1;
  return monomial(std::move(e));
}

Poly Poly::monomial(Exponents exps, const Rational& c) {
  Poly p(exps.size());
  if (c != 0) p.terms_.push_back({std::move(exps), c});
  return p;
}

Poly Poly::from_terms(std::size_t num_vars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.exps.size() != num_vars) throw ShapeError("term arity mismatch");
  }
  Poly p(num_vars);
  p.terms_ = canonicalize(std::move(terms));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exps) == 0);
}

long Poly::degree() const {
  return terms_.empty() ? -1 : static_cast<long>(total_degree(terms_.back().exps));
}

Rational Poly::coefficient(const Exponents& exps) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exps,
                             [](const Term& t, const Exponents& e) { return grlex_less(t.exps, e); });
  if (it != terms_.end() && it->exps == exps) return it->coeff;
  return 0;
}

void Poly::require_same_vars(const Poly& other) const {
  if (num_vars_ != other.num_vars_) {
    throw ShapeError("polynomials over " + std::to_string(num_vars_) + " and " +
                     std::to_string(other.num_vars_) + " variables");
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_vars(rhs);
  if (rhs.terms_.empty()) return *this;
  if (&rhs == this) return *this *= Rational(2);
  if (terms_.empty()) {
    terms_ = rhs.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() && b != rhs.terms_.end()) {
    if (grlex_less(a->exps, b->exps)) {
      out.push_back(std::move(*a++));
    } else if (grlex_less(b->exps, a->exps)) {
      out.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.push_back({std::move(a->exps), std::move(c)});
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
  for (; b != rhs.terms_.end(); ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_vars(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.num_vars_);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].exps, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].exps, a.terms_[0].coeff);
  std::vector<Poly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Exponents e(s.exps);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += t.exps[i];
      prod.push_back({std::move(e), s.coeff * t.coeff});
    }
  }
  Poly r(a.num_vars_);
  r.terms_ = canonicalize(std::move(prod));
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.num_vars_ != b.num_vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

Poly Poly::times_monomial(const Exponents& exps, const Rational& c) const {
  if (exps.size() != num_vars_) throw ShapeError("monomial arity mismatch");
  Poly r(num_vars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(t.exps);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += exps[i];
    r.terms_.push_back({std::move(e), t.coeff * c});
  }
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(num_vars_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t index) const {
  if (index >= num_vars_) {
    throw ShapeError("derivative index " + std::to_string(index) + " out of range for " +
                     std::to_string(num_vars_) + " variables");
  }
  Poly r(num_vars_);
  for (const auto& t : terms_) {
    if (t.exps[index] == 0) continue;
    Exponents e(t.exps);
    Rational c = t.coeff * e[index];
    --e[index];
    r.terms_.push_back({std::move(e), std::move(c)});
  }
  return r;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) throw ShapeError("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      for (std::uint32_t k = 0; k < t.exps[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

std::string coefficient_prefix(const Poly& p, std::span<const std::string> names) {
  if (p.is_constant() && !p.is_zero()) {
    const Rational& c = p.terms()[0].coeff;
    if (c == 1) return "";
    if (c == -1) return "-";
  }
  if (p.size() == 1) return p.to_string(names) + "*";
  return "(" + p.to_string(names) + ")*";
}

std::string joined_term(bool first, const std::string& term) {
  if (first) return term;
  if (!term.empty() && term[0] == '-') return " - " + term.substr(1);
  return " + " + term;
}

std::vector<std::string> default_var_names(std::size_t num_vars) {
  static const char* const kShort[] = {"x", "y", "z"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < num_vars; ++i) {
    names.push_back(num_vars <= 3 ? std::string(kShort[i]) : "x" + std::to_string(i + 1));
  }
  return names;
}

std::string Poly::to_string() const {
  const auto names = default_var_names(num_vars_);
  return to_string(names);
}

std::string Poly::to_string(std::span<const std::string> names) const {
  if (names.size() != num_vars_) throw ShapeError("wrong number of variable names");
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->coeff;
    const bool negative = c < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      const auto e = it->exps[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[i];
      if (e > 1) mono += '^' + std::to_string(e);
    }
    if (mono.empty()) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << mono;
    } else {
      out << mag.get_str() << '*' << mono;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

constexpr std::uint32_t kMaxExponent = 1000;
constexpr std::size_t kMaxNesting = 256;

class PolyParser {
 public:
  PolyParser(std::string_view src, std::span<const std::string> vars)
      : src_(src), vars_(vars) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != src_.size()) {
      throw ParseError(std::string("unexpected character '") + src_[pos_] + "'", pos_);
    }
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (accept('^')) {
      skip_ws();
      const auto at = pos_;
      const mpz_class e = natural("exponent");
      if (e > kMaxExponent) throw ParseError("exponent too large", at);
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  Poly base() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = src_[pos_];
    if (c == '(') {
      if (++depth_ > kMaxNesting) throw ParseError("nesting too deep", pos_);
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      --depth_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const mpz_class num = natural("integer");
      mpz_class den = 1;
      if (accept('/')) {
        skip_ws();
        const auto at = pos_;
        den = natural("denominator");
        if (den == 0) throw ParseError("zero denominator", at);
      }
      Rational q(num, den);
      q.canonicalize();
      return Poly::constant(vars_.size(), q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = src_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return Poly::variable(vars_.size(), i);
      }
      throw ParseError("unknown variable '" + std::string(name) + "'", start);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  mpz_class natural(const char* what) {
    const auto start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
    return mpz_class(std::string(src_.substr(start, pos_ - start)), 10);
  }

  std::string_view src_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view src, std::span<const std::string> vars) {
  return PolyParser(src, vars).parse();
}

}  // namespace qdalg
