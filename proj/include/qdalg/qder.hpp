#pragma once

// First-order differential operators on the free module E = A^k and the
// quasi-derivation machinery on top of them: the universal anchor, the
// commutator bracket, and the adjoint operators of a bracket.

#include <cstddef>
#include <optional>
#include <vector>

#include "qdalg/derivation.hpp"
#include "qdalg/section.hpp"

namespace qdalg {

class BidiffBracket;

/// (D X)^c = sum_a A^c_a X^a + sum_{a,i} B^{c,i}_a d_i X^a
class FirstOrderOperator {
 public:
  FirstOrderOperator() = default;
  // The zero operator.
  FirstOrderOperator(std::size_t num_vars, std::size_t rank);

  static FirstOrderOperator identity(std::size_t num_vars, std::size_t rank);
  /// The same derivation acting on every component.
  static FirstOrderOperator componentwise(const Derivation& d, std::size_t rank);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t rank() const { return rank_; }

  const Poly& a(std::size_t c, std::size_t a) const { return zeroth_[c * rank_ + a]; }
  Poly& a(std::size_t c, std::size_t a) { return zeroth_[c * rank_ + a]; }
  const Poly& b(std::size_t c, std::size_t i, std::size_t a) const { return first_[index(c, i, a)]; }
  Poly& b(std::size_t c, std::size_t i, std::size_t a) { return first_[index(c, i, a)]; }

  bool is_zero() const;
  Section apply(const Section& x) const;

  FirstOrderOperator& operator+=(const FirstOrderOperator& rhs);
  FirstOrderOperator& operator-=(const FirstOrderOperator& rhs);
  friend FirstOrderOperator operator+(FirstOrderOperator l, const FirstOrderOperator& r) { return l += r; }
  friend FirstOrderOperator operator-(FirstOrderOperator l, const FirstOrderOperator& r) { return l -= r; }
  /// f D = f_E o D
  friend FirstOrderOperator operator*(const Poly& f, const FirstOrderOperator& d);
  friend bool operator==(const FirstOrderOperator&, const FirstOrderOperator&) = default;

 private:
  std::size_t index(std::size_t c, std::size_t i, std::size_t a) const {
    return (c * num_vars_ + i) * rank_ + a;
  }
  void require_same_shape(const FirstOrderOperator& other) const;

  std::size_t num_vars_ = 0;
  std::size_t rank_ = 0;
  std::vector<Poly> zeroth_;
  std::vector<Poly> first_;
};

/// f_E : X -> f X
FirstOrderOperator module_action(const Poly& f, std::size_t rank);

/// Why [D, f_E] fails to be a module multiplication for f = x_variable.
struct QdProbe {
  enum class Kind {
    // [D, x_i E](e_from) has a nonzero component `defect` along e_to, to != from.
    kOffDiagonal,
    // [D, x_i E] scales e_from and e_to by different factors; defect is
    // (factor on e_to) - (factor on e_from).
    kDiagonalMismatch,
  };
  Kind kind;
  std::size_t variable;
  std::size_t from;
  std::size_t to;
  Poly defect;
};

struct QuasiDerivationVerdict {
  std::optional<Derivation> anchor;
  std::optional<QdProbe> witness;
  explicit operator bool() const { return anchor.has_value(); }
};

/// D is a quasi-derivation iff its first-order part is b^i d_i acting
/// diagonally with b independent of the component. Probing with the
/// coordinate functions decides [D, A_E] in A_E because the coefficients are
/// polynomial.
QuasiDerivationVerdict is_quasi_derivation(const FirstOrderOperator& d);

/// The derivation D^ with [D, f_E] = (D^ f)_E. Throws PreconditionError when
/// d is not a quasi-derivation.
Derivation universal_anchor(const FirstOrderOperator& d);

/// [D1, D2] = D1 o D2 - D2 o D1. Throws UnsupportedInput when the result has
/// a nonvanishing second-order part, which cannot happen if either input is a
/// quasi-derivation.
FirstOrderOperator commutator(const FirstOrderOperator& d1, const FirstOrderOperator& d2);

/// [D1, f D2] - f [D1, D2] - D1^(f) D2; zero for quasi-derivations.
FirstOrderOperator leibniz_defect(const FirstOrderOperator& d1, const FirstOrderOperator& d2,
                                  const Poly& f);

/// ad_X = [X, .] as a first-order operator.
FirstOrderOperator ad_operator(const BidiffBracket& bracket, const Section& x);
/// The right multiplication Y -> [Y, Z].
FirstOrderOperator right_operator(const BidiffBracket& bracket, const Section& z);

}  // namespace qdalg
