#pragma once

// Brackets on E = A^k that are first-order bidifferential operators, and the
// decision procedures for the QD-algebroid axioms.
//
//   [X,Y]^c = sum_{a,b} ( C^c_ab X^a Y^b
//                       + L^{c,i}_ab (d_i X^a) Y^b
//                       + R^{c,i}_ab X^a (d_i Y^b)
//                       + M^{c,ij}_ab (d_i X^a)(d_j Y^b) )
//
// Identities that are differential in each slot of order <= d are decided by
// evaluating them on every monomial section x^b e_a with |b| <= d: the values
// on monomials determine the coefficients triangularly.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qdalg/derivation.hpp"
#include "qdalg/qder.hpp"
#include "qdalg/section.hpp"

namespace qdalg {

class BidiffBracket {
 public:
  BidiffBracket() = default;
  // The zero bracket.
  BidiffBracket(std::size_t num_vars, std::size_t rank);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t rank() const { return rank_; }

  const Poly& c(std::size_t c, std::size_t a, std::size_t b) const { return c_[ic(c, a, b)]; }
  Poly& c(std::size_t c, std::size_t a, std::size_t b) { return c_[ic(c, a, b)]; }
  const Poly& l(std::size_t c, std::size_t i, std::size_t a, std::size_t b) const { return l_[ilr(c, i, a, b)]; }
  Poly& l(std::size_t c, std::size_t i, std::size_t a, std::size_t b) { return l_[ilr(c, i, a, b)]; }
  const Poly& r(std::size_t c, std::size_t i, std::size_t a, std::size_t b) const { return r_[ilr(c, i, a, b)]; }
  Poly& r(std::size_t c, std::size_t i, std::size_t a, std::size_t b) { return r_[ilr(c, i, a, b)]; }
  const Poly& m(std::size_t c, std::size_t i, std::size_t j, std::size_t a, std::size_t b) const {
    return m_[im(c, i, j, a, b)];
  }
  Poly& m(std::size_t c, std::size_t i, std::size_t j, std::size_t a, std::size_t b) {
    return m_[im(c, i, j, a, b)];
  }

  Section operator()(const Section& x, const Section& y) const;

  void require_section(const Section& s) const;
  friend bool operator==(const BidiffBracket&, const BidiffBracket&) = default;

 private:
  std::size_t ic(std::size_t c, std::size_t a, std::size_t b) const { return (c * rank_ + a) * rank_ + b; }
  std::size_t ilr(std::size_t c, std::size_t i, std::size_t a, std::size_t b) const {
    return ((c * num_vars_ + i) * rank_ + a) * rank_ + b;
  }
  std::size_t im(std::size_t c, std::size_t i, std::size_t j, std::size_t a, std::size_t b) const {
    return (((c * num_vars_ + i) * num_vars_ + j) * rank_ + a) * rank_ + b;
  }

  std::size_t num_vars_ = 0;
  std::size_t rank_ = 0;
  std::vector<Poly> c_, l_, r_, m_;
};

Section bracket_eval(const BidiffBracket& br, const Section& x, const Section& y);

/// Coefficients of an anchor map X -> X^:
///   X^(f) = sum_{a,i} ( rho^i_a X^a + sum_j m^{ji}_a d_j X^a ) d_i f
struct AnchorData {
  std::size_t num_vars = 0;
  std::size_t rank = 0;
  std::vector<Poly> rho;  // rho[a * n + i]
  std::vector<Poly> m;    // m[(a * n + j) * n + i]

  const Poly& rho_at(std::size_t a, std::size_t i) const { return rho[a * num_vars + i]; }
  const Poly& m_at(std::size_t a, std::size_t j, std::size_t i) const {
    return m[(a * num_vars + j) * num_vars + i];
  }
  bool differential_part_zero() const;
  Derivation apply(const Section& x) const;
};

/// Failing instance of the slot-wise quasi-derivation property. For the
/// right slot D = [X, fY] - f[X,Y], for the left slot D = [fX, Y] - f[X,Y];
/// a quasi-derivation forces D to be a multiple of the moved section, so
/// defect = D^component - D^reference (or D^component alone) must vanish.
struct SlotWitness {
  Section x;
  Poly f;
  Section y;
  std::size_t component = 0;
  std::optional<std::size_t> reference;
  Poly defect;
};

struct SlotVerdict {
  std::optional<AnchorData> anchor;
  std::optional<SlotWitness> witness;
  explicit operator bool() const { return anchor.has_value(); }
};

/// Quasi-derivation property in the second slot; yields the left anchor X -> X^.
SlotVerdict right_qd_check(const BidiffBracket& br);
/// Quasi-derivation property in the first slot; yields the right anchor Y -> Y~.
SlotVerdict left_qd_check(const BidiffBracket& br);

/// The defect of a slot witness, recomputed from the bracket.
Poly slot_defect(const BidiffBracket& br, const SlotWitness& w, bool right_slot);

Derivation left_anchor(const BidiffBracket& br, const Section& x);
Derivation right_anchor(const BidiffBracket& br, const Section& y);

/// True iff both anchor maps are A-linear. Requires both slot checks.
bool anchors_tensorial(const BidiffBracket& br);

/// Difference of the two expansions of [gX, fY]:
///   (hat(gX) - g hat(X))(f) Y - (tilde(fY) - f tilde(Y))(g) X
/// Requires both slot checks.
Section expansion_identity_defect(const BidiffBracket& br, const Poly& f, const Poly& g, const Section& x,
                            const Section& y);

struct PairWitness {
  Section x;
  Section y;
  Section defect;
};

struct SkewVerdict {
  bool holds = true;
  std::optional<PairWitness> witness;
  explicit operator bool() const { return holds; }
};

/// [X,Y] + [Y,X] = 0, decided on monomial sections of degree <= 1.
SkewVerdict skew_check(const BidiffBracket& br);

struct TripleWitness {
  Section x;
  Section y;
  Section z;
  Section defect;
};

struct JacobiVerdict {
  bool holds = true;
  std::optional<TripleWitness> witness;
  explicit operator bool() const { return holds; }
};

/// J(X,Y,Z) = [[X,Y],Z] - [X,[Y,Z]] + [Y,[X,Z]]
Section jacobiator(const BidiffBracket& br, const Section& x, const Section& y, const Section& z);
/// Decided on monomial sections of degree <= 2.
JacobiVerdict jacobiator_is_zero(const BidiffBracket& br);

struct HomomorphismWitness {
  Section x;
  Section y;
  Derivation defect;
};

struct HomomorphismVerdict {
  bool holds = true;
  std::optional<HomomorphismWitness> witness;
  explicit operator bool() const { return holds; }
};

/// [X,Y]^ = [X^, Y^] on monomial sections of degree <= 2. Requires both slot checks.
HomomorphismVerdict anchor_homomorphism_check(const BidiffBracket& br);

struct AnchorSignWitness {
  std::size_t section_index;
  std::size_t variable;
  Poly defect;  // rho^i_a + lambda^i_a
};

struct AnchorSignVerdict {
  bool holds = true;
  std::optional<AnchorSignWitness> witness;
  explicit operator bool() const { return holds; }
};

/// Left and right anchors differ by sign. Requires both slot checks, a zero
/// jacobiator and tensorial anchors.
AnchorSignVerdict loday_anchor_sign_check(const BidiffBracket& br);

struct PointwiseSkew {
  enum class Outcome { kAnchorVanishes, kSkew, kNotSkew };
  Outcome outcome = Outcome::kSkew;
  // On kNotSkew: which coefficient family of [X,Y] + [Y,X] is nonzero at the point.
  std::string tensor;
  std::vector<std::size_t> indices;
  Rational value;
};

/// Evaluates the symmetrized bracket's coefficients at `point`; they must
/// vanish wherever the left anchor does not. Requires tensorial anchors and a
/// zero jacobiator.
PointwiseSkew pointwise_skew_at(const BidiffBracket& br, std::span<const Rational> point);

/// The bracket of vector fields on n variables, sections identified with
/// vector fields.
BidiffBracket tangent_algebroid(std::size_t n);

/// Rank-1 bracket f G(g) - g G(f).
BidiffBracket rank1_from_vector_field(const Derivation& gamma);

/// n = 0 bracket from structure constants: [e_a, e_b] = sum_c consts[(c*k+a)*k+b] e_c.
BidiffBracket structure_constant_algebra(std::size_t rank, const std::vector<Rational>& consts);

}  // namespace qdalg
