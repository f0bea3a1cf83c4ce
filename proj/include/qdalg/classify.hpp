#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdalg/bracket.hpp"
#include "qdalg/multivector.hpp"

namespace qdalg {

enum class Tri { kFalse, kTrue, kNotApplicable };

std::string_view to_string(Tri t);
inline Tri tri(bool b) { return b ? Tri::kTrue : Tri::kFalse; }

struct ClassificationReport {
  std::size_t num_vars = 0;
  std::size_t rank = 0;

  Tri is_right_qd = Tri::kFalse;
  Tri is_left_qd = Tri::kFalse;
  Tri anchors_tensorial = Tri::kNotApplicable;
  Tri is_skew = Tri::kFalse;
  Tri satisfies_jacobi = Tri::kFalse;
  Tri anchor_homomorphism = Tri::kNotApplicable;
  Tri anchors_opposite = Tri::kNotApplicable;
  Tri is_algebroid = Tri::kFalse;
  Tri is_loday_algebroid = Tri::kFalse;
  Tri is_lie_algebroid = Tri::kFalse;
  Tri is_lie_qd_algebroid = Tri::kFalse;
  Tri rank1_jacobi_form = Tri::kNotApplicable;

  SlotVerdict right;  // carries the left anchor
  SlotVerdict left;   // carries the right anchor
  SkewVerdict skew;
  JacobiVerdict jacobi;
  std::optional<HomomorphismVerdict> homomorphism;
  std::optional<AnchorSignVerdict> sign;

  // Rank 1 with a Lie bracket: the bracket equals L(df,dg) + f G(g) - g G(f).
  std::optional<Multivector> recovered_lambda;
  std::optional<Multivector> recovered_gamma;

  /// Flag table in report order.
  std::vector<std::pair<std::string, Tri>> flags() const;
};

/// Runs every check in dependency order. Failures are recorded, never thrown.
ClassificationReport classify(const BidiffBracket& br);

struct ConfirmationOutcome {
  std::string check;
  std::size_t samples = 0;
  bool ok = true;
};

/// Re-tests each positive grid verdict of `report` on random sections and
/// functions of degree <= max_degree with a fixed seed.
std::vector<ConfirmationOutcome> confirm_randomly(const BidiffBracket& br, const ClassificationReport& report,
                                                  std::size_t samples, std::uint32_t max_degree,
                                                  std::uint64_t seed);

}  // namespace qdalg
