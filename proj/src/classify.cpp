#include "qdalg/classify.hpp"

#include <stdexcept>

#include "qdalg/random.hpp"

namespace qdalg {

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::kTrue:
      return "true";
    case Tri::kFalse:
      return "false";
    case Tri::kNotApplicable:
      return "not-applicable";
  }
  return "?";
}

std::vector<std::pair<std::string, Tri>> ClassificationReport::flags() const {
  return {
      {"is_right_qd", is_right_qd},
      {"is_left_qd", is_left_qd},
      {"anchors_tensorial", anchors_tensorial},
      {"is_skew", is_skew},
      {"satisfies_jacobi", satisfies_jacobi},
      {"anchor_homomorphism", anchor_homomorphism},
      {"anchors_opposite", anchors_opposite},
      {"is_algebroid", is_algebroid},
      {"is_loday_algebroid", is_loday_algebroid},
      {"is_lie_algebroid", is_lie_algebroid},
      {"is_lie_qd_algebroid", is_lie_qd_algebroid},
      {"rank1_jacobi_form", rank1_jacobi_form},
  };
}

namespace {

// (Lambda, Gamma) read off a skew rank-1 QD bracket; the symmetric part of
// the second-order symbol must vanish.
std::pair<Multivector, Multivector> recover_jacobi_pair(const BidiffBracket& br, const AnchorData& left) {
  const std::size_t n = br.num_vars();
  Multivector lambda(n, 2);
  Multivector gamma(n, 1);
  const Rational half(1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    gamma.add({i}, left.rho_at(0, i));
    for (std::size_t j = 0; j < n; ++j) {
      if (!(left.m_at(0, i, j) + left.m_at(0, j, i)).is_zero()) {
        throw std::logic_error("skew rank-1 bracket with a symmetric second-order part");
      }
      if (i < j) lambda.add({i, j}, (left.m_at(0, i, j) - left.m_at(0, j, i)) * half);
    }
  }
  if (jacobi_bracket(lambda, gamma) != br) {
    throw std::logic_error("rank-1 Lie QD bracket differs from its recovered Jacobi form");
  }
  return {std::move(lambda), std::move(gamma)};
}

}  // namespace

ClassificationReport classify(const BidiffBracket& br) {
  ClassificationReport rep;
  rep.num_vars = br.num_vars();
  rep.rank = br.rank();

  rep.right = right_qd_check(br);
  rep.left = left_qd_check(br);
  const bool both = static_cast<bool>(rep.right) && static_cast<bool>(rep.left);
  rep.is_right_qd = tri(static_cast<bool>(rep.right));
  rep.is_left_qd = tri(static_cast<bool>(rep.left));

  bool tensorial = false;
  if (both) {
    tensorial = anchors_tensorial(br);
    rep.anchors_tensorial = tri(tensorial);
  }

  rep.skew = skew_check(br);
  rep.jacobi = jacobiator_is_zero(br);
  rep.is_skew = tri(rep.skew.holds);
  rep.satisfies_jacobi = tri(rep.jacobi.holds);

  if (both) {
    rep.homomorphism = anchor_homomorphism_check(br);
    rep.anchor_homomorphism = tri(rep.homomorphism->holds);
  }
  if (both && tensorial && rep.jacobi.holds) {
    rep.sign = loday_anchor_sign_check(br);
    rep.anchors_opposite = tri(rep.sign->holds);
  }

  const bool lie_qd = both && rep.skew.holds && rep.jacobi.holds;
  rep.is_algebroid = tri(both && tensorial);
  rep.is_loday_algebroid = tri(both && tensorial && rep.jacobi.holds);
  rep.is_lie_qd_algebroid = tri(lie_qd);
  rep.is_lie_algebroid = tri(lie_qd && tensorial);

  if (br.rank() == 1) {
    rep.rank1_jacobi_form = tri(lie_qd);
    if (lie_qd) {
      auto [lambda, gamma] = recover_jacobi_pair(br, *rep.right.anchor);
      rep.recovered_lambda = std::move(lambda);
      rep.recovered_gamma = std::move(gamma);
    }
  }
  return rep;
}

std::vector<ConfirmationOutcome> confirm_randomly(const BidiffBracket& br, const ClassificationReport& report,
                                                  std::size_t samples, std::uint32_t max_degree,
                                                  std::uint64_t seed) {
  RandomSource rnd(seed);
  const std::size_t n = br.num_vars();
  const std::size_t k = br.rank();
  auto section = [&] { return rnd.section(n, k, max_degree); };
  auto function = [&] { return rnd.poly(n, max_degree); };

  std::vector<ConfirmationOutcome> out;
  auto run = [&](std::string name, auto&& trial) {
    ConfirmationOutcome o{std::move(name), samples, true};
    for (std::size_t s = 0; s < samples && o.ok; ++s) o.ok = trial();
    out.push_back(std::move(o));
  };

  if (report.right) {
    const AnchorData& anchor = *report.right.anchor;
    run("right_qd", [&] {
      const Section x = section(), y = section();
      const Poly f = function();
      return (br(x, f * y) - f * br(x, y) - anchor.apply(x).apply(f) * y).is_zero();
    });
  }
  if (report.left) {
    const AnchorData& anchor = *report.left.anchor;
    run("left_qd", [&] {
      const Section x = section(), y = section();
      const Poly f = function();
      return (br(f * x, y) - f * br(x, y) - anchor.apply(y).apply(f) * x).is_zero();
    });
  }
  if (report.skew.holds) {
    run("skew", [&] {
      const Section x = section(), y = section();
      return (br(x, y) + br(y, x)).is_zero();
    });
  }
  if (report.jacobi.holds) {
    run("jacobi", [&] {
      const Section x = section(), y = section(), z = section();
      return jacobiator(br, x, y, z).is_zero();
    });
  }
  if (report.homomorphism && report.homomorphism->holds) {
    const AnchorData& anchor = *report.right.anchor;
    run("anchor_homomorphism", [&] {
      const Section x = section(), y = section();
      return (anchor.apply(br(x, y)) - commutator(anchor.apply(x), anchor.apply(y))).is_zero();
    });
  }
  return out;
}

}  // namespace qdalg
