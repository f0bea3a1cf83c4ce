#include "qdalg/bracket.hpp"

#include <stdexcept>

#include "qdalg/errors.hpp"

namespace qdalg {

BidiffBracket::BidiffBracket(std::size_t num_vars, std::size_t rank)
    : num_vars_(num_vars),
      rank_(rank),
      c_(rank * rank * rank, Poly(num_vars)),
      l_(rank * rank * rank * num_vars, Poly(num_vars)),
      r_(rank * rank * rank * num_vars, Poly(num_vars)),
      m_(rank * rank * rank * num_vars * num_vars, Poly(num_vars)) {}

void BidiffBracket::require_section(const Section& s) const {
  if (s.num_vars() != num_vars_ || s.rank() != rank_) {
    throw ShapeError("section of shape (n=" + std::to_string(s.num_vars()) + ", k=" +
                     std::to_string(s.rank()) + ") does not match bracket (n=" +
                     std::to_string(num_vars_) + ", k=" + std::to_string(rank_) + ")");
  }
}

Section BidiffBracket::operator()(const Section& x, const Section& y) const {
  require_section(x);
  require_section(y);
  const std::size_t n = num_vars_;
  const std::size_t k = rank_;
  std::vector<Poly> dx, dy;
  dx.reserve(k * n);
  dy.reserve(k * n);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      dx.push_back(x[a].derivative(i));
      dy.push_back(y[a].derivative(i));
    }
  }
  Section out(n, k);
  for (std::size_t c = 0; c < k; ++c) {
    Poly acc(n);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (!this->c(c, a, b).is_zero()) acc += this->c(c, a, b) * (x[a] * y[b]);
        for (std::size_t i = 0; i < n; ++i) {
          const Poly& dxa = dx[a * n + i];
          const Poly& dyb = dy[b * n + i];
          if (!l(c, i, a, b).is_zero() && !dxa.is_zero()) acc += l(c, i, a, b) * (dxa * y[b]);
          if (!r(c, i, a, b).is_zero() && !dyb.is_zero()) acc += r(c, i, a, b) * (x[a] * dyb);
          for (std::size_t j = 0; j < n; ++j) {
            const Poly& coeff = m(c, i, j, a, b);
            if (coeff.is_zero() || dxa.is_zero() || dy[b * n + j].is_zero()) continue;
            acc += coeff * (dxa * dy[b * n + j]);
          }
        }
      }
    }
    out[c] = std::move(acc);
  }
  return out;
}

Section bracket_eval(const BidiffBracket& br, const Section& x, const Section& y) { return br(x, y); }

bool AnchorData::differential_part_zero() const {
  for (const auto& p : m) {
    if (!p.is_zero()) return false;
  }
  return true;
}

Derivation AnchorData::apply(const Section& x) const {
  if (x.num_vars() != num_vars || x.rank() != rank) throw ShapeError("anchor/section shape mismatch");
  const std::size_t n = num_vars;
  std::vector<Poly> comps(n, Poly(n));
  for (std::size_t a = 0; a < rank; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (!rho_at(a, i).is_zero()) comps[i] += rho_at(a, i) * x[a];
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Poly dj = x[a].derivative(j);
      if (dj.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (!m_at(a, j, i).is_zero()) comps[i] += m_at(a, j, i) * dj;
      }
    }
  }
  return Derivation(std::move(comps));
}

namespace {

Section unit_pair(std::size_t n, std::size_t k, std::size_t first, std::size_t second) {
  Section s = Section::basis(n, k, first);
  s += Section::basis(n, k, second);
  return s;
}

Section probe_section(std::size_t n, std::size_t k, std::size_t index, std::optional<std::size_t> var) {
  Exponents e(n, 0);
  if (var) e[*var] = 1;
  return Section::monomial(k, index, e);
}

}  // namespace

Poly slot_defect(const BidiffBracket& br, const SlotWitness& w, bool right_slot) {
  const Section d = right_slot ? br(w.x, w.f * w.y) - w.f * br(w.x, w.y)
                               : br(w.f * w.x, w.y) - w.f * br(w.x, w.y);
  Poly defect = d[w.component];
  if (w.reference) defect -= d[*w.reference];
  return defect;
}

SlotVerdict right_qd_check(const BidiffBracket& br) {
  const std::size_t n = br.num_vars();
  const std::size_t k = br.rank();
  SlotVerdict verdict;

  // First section index `a` (and derivative index `i`, if needed) at which
  // the coefficient pattern `differs` is nonzero.
  auto find_probe = [&](auto&& r_nonzero, auto&& m_nonzero) -> std::optional<Section> {
    for (std::size_t a = 0; a < k; ++a) {
      if (r_nonzero(a)) return probe_section(n, k, a, std::nullopt);
    }
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t i = 0; i < n; ++i) {
        if (m_nonzero(a, i)) return probe_section(n, k, a, i);
      }
    }
    return std::nullopt;
  };

  for (std::size_t j = 0; j < n; ++j) {
    const Poly f = Poly::variable(n, j);
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t c = 0; c < k; ++c) {
        if (c == b) continue;
        auto x = find_probe([&](std::size_t a) { return !br.r(c, j, a, b).is_zero(); },
                            [&](std::size_t a, std::size_t i) { return !br.m(c, i, j, a, b).is_zero(); });
        if (x) {
          SlotWitness w{*x, f, Section::basis(n, k, b), c, std::nullopt, Poly(n)};
          w.defect = slot_defect(br, w, true);
          verdict.witness = std::move(w);
          return verdict;
        }
      }
    }
    for (std::size_t b = 1; b < k; ++b) {
      auto x = find_probe([&](std::size_t a) { return br.r(b, j, a, b) != br.r(0, j, a, 0); },
                          [&](std::size_t a, std::size_t i) { return br.m(b, i, j, a, b) != br.m(0, i, j, a, 0); });
      if (x) {
        SlotWitness w{*x, f, unit_pair(n, k, 0, b), b, std::size_t{0}, Poly(n)};
        w.defect = slot_defect(br, w, true);
        verdict.witness = std::move(w);
        return verdict;
      }
    }
  }

  AnchorData anchor{n, k, {}, {}};
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t i = 0; i < n; ++i) anchor.rho.push_back(br.r(0, i, a, 0));
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) anchor.m.push_back(br.m(0, j, i, a, 0));
    }
  }
  verdict.anchor = std::move(anchor);
  return verdict;
}

SlotVerdict left_qd_check(const BidiffBracket& br) {
  const std::size_t n = br.num_vars();
  const std::size_t k = br.rank();
  SlotVerdict verdict;

  auto find_probe = [&](auto&& l_nonzero, auto&& m_nonzero) -> std::optional<Section> {
    for (std::size_t b = 0; b < k; ++b) {
      if (l_nonzero(b)) return probe_section(n, k, b, std::nullopt);
    }
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m_nonzero(b, j)) return probe_section(n, k, b, j);
      }
    }
    return std::nullopt;
  };

  for (std::size_t i = 0; i < n; ++i) {
    const Poly f = Poly::variable(n, i);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t c = 0; c < k; ++c) {
        if (c == a) continue;
        auto y = find_probe([&](std::size_t b) { return !br.l(c, i, a, b).is_zero(); },
                            [&](std::size_t b, std::size_t j) { return !br.m(c, i, j, a, b).is_zero(); });
        if (y) {
          SlotWitness w{Section::basis(n, k, a), f, *y, c, std::nullopt, Poly(n)};
          w.defect = slot_defect(br, w, false);
          verdict.witness = std::move(w);
          return verdict;
        }
      }
    }
    for (std::size_t a = 1; a < k; ++a) {
      auto y = find_probe([&](std::size_t b) { return br.l(a, i, a, b) != br.l(0, i, 0, b); },
                          [&](std::size_t b, std::size_t j) { return br.m(a, i, j, a, b) != br.m(0, i, j, 0, b); });
      if (y) {
        SlotWitness w{unit_pair(n, k, 0, a), f, *y, a, std::size_t{0}, Poly(n)};
        w.defect = slot_defect(br, w, false);
        verdict.witness = std::move(w);
        return verdict;
      }
    }
  }

  AnchorData anchor{n, k, {}, {}};
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t i = 0; i < n; ++i) anchor.rho.push_back(br.l(0, i, 0, b));
  }
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) anchor.m.push_back(br.m(0, i, j, 0, b));
    }
  }
  verdict.anchor = std::move(anchor);
  return verdict;
}

namespace {

AnchorData require_left_anchor(const BidiffBracket& br) {
  auto v = right_qd_check(br);
  if (!v) throw PreconditionError("bracket is not a quasi-derivation in its second argument");
  return *std::move(v.anchor);
}

AnchorData require_right_anchor(const BidiffBracket& br) {
  auto v = left_qd_check(br);
  if (!v) throw PreconditionError("bracket is not a quasi-derivation in its first argument");
  return *std::move(v.anchor);
}

}  // namespace

Derivation left_anchor(const BidiffBracket& br, const Section& x) {
  br.require_section(x);
  return require_left_anchor(br).apply(x);
}

Derivation right_anchor(const BidiffBracket& br, const Section& y) {
  br.require_section(y);
  return require_right_anchor(br).apply(y);
}

bool anchors_tensorial(const BidiffBracket& br) {
  const AnchorData left = require_left_anchor(br);
  const AnchorData right = require_right_anchor(br);
  const bool tensorial = left.differential_part_zero() && right.differential_part_zero();
  if (br.rank() > 1 && !tensorial) {
    throw std::logic_error("QD bracket of rank > 1 with a differential anchor");
  }
  return tensorial;
}

Section expansion_identity_defect(const BidiffBracket& br, const Poly& f, const Poly& g, const Section& x,
                            const Section& y) {
  br.require_section(x);
  br.require_section(y);
  const AnchorData left = require_left_anchor(br);
  const AnchorData right = require_right_anchor(br);
  const Poly lhs = left.apply(g * x).apply(f) - g * left.apply(x).apply(f);
  const Poly rhs = right.apply(f * y).apply(g) - f * right.apply(y).apply(g);
  return lhs * y - rhs * x;
}

SkewVerdict skew_check(const BidiffBracket& br) {
  const auto grid = monomial_sections(br.num_vars(), br.rank(), 1);
  SkewVerdict verdict;
  for (std::size_t p = 0; p < grid.size(); ++p) {
    for (std::size_t q = p; q < grid.size(); ++q) {
      Section s = br(grid[p], grid[q]) + br(grid[q], grid[p]);
      if (!s.is_zero()) {
        verdict.holds = false;
        verdict.witness = PairWitness{grid[p], grid[q], std::move(s)};
        return verdict;
      }
    }
  }
  return verdict;
}

Section jacobiator(const BidiffBracket& br, const Section& x, const Section& y, const Section& z) {
  return br(br(x, y), z) - br(x, br(y, z)) + br(y, br(x, z));
}

JacobiVerdict jacobiator_is_zero(const BidiffBracket& br) {
  const auto grid = monomial_sections(br.num_vars(), br.rank(), 2);
  const std::size_t g = grid.size();
  std::vector<FirstOrderOperator> ad, right;
  ad.reserve(g);
  right.reserve(g);
  for (const auto& s : grid) {
    ad.push_back(ad_operator(br, s));
    right.push_back(right_operator(br, s));
  }
  std::vector<Section> pair;  // pair[u * g + v] = [u, v]
  pair.reserve(g * g);
  for (std::size_t u = 0; u < g; ++u) {
    for (std::size_t v = 0; v < g; ++v) pair.push_back(ad[u].apply(grid[v]));
  }
  JacobiVerdict verdict;
  for (std::size_t x = 0; x < g; ++x) {
    for (std::size_t y = 0; y < g; ++y) {
      for (std::size_t z = 0; z < g; ++z) {
        Section j = right[z].apply(pair[x * g + y]) - ad[x].apply(pair[y * g + z]) +
                    ad[y].apply(pair[x * g + z]);
        if (!j.is_zero()) {
          verdict.holds = false;
          verdict.witness = TripleWitness{grid[x], grid[y], grid[z], std::move(j)};
          return verdict;
        }
      }
    }
  }
  return verdict;
}

HomomorphismVerdict anchor_homomorphism_check(const BidiffBracket& br) {
  const AnchorData left = require_left_anchor(br);
  require_right_anchor(br);
  const auto grid = monomial_sections(br.num_vars(), br.rank(), 2);
  std::vector<Derivation> anchors;
  anchors.reserve(grid.size());
  for (const auto& s : grid) anchors.push_back(left.apply(s));
  HomomorphismVerdict verdict;
  for (std::size_t p = 0; p < grid.size(); ++p) {
    for (std::size_t q = 0; q < grid.size(); ++q) {
      Derivation d = left.apply(br(grid[p], grid[q])) - commutator(anchors[p], anchors[q]);
      if (!d.is_zero()) {
        verdict.holds = false;
        verdict.witness = HomomorphismWitness{grid[p], grid[q], std::move(d)};
        return verdict;
      }
    }
  }
  return verdict;
}

AnchorSignVerdict loday_anchor_sign_check(const BidiffBracket& br) {
  if (!anchors_tensorial(br)) throw PreconditionError("anchors are not tensorial");
  if (!jacobiator_is_zero(br)) throw PreconditionError("bracket does not satisfy the Jacobi identity");
  const AnchorData left = require_left_anchor(br);
  const AnchorData right = require_right_anchor(br);
  AnchorSignVerdict verdict;
  for (std::size_t a = 0; a < br.rank(); ++a) {
    for (std::size_t i = 0; i < br.num_vars(); ++i) {
      Poly sum = left.rho_at(a, i) + right.rho_at(a, i);
      if (!sum.is_zero()) {
        verdict.holds = false;
        verdict.witness = AnchorSignWitness{a, i, std::move(sum)};
        return verdict;
      }
    }
  }
  return verdict;
}

PointwiseSkew pointwise_skew_at(const BidiffBracket& br, std::span<const Rational> point) {
  const std::size_t n = br.num_vars();
  const std::size_t k = br.rank();
  if (point.size() != n) throw ShapeError("point has wrong dimension");
  if (!anchors_tensorial(br)) throw PreconditionError("anchors are not tensorial");
  if (!jacobiator_is_zero(br)) throw PreconditionError("bracket does not satisfy the Jacobi identity");
  const AnchorData left = require_left_anchor(br);

  PointwiseSkew result;
  bool anchor_vanishes = true;
  for (const auto& p : left.rho) {
    if (p.evaluate(point) != 0) {
      anchor_vanishes = false;
      break;
    }
  }
  if (anchor_vanishes) {
    result.outcome = PointwiseSkew::Outcome::kAnchorVanishes;
    return result;
  }
  auto fail = [&](std::string tensor, std::vector<std::size_t> idx, Rational v) {
    result.outcome = PointwiseSkew::Outcome::kNotSkew;
    result.tensor = std::move(tensor);
    result.indices = std::move(idx);
    result.value = std::move(v);
  };
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        Rational v = br.c(c, a, b).evaluate(point) + br.c(c, b, a).evaluate(point);
        if (v != 0) {
          fail("C", {c, a, b}, v);
          return result;
        }
      }
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          Rational v = br.l(c, i, a, b).evaluate(point) + br.r(c, i, b, a).evaluate(point);
          if (v != 0) {
            fail("L", {c, i, a, b}, v);
            return result;
          }
        }
      }
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = 0; b < k; ++b) {
            Rational v = br.m(c, i, j, a, b).evaluate(point) + br.m(c, j, i, b, a).evaluate(point);
            if (v != 0) {
              fail("M", {c, i, j, a, b}, v);
              return result;
            }
          }
        }
      }
    }
  }
  result.outcome = PointwiseSkew::Outcome::kSkew;
  return result;
}

BidiffBracket tangent_algebroid(std::size_t n) {
  if (n == 0) throw std::invalid_argument("tangent algebroid needs at least one variable");
  BidiffBracket br(n, n);
  const Poly one = Poly::constant(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      br.l(a, b, a, b) = -one;
      br.r(b, a, a, b) = one;
    }
  }
  return br;
}

BidiffBracket rank1_from_vector_field(const Derivation& gamma) {
  const std::size_t n = gamma.num_vars();
  BidiffBracket br(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    br.r(0, i, 0, 0) = gamma[i];
    br.l(0, i, 0, 0) = -gamma[i];
  }
  return br;
}

BidiffBracket structure_constant_algebra(std::size_t rank, const std::vector<Rational>& consts) {
  if (consts.size() != rank * rank * rank) throw ShapeError("expected rank^3 structure constants");
  BidiffBracket br(0, rank);
  for (std::size_t c = 0; c < rank; ++c) {
    for (std::size_t a = 0; a < rank; ++a) {
      for (std::size_t b = 0; b < rank; ++b) {
        br.c(c, a, b) = Poly::constant(0, consts[(c * rank + a) * rank + b]);
      }
    }
  }
  return br;
}

}  // namespace qdalg
