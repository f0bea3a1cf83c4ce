#include "qdalg/selftest.hpp"

#include <array>
#include <sstream>

#include "qdalg/bracket.hpp"
#include "qdalg/multivector.hpp"
#include "qdalg/random.hpp"

namespace qdalg {

SweepResult rank1_line_sweep() {
  SweepResult out;
  std::array<Poly, 9> lines;
  std::size_t idx = 0;
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      lines[idx++] = Poly::constant(1, a) + Poly::constant(1, b) * Poly::variable(1, 0);
    }
  }
  for (const auto& c : lines) {
    for (const auto& l : lines) {
      for (const auto& r : lines) {
        for (const auto& m : lines) {
          BidiffBracket br(1, 1);
          br.c(0, 0, 0) = c;
          br.l(0, 0, 0, 0) = l;
          br.r(0, 0, 0, 0) = r;
          br.m(0, 0, 0, 0, 0) = m;
          ++out.brackets;
          if (!right_qd_check(br) || !left_qd_check(br)) continue;
          ++out.quasi_derivation_both;
          if (!jacobiator_is_zero(br)) continue;
          ++out.jacobi_structures;
          if (!skew_check(br)) ++out.skew_violations;
        }
      }
    }
  }
  return out;
}

namespace {

struct Candidate {
  Multivector lambda;
  Multivector gamma;
};

Multivector random_bivector(RandomSource& rnd, std::size_t n, std::uint32_t deg) {
  Multivector m(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m.add({i, j}, rnd.poly(n, deg, 2, 2));
  }
  return m;
}

Multivector random_field(RandomSource& rnd, std::size_t n, std::uint32_t deg) {
  return Multivector::vector_field(rnd.derivation(n, deg, 2));
}

Multivector constant_field(std::size_t n, const std::vector<Rational>& v) {
  Multivector m(n, 1);
  for (std::size_t i = 0; i < n; ++i) m.add({i}, Poly::constant(n, v[i]));
  return m;
}

Rational nonzero(RandomSource& rnd) {
  std::int64_t c = rnd.integer(1, 3);
  return Rational(rnd.chance(50) ? c : -c);
}

Candidate constructed(RandomSource& rnd, std::size_t kind) {
  switch (kind) {
    case 0: {  // Lambda = 0
      const std::size_t n = rnd.integer(1, 3);
      return {Multivector(n, 2), random_field(rnd, n, 2)};
    }
    case 1: {  // Poisson in at most two variables
      const std::size_t n = rnd.integer(1, 2);
      return {random_bivector(rnd, n, 2), Multivector(n, 1)};
    }
    case 2: {  // constant Gamma, Lambda a function of the Gamma-invariant coordinate
      const Rational a(rnd.integer(-2, 2)), b(rnd.integer(-2, 2));
      const Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
      const Poly u = b * x - a * y;
      const Poly h = Poly::constant(2, rnd.integer(-2, 2)) + Poly::constant(2, rnd.integer(-2, 2)) * u +
                     Poly::constant(2, rnd.integer(-2, 2)) * u * u;
      Multivector lambda(2, 2);
      lambda.add({0, 1}, h);
      return {lambda, constant_field(2, {a, b})};
    }
    case 3: {  // linear Poisson structure of so(3)
      const Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1), z = Poly::variable(3, 2);
      Multivector lambda(3, 2);
      lambda.add({0, 1}, z);
      lambda.add({1, 2}, x);
      lambda.add({2, 0}, y);
      return {nonzero(rnd) * lambda, Multivector(3, 1)};
    }
    case 4: {  // constant u ^ v with Gamma in span(u, v)
      std::vector<Rational> u(3), v(3), g(3);
      for (auto& c : u) c = rnd.integer(-2, 2);
      for (auto& c : v) c = rnd.integer(-2, 2);
      const Rational al(rnd.integer(-2, 2)), be(rnd.integer(-2, 2));
      for (std::size_t i = 0; i < 3; ++i) g[i] = al * u[i] + be * v[i];
      return {wedge(constant_field(3, u), constant_field(3, v)), constant_field(3, g)};
    }
    default: {  // contact structure on three variables
      const Poly y = Poly::variable(3, 1);
      Multivector lambda(3, 2);
      lambda.add({1, 0}, Poly::constant(3, 1));
      lambda.add({1, 2}, y);
      const Rational c = nonzero(rnd);
      return {c * lambda, constant_field(3, {0, 0, -c})};
    }
  }
}

}  // namespace

SnCorpusResult sn_equivalence_corpus(std::size_t cases, std::uint64_t seed) {
  RandomSource rnd(seed);
  SnCorpusResult out;
  for (std::size_t t = 0; t < cases; ++t) {
    Candidate cand;
    switch (t % 4) {
      case 0: {  // unconstrained
        const std::size_t n = rnd.integer(1, 3);
        cand = {random_bivector(rnd, n, 2), random_field(rnd, n, 2)};
        break;
      }
      case 1: {  // constructed, then perturbed
        cand = constructed(rnd, rnd.integer(0, 5));
        const std::size_t n = cand.gamma.num_vars();
        if (rnd.chance(50)) {
          cand.gamma += random_field(rnd, n, 1);
        } else {
          cand.lambda += random_bivector(rnd, n, 1);
        }
        break;
      }
      default:
        cand = constructed(rnd, rnd.integer(0, 5));
        break;
    }
    const bool sn = jacobi_pair_check(cand.lambda, cand.gamma).holds;
    const BidiffBracket br = jacobi_bracket(cand.lambda, cand.gamma);
    const bool jac = jacobiator_is_zero(br).holds;
    ++out.cases;
    ++(sn ? out.positives : out.negatives);
    if (sn != jac) ++out.disagreements;

    const std::size_t n = br.num_vars();
    for (int s = 0; s < 3; ++s) {
      const Poly f = rnd.poly(n, 2);
      if (hamiltonian_anchor(cand.lambda, cand.gamma, f) != left_anchor(br, Section(n, {f}))) {
        ++out.anchor_mismatches;
        break;
      }
    }
  }
  return out;
}

std::string render_selftest(const SweepResult& sweep, const SnCorpusResult& corpus) {
  std::ostringstream os;
  os << "rank-1 sweep on one variable (coefficients a + b x, a, b in {-1, 0, 1})\n"
     << "  brackets                 " << sweep.brackets << '\n'
     << "  quasi-derivation in both " << sweep.quasi_derivation_both << '\n'
     << "  jacobi structures        " << sweep.jacobi_structures << " (expected " << kRank1LineJacobiStructures
     << ")\n"
     << "  not skew-symmetric       " << sweep.skew_violations << '\n'
     << "schouten-nijenhuis corpus\n"
     << "  cases                    " << corpus.cases << '\n'
     << "  positive                 " << corpus.positives << '\n'
     << "  negative                 " << corpus.negatives << '\n'
     << "  verdict disagreements    " << corpus.disagreements << '\n'
     << "  anchor mismatches        " << corpus.anchor_mismatches << '\n';
  return os.str();
}

}  // namespace qdalg
