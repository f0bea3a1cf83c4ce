#include "qdalg/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "qdalg/random.hpp"

namespace qdalg {

bool ClassifyRun::expectations_met() const {
  return std::all_of(expectations.begin(), expectations.end(), [](const auto& e) { return e.ok(); });
}

namespace {

class Printer {
 public:
  explicit Printer(const StructureDocument& doc) : names_(doc.variables) {}

  std::string poly(const Poly& p) const { return p.to_string(names_); }
  std::string section(const Section& s) const { return s.to_string(names_); }
  std::string derivation(const Derivation& d) const { return d.to_string(names_); }
  std::string multivector(const Multivector& m) const { return m.to_string(names_); }
  const std::string& var(std::size_t i) const { return names_[i]; }

 private:
  std::vector<std::string> names_;
};

void flag_table(std::ostream& os, const std::vector<std::pair<std::string, Tri>>& flags) {
  os << "flags\n";
  for (const auto& [name, value] : flags) {
    os << "  " << name << std::string(name.size() < 28 ? 28 - name.size() : 1, ' ') << to_string(value) << '\n';
  }
}

// X^(f) = sum (rho^i_a X^a + m^{ji}_a d_j X^a) d_i f, one line per nonzero coefficient field.
void anchor_lines(std::ostream& os, const Printer& pr, const AnchorData& a, const char* sym) {
  const std::size_t n = a.num_vars;
  for (std::size_t s = 0; s < a.rank; ++s) {
    std::vector<Poly> rho;
    for (std::size_t i = 0; i < n; ++i) rho.push_back(a.rho_at(s, i));
    os << "    " << sym << "^" << s << "  ->  " << (n == 0 ? "0" : pr.derivation(Derivation(std::move(rho)))) << '\n';
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Poly> mj;
      for (std::size_t i = 0; i < n; ++i) mj.push_back(a.m_at(s, j, i));
      Derivation d(std::move(mj));
      if (d.is_zero()) continue;
      os << "    d_" << pr.var(j) << "(" << sym << "^" << s << ")  ->  " << pr.derivation(d) << '\n';
    }
  }
}

void anchors_block(std::ostream& os, const Printer& pr, const SlotVerdict& right, const SlotVerdict& left) {
  os << "anchors\n";
  if (right) {
    os << "  left anchor X -> X^ (from the right slot)\n";
    anchor_lines(os, pr, *right.anchor, "X");
  } else {
    os << "  left anchor: none, the bracket is not a quasi-derivation in its right slot\n";
  }
  if (left) {
    os << "  right anchor Y -> Y~ (from the left slot)\n";
    anchor_lines(os, pr, *left.anchor, "Y");
  } else {
    os << "  right anchor: none, the bracket is not a quasi-derivation in its left slot\n";
  }
}

void slot_witness(std::ostream& os, const Printer& pr, const char* name, const SlotWitness& w, bool right_slot) {
  os << "  " << name << ": X = " << pr.section(w.x) << ", f = " << pr.poly(w.f) << ", Y = " << pr.section(w.y)
     << '\n';
  os << "    D = " << (right_slot ? "[X, fY]" : "[fX, Y]") << " - f[X, Y] must be a multiple of "
     << (right_slot ? "Y" : "X") << "; ";
  if (w.reference) {
    os << "D^" << w.component << " - D^" << *w.reference;
  } else {
    os << "D^" << w.component;
  }
  os << " = " << pr.poly(w.defect) << '\n';
}

void witnesses_block(std::ostream& os, const Printer& pr, const ClassificationReport& rep) {
  std::ostringstream body;
  if (rep.right.witness) slot_witness(body, pr, "is_right_qd", *rep.right.witness, true);
  if (rep.left.witness) slot_witness(body, pr, "is_left_qd", *rep.left.witness, false);
  if (rep.skew.witness) {
    const auto& w = *rep.skew.witness;
    body << "  is_skew: X = " << pr.section(w.x) << ", Y = " << pr.section(w.y) << '\n'
         << "    [X, Y] + [Y, X] = " << pr.section(w.defect) << '\n';
  }
  if (rep.jacobi.witness) {
    const auto& w = *rep.jacobi.witness;
    body << "  satisfies_jacobi: X = " << pr.section(w.x) << ", Y = " << pr.section(w.y)
         << ", Z = " << pr.section(w.z) << '\n'
         << "    [[X, Y], Z] - [X, [Y, Z]] + [Y, [X, Z]] = " << pr.section(w.defect) << '\n';
  }
  if (rep.homomorphism && rep.homomorphism->witness) {
    const auto& w = *rep.homomorphism->witness;
    body << "  anchor_homomorphism: X = " << pr.section(w.x) << ", Y = " << pr.section(w.y) << '\n'
         << "    [X, Y]^ - [X^, Y^] = " << pr.derivation(w.defect) << '\n';
  }
  if (rep.sign && rep.sign->witness) {
    const auto& w = *rep.sign->witness;
    body << "  anchors_opposite: e" << w.section_index << ", d_" << pr.var(w.variable)
         << " coefficient of e" << w.section_index << "^ + e" << w.section_index << "~ = " << pr.poly(w.defect)
         << '\n';
  }
  const std::string text = body.str();
  os << "witnesses\n" << (text.empty() ? "  none\n" : text);
}

void confirmation_block(std::ostream& os, const std::vector<ConfirmationOutcome>& outcomes,
                        const RunOptions& opts) {
  os << "randomized confirmation (seed " << opts.seed << ", degree <= " << opts.max_degree << ")\n";
  if (outcomes.empty()) os << "  nothing to confirm\n";
  for (const auto& o : outcomes) {
    os << "  " << o.check << std::string(o.check.size() < 22 ? 22 - o.check.size() : 1, ' ') << o.samples
       << " samples  " << (o.ok ? "ok" : "MISMATCH") << '\n';
  }
}

struct OperatorAnalysis {
  QuasiDerivationVerdict verdict;
  std::vector<ConfirmationOutcome> confirmations;
};

OperatorAnalysis analyze_operator(const FirstOrderOperator& op, const RunOptions& opts) {
  OperatorAnalysis out;
  out.verdict = is_quasi_derivation(op);
  if (out.verdict) {
    RandomSource rnd(opts.seed);
    const Derivation& hat = *out.verdict.anchor;
    ConfirmationOutcome c{"leibniz", opts.samples, true};
    for (std::size_t s = 0; s < opts.samples && c.ok; ++s) {
      const Section x = rnd.section(op.num_vars(), op.rank(), opts.max_degree);
      const Poly f = rnd.poly(op.num_vars(), opts.max_degree);
      c.ok = (op.apply(f * x) - f * op.apply(x) - hat.apply(f) * x).is_zero();
    }
    out.confirmations.push_back(c);
  }
  return out;
}

void operator_block(std::ostream& os, const Printer& pr, const OperatorAnalysis& a) {
  os << "quasi-derivation\n";
  if (a.verdict) {
    os << "  universal anchor  " << pr.derivation(*a.verdict.anchor) << '\n';
    return;
  }
  const auto& w = *a.verdict.witness;
  const std::string f = pr.var(w.variable);
  if (w.kind == QdProbe::Kind::kOffDiagonal) {
    os << "  witness: [D, " << f << "] e" << w.from << " has component " << pr.poly(w.defect) << " along e"
       << w.to << '\n';
  } else {
    os << "  witness: [D, " << f << "] scales e" << w.from << " and e" << w.to
       << " differently; factor on e" << w.to << " - factor on e" << w.from << " = " << pr.poly(w.defect)
       << '\n';
  }
}

std::vector<ExpectationResult> compare(const StructureDocument& doc,
                                       const std::vector<std::pair<std::string, Tri>>& flags) {
  std::vector<ExpectationResult> out;
  for (const auto& [name, expected] : doc.expect) {
    ExpectationResult r{name, expected, Tri::kNotApplicable};
    for (const auto& [fname, value] : flags) {
      if (fname == name) r.actual = value;
    }
    out.push_back(r);
  }
  return out;
}

std::string machine_block(const StructureDocument& doc, const ClassifyRun& run) {
  nlohmann::ordered_json j;
  j["payload"] = std::string(payload_name(doc.kind));
  nlohmann::ordered_json flags = nlohmann::ordered_json::object();
  for (const auto& [name, value] : run.flags) flags[name] = std::string(to_string(value));
  j["flags"] = std::move(flags);
  j["expectations_met"] = run.expectations_met();
  return j.dump();
}

}  // namespace

ClassifyRun run_classify(const StructureDocument& doc, const RunOptions& opts) {
  const Printer pr(doc);
  ClassifyRun run;
  std::ostringstream os;
  os << "qdcheck report\n"
     << "payload    " << payload_name(doc.kind) << '\n'
     << "variables  " << doc.num_vars() << '\n'
     << "rank       " << doc.rank << '\n'
     << "structure  " << canonical_json(doc) << "\n\n";

  std::ostringstream detail;
  if (doc.kind == PayloadKind::kOperator) {
    const auto analysis = analyze_operator(doc.op, opts);
    run.flags = {{"is_quasi_derivation", tri(static_cast<bool>(analysis.verdict))}};
    operator_block(detail, pr, analysis);
    detail << '\n';
    confirmation_block(detail, analysis.confirmations, opts);
  } else {
    const BidiffBracket br = doc.to_bracket();
    const ClassificationReport rep = classify(br);
    run.flags = rep.flags();
    if (doc.kind == PayloadKind::kJacobiStructure) {
      const JacobiPairVerdict sn = jacobi_pair_check(doc.lambda, doc.gamma);
      run.flags.emplace_back("sn_compatible", tri(sn.holds));
      run.flags.emplace_back("sn_agrees_with_jacobiator", tri(sn.holds == rep.jacobi.holds));
      detail << "schouten-nijenhuis\n"
             << "  Lambda  " << pr.multivector(doc.lambda) << '\n'
             << "  Gamma   " << pr.multivector(doc.gamma) << '\n';
      if (sn.holds) {
        detail << "  [Gamma, Lambda] = 0 and [Lambda, Lambda] + 2 Lambda^Gamma = 0\n";
      } else if (sn.failed_condition == 1) {
        detail << "  [Gamma, Lambda] = " << pr.multivector(*sn.defect) << '\n';
      } else {
        detail << "  [Lambda, Lambda] + 2 Lambda^Gamma = " << pr.multivector(*sn.defect) << '\n';
      }
      detail << "  bracket jacobiator " << (rep.jacobi.holds ? "vanishes" : "does not vanish") << '\n' << '\n';
    }
    witnesses_block(detail, pr, rep);
    detail << '\n';
    anchors_block(detail, pr, rep.right, rep.left);
    if (rep.recovered_lambda) {
      detail << "  recovered Lambda  " << pr.multivector(*rep.recovered_lambda) << '\n'
             << "  recovered Gamma   " << pr.multivector(*rep.recovered_gamma) << '\n';
    }
    detail << '\n';
    confirmation_block(detail, confirm_randomly(br, rep, opts.samples, opts.max_degree, opts.seed), opts);
  }

  flag_table(os, run.flags);
  os << '\n' << detail.str();

  run.expectations = compare(doc, run.flags);
  if (!run.expectations.empty()) {
    os << "\nexpectations\n";
    for (const auto& e : run.expectations) {
      os << "  " << e.flag << std::string(e.flag.size() < 28 ? 28 - e.flag.size() : 1, ' ') << "expected "
         << to_string(e.expected) << ", got " << to_string(e.actual) << (e.ok() ? "  ok" : "  FAILED") << '\n';
    }
  }
  os << "\nmachine-readable\n" << machine_block(doc, run) << '\n';
  run.text = os.str();
  return run;
}

std::string render_anchors(const StructureDocument& doc) {
  const Printer pr(doc);
  std::ostringstream os;
  if (doc.kind == PayloadKind::kOperator) {
    const auto verdict = is_quasi_derivation(doc.op);
    if (verdict) {
      os << "universal anchor  " << pr.derivation(*verdict.anchor) << '\n';
    } else {
      os << "universal anchor: none, the operator is not a quasi-derivation\n";
    }
    return os.str();
  }
  const BidiffBracket br = doc.to_bracket();
  anchors_block(os, pr, right_qd_check(br), left_qd_check(br));
  return os.str();
}

}  // namespace qdalg
