#include "qdalg/document.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "json.hpp"
#include "qdalg/errors.hpp"

namespace qdalg {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view payload_name(PayloadKind kind) {
  switch (kind) {
    case PayloadKind::kBracket:
      return "bracket";
    case PayloadKind::kJacobiStructure:
      return "jacobi_structure";
    case PayloadKind::kOperator:
      return "operator";
    case PayloadKind::kVectorField:
      return "vector_field";
  }
  return "?";
}

BidiffBracket StructureDocument::to_bracket() const {
  switch (kind) {
    case PayloadKind::kBracket:
      return bracket;
    case PayloadKind::kJacobiStructure:
      return jacobi_bracket(lambda, gamma);
    case PayloadKind::kVectorField:
      return rank1_from_vector_field(gamma.to_derivation());
    case PayloadKind::kOperator:
      break;
  }
  throw std::logic_error("operator documents carry no bracket");
}

std::vector<std::string> known_flags(PayloadKind kind) {
  if (kind == PayloadKind::kOperator) return {"is_quasi_derivation"};
  std::vector<std::string> names;
  for (const auto& [name, value] : ClassificationReport{}.flags()) names.push_back(name);
  if (kind == PayloadKind::kJacobiStructure) {
    names.push_back("sn_compatible");
    names.push_back("sn_agrees_with_jacobiator");
  }
  return names;
}

namespace {

// Which positions of an index tuple name variables rather than sections.
struct TensorSpec {
  const char* name;
  std::size_t arity;
  std::vector<std::size_t> variable_slots;
};

const std::vector<TensorSpec>& specs_for(PayloadKind kind) {
  static const std::vector<TensorSpec> bracket{
      {"C", 3, {}}, {"L", 4, {1}}, {"R", 4, {1}}, {"M", 5, {1, 2}}};
  static const std::vector<TensorSpec> jacobi{{"Lambda", 2, {0, 1}}, {"Gamma", 1, {0}}};
  static const std::vector<TensorSpec> op{{"A", 2, {}}, {"B", 3, {1}}};
  static const std::vector<TensorSpec> field{{"Gamma", 1, {0}}};
  switch (kind) {
    case PayloadKind::kBracket:
      return bracket;
    case PayloadKind::kJacobiStructure:
      return jacobi;
    case PayloadKind::kOperator:
      return op;
    case PayloadKind::kVectorField:
      return field;
  }
  return bracket;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

struct Entry {
  std::vector<std::size_t> indices;
  Poly poly;
};

class Loader {
 public:
  StructureDocument load(std::string_view text) {
    json root;
    try {
      root = json::parse(text);
    } catch (const json::parse_error& e) {
      throw DocumentError("$", std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw DocumentError("$", "document must be an object");

    static const std::set<std::string> kTopLevel{"variables", "rank",         "bracket", "jacobi_structure",
                                                 "operator",  "vector_field", "expect"};
    for (const auto& [key, value] : root.items()) {
      if (!kTopLevel.count(key)) throw DocumentError("$." + key, "unknown key");
    }

    load_variables(root);
    load_rank(root);

    std::vector<PayloadKind> present;
    for (auto kind : {PayloadKind::kBracket, PayloadKind::kJacobiStructure, PayloadKind::kOperator,
                      PayloadKind::kVectorField}) {
      if (root.contains(std::string(payload_name(kind)))) present.push_back(kind);
    }
    if (present.size() != 1) {
      throw DocumentError("$", "exactly one of bracket, jacobi_structure, operator, vector_field is required");
    }
    doc_.kind = present[0];
    if ((doc_.kind == PayloadKind::kJacobiStructure || doc_.kind == PayloadKind::kVectorField) &&
        doc_.rank != 1) {
      throw DocumentError("$.rank", std::string(payload_name(doc_.kind)) + " requires rank 1");
    }
    load_payload(root[std::string(payload_name(doc_.kind))], "$." + std::string(payload_name(doc_.kind)));
    if (root.contains("expect")) load_expect(root["expect"]);
    return std::move(doc_);
  }

 private:
  void load_variables(const json& root) {
    if (!root.contains("variables")) throw DocumentError("$.variables", "missing");
    const json& vars = root["variables"];
    if (!vars.is_array()) throw DocumentError("$.variables", "must be an array of names");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const std::string path = "$.variables[" + std::to_string(i) + "]";
      if (!vars[i].is_string()) throw DocumentError(path, "must be a string");
      const std::string name = vars[i].get<std::string>();
      if (!is_identifier(name)) throw DocumentError(path, "'" + name + "' is not an identifier");
      if (!seen.insert(name).second) throw DocumentError(path, "duplicate variable '" + name + "'");
      doc_.variables.push_back(name);
    }
  }

  void load_rank(const json& root) {
    if (!root.contains("rank")) throw DocumentError("$.rank", "missing");
    const json& r = root["rank"];
    if (!r.is_number_integer() || r.get<long long>() < 1) {
      throw DocumentError("$.rank", "must be an integer >= 1");
    }
    doc_.rank = r.get<std::size_t>();
  }

  std::size_t index_value(const json& v, bool variable_slot, const std::string& path) const {
    const std::size_t bound = variable_slot ? doc_.num_vars() : doc_.rank;
    if (variable_slot && v.is_string()) {
      const auto name = v.get<std::string>();
      auto it = std::find(doc_.variables.begin(), doc_.variables.end(), name);
      if (it == doc_.variables.end()) throw DocumentError(path, "unknown variable '" + name + "'");
      return static_cast<std::size_t>(it - doc_.variables.begin());
    }
    if (!v.is_number_integer()) {
      throw DocumentError(path, variable_slot ? "must be a variable name or index" : "must be an integer");
    }
    const auto i = v.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= bound) {
      throw DocumentError(path, "index " + std::to_string(i) + " out of range [0, " + std::to_string(bound) + ")");
    }
    return static_cast<std::size_t>(i);
  }

  std::vector<Entry> load_tensor(const json& arr, const TensorSpec& spec, const std::string& path) {
    if (!arr.is_array()) throw DocumentError(path, "must be an array of entries");
    std::vector<Entry> entries;
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t e = 0; e < arr.size(); ++e) {
      const std::string epath = path + "[" + std::to_string(e) + "]";
      const json& entry = arr[e];
      if (!entry.is_object()) throw DocumentError(epath, "entry must be an object");
      for (const auto& [key, value] : entry.items()) {
        if (key != "indices" && key != "poly") throw DocumentError(epath + "." + key, "unknown key");
      }
      if (!entry.contains("indices") || !entry["indices"].is_array()) {
        throw DocumentError(epath + ".indices", "missing index array");
      }
      const json& idx = entry["indices"];
      if (idx.size() != spec.arity) {
        throw DocumentError(epath + ".indices", "expected " + std::to_string(spec.arity) + " indices");
      }
      Entry out;
      for (std::size_t p = 0; p < spec.arity; ++p) {
        const bool var_slot =
            std::find(spec.variable_slots.begin(), spec.variable_slots.end(), p) != spec.variable_slots.end();
        out.indices.push_back(index_value(idx[p], var_slot, epath + ".indices[" + std::to_string(p) + "]"));
      }
      if (!entry.contains("poly") || !entry["poly"].is_string()) {
        throw DocumentError(epath + ".poly", "missing polynomial string");
      }
      try {
        out.poly = parse_poly(entry["poly"].get<std::string>(), doc_.variables);
      } catch (const ParseError& err) {
        throw DocumentError(epath + ".poly", err.what());
      }
      if (!seen.insert(out.indices).second) throw DocumentError(epath, "duplicate entry");
      entries.push_back(std::move(out));
    }
    return entries;
  }

  void load_payload(const json& payload, const std::string& path) {
    if (!payload.is_object()) throw DocumentError(path, "must be an object");
    const auto& specs = specs_for(doc_.kind);
    for (const auto& [key, value] : payload.items()) {
      const bool known =
          std::any_of(specs.begin(), specs.end(), [&](const TensorSpec& s) { return key == s.name; });
      if (!known) throw DocumentError(path + "." + key, "unknown tensor");
    }
    const std::size_t n = doc_.num_vars();
    const std::size_t k = doc_.rank;
    switch (doc_.kind) {
      case PayloadKind::kBracket:
        doc_.bracket = BidiffBracket(n, k);
        break;
      case PayloadKind::kJacobiStructure:
        doc_.lambda = Multivector(n, 2);
        doc_.gamma = Multivector(n, 1);
        break;
      case PayloadKind::kVectorField:
        doc_.gamma = Multivector(n, 1);
        break;
      case PayloadKind::kOperator:
        doc_.op = FirstOrderOperator(n, k);
        break;
    }
    for (const auto& spec : specs) {
      if (!payload.contains(spec.name)) continue;
      const std::string tpath = path + "." + spec.name;
      std::size_t pos = 0;
      for (auto& e : load_tensor(payload[spec.name], spec, tpath)) {
        const auto& ix = e.indices;
        const std::string epath = tpath + "[" + std::to_string(pos++) + "]";
        const std::string name = spec.name;
        if (name == "C") {
          doc_.bracket.c(ix[0], ix[1], ix[2]) = std::move(e.poly);
        } else if (name == "L") {
          doc_.bracket.l(ix[0], ix[1], ix[2], ix[3]) = std::move(e.poly);
        } else if (name == "R") {
          doc_.bracket.r(ix[0], ix[1], ix[2], ix[3]) = std::move(e.poly);
        } else if (name == "M") {
          doc_.bracket.m(ix[0], ix[1], ix[2], ix[3], ix[4]) = std::move(e.poly);
        } else if (name == "Lambda") {
          if (ix[0] >= ix[1]) throw DocumentError(epath, "Lambda entries need strictly increasing indices");
          doc_.lambda.add(ix, e.poly);
        } else if (name == "Gamma") {
          doc_.gamma.add(ix, e.poly);
        } else if (name == "A") {
          doc_.op.a(ix[0], ix[1]) = std::move(e.poly);
        } else if (name == "B") {
          doc_.op.b(ix[0], ix[1], ix[2]) = std::move(e.poly);
        }
      }
    }
  }

  void load_expect(const json& expect) {
    if (!expect.is_object()) throw DocumentError("$.expect", "must be an object");
    const auto names = known_flags(doc_.kind);
    for (const auto& [key, value] : expect.items()) {
      const std::string path = "$.expect." + key;
      if (std::find(names.begin(), names.end(), key) == names.end()) {
        throw DocumentError(path, "unknown flag for a " + std::string(payload_name(doc_.kind)) + " document");
      }
      Tri t;
      if (value.is_boolean()) {
        t = tri(value.get<bool>());
      } else if (value.is_string() && value.get<std::string>() == "not-applicable") {
        t = Tri::kNotApplicable;
      } else {
        throw DocumentError(path, "must be true, false or \"not-applicable\"");
      }
      doc_.expect.emplace_back(key, t);
    }
    std::sort(doc_.expect.begin(), doc_.expect.end());
  }

  StructureDocument doc_;
};

ordered_json entry_json(std::vector<ordered_json> indices, const Poly& p, const std::vector<std::string>& names) {
  ordered_json e;
  e["indices"] = std::move(indices);
  e["poly"] = p.to_string(names);
  return e;
}

}  // namespace

StructureDocument load_document(std::string_view text) { return Loader().load(text); }

std::string canonical_json(const StructureDocument& doc) {
  const std::size_t n = doc.num_vars();
  const std::size_t k = doc.rank;
  const auto& names = doc.variables;
  auto var = [&](std::size_t i) { return ordered_json(names[i]); };
  auto sec = [](std::size_t a) { return ordered_json(a); };

  ordered_json root;
  root["variables"] = names;
  root["rank"] = k;
  ordered_json payload = ordered_json::object();
  switch (doc.kind) {
    case PayloadKind::kBracket: {
      const auto& br = doc.bracket;
      ordered_json c = ordered_json::array(), l = ordered_json::array(), r = ordered_json::array(),
                   m = ordered_json::array();
      for (std::size_t cc = 0; cc < k; ++cc) {
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = 0; b < k; ++b) {
            if (!br.c(cc, a, b).is_zero()) c.push_back(entry_json({sec(cc), sec(a), sec(b)}, br.c(cc, a, b), names));
          }
        }
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
              if (!br.l(cc, i, a, b).is_zero()) {
                l.push_back(entry_json({sec(cc), var(i), sec(a), sec(b)}, br.l(cc, i, a, b), names));
              }
              if (!br.r(cc, i, a, b).is_zero()) {
                r.push_back(entry_json({sec(cc), var(i), sec(a), sec(b)}, br.r(cc, i, a, b), names));
              }
            }
          }
        }
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t a = 0; a < k; ++a) {
              for (std::size_t b = 0; b < k; ++b) {
                if (!br.m(cc, i, j, a, b).is_zero()) {
                  m.push_back(entry_json({sec(cc), var(i), var(j), sec(a), sec(b)}, br.m(cc, i, j, a, b), names));
                }
              }
            }
          }
        }
      }
      payload["C"] = std::move(c);
      payload["L"] = std::move(l);
      payload["R"] = std::move(r);
      payload["M"] = std::move(m);
      break;
    }
    case PayloadKind::kJacobiStructure:
    case PayloadKind::kVectorField: {
      if (doc.kind == PayloadKind::kJacobiStructure) {
        ordered_json lam = ordered_json::array();
        for (const auto& [idx, p] : doc.lambda.components()) lam.push_back(entry_json({var(idx[0]), var(idx[1])}, p, names));
        payload["Lambda"] = std::move(lam);
      }
      ordered_json gam = ordered_json::array();
      for (const auto& [idx, p] : doc.gamma.components()) gam.push_back(entry_json({var(idx[0])}, p, names));
      payload["Gamma"] = std::move(gam);
      break;
    }
    case PayloadKind::kOperator: {
      ordered_json a = ordered_json::array(), b = ordered_json::array();
      for (std::size_t cc = 0; cc < k; ++cc) {
        for (std::size_t aa = 0; aa < k; ++aa) {
          if (!doc.op.a(cc, aa).is_zero()) a.push_back(entry_json({sec(cc), sec(aa)}, doc.op.a(cc, aa), names));
        }
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t aa = 0; aa < k; ++aa) {
            if (!doc.op.b(cc, i, aa).is_zero()) b.push_back(entry_json({sec(cc), var(i), sec(aa)}, doc.op.b(cc, i, aa), names));
          }
        }
      }
      payload["A"] = std::move(a);
      payload["B"] = std::move(b);
      break;
    }
  }
  root[std::string(payload_name(doc.kind))] = std::move(payload);
  if (!doc.expect.empty()) {
    ordered_json ex = ordered_json::object();
    for (const auto& [name, t] : doc.expect) {
      if (t == Tri::kNotApplicable) {
        ex[name] = "not-applicable";
      } else {
        ex[name] = (t == Tri::kTrue);
      }
    }
    root["expect"] = std::move(ex);
  }
  return root.dump();
}

}  // namespace qdalg
