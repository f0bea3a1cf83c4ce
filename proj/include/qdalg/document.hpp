#pragma once

// Structure documents: a JSON object naming the variables, the rank, exactly
// one payload and optional expectations on the classification flags.
//
//   {
//     "variables": ["x", "y"],
//     "rank": 2,
//     "bracket": {"C": [...], "L": [...], "R": [...], "M": [...]},
//     "expect": {"is_lie_algebroid": true}
//   }
//
// Tensor entries are {"indices": [...], "poly": "..."}. Section indices are
// 0-based integers; variable slots take a 0-based integer or a variable
// name. Index layouts:
//   bracket           C [c,a,b]  L [c,i,a,b]  R [c,i,a,b]  M [c,i,j,a,b]
//   jacobi_structure  Lambda [i,j] with i < j   Gamma [i]       (rank 1)
//   operator          A [c,a]    B [c,i,a]
//   vector_field      Gamma [i]                                 (rank 1)

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdalg/bracket.hpp"
#include "qdalg/classify.hpp"
#include "qdalg/multivector.hpp"
#include "qdalg/qder.hpp"

namespace qdalg {

class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string path, const std::string& reason)
      : std::runtime_error(path + ": " + reason), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

enum class PayloadKind { kBracket, kJacobiStructure, kOperator, kVectorField };

std::string_view payload_name(PayloadKind kind);

struct StructureDocument {
  std::vector<std::string> variables;
  std::size_t rank = 1;
  PayloadKind kind = PayloadKind::kBracket;

  BidiffBracket bracket;        // kBracket
  Multivector lambda;           // kJacobiStructure
  Multivector gamma;            // kJacobiStructure, kVectorField
  FirstOrderOperator op;        // kOperator

  // Sorted by flag name.
  std::vector<std::pair<std::string, Tri>> expect;

  std::size_t num_vars() const { return variables.size(); }
  /// The bracket under study for every payload except kOperator.
  BidiffBracket to_bracket() const;

  friend bool operator==(const StructureDocument&, const StructureDocument&) = default;
};

/// Flag names a document of the given kind may put under "expect".
std::vector<std::string> known_flags(PayloadKind kind);

/// Throws DocumentError (path + reason) on any schema, index or polynomial error.
StructureDocument load_document(std::string_view text);

/// Compact canonical JSON: fixed key order, entries sorted by index tuple,
/// zero entries dropped, polynomials in canonical form.
std::string canonical_json(const StructureDocument& doc);

}  // namespace qdalg
