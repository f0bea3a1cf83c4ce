#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qdalg {

/// Operands disagree on number of variables, rank, tensor shape or degree.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A check was called on a structure that does not satisfy its hypotheses
/// (e.g. asking for the anchor of a bracket that is not a quasi-derivation).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The result is not representable in the first-order operator model.
class UnsupportedInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace qdalg
