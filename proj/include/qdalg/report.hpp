#pragma once

// Plain-text classification reports. Output depends only on the document and
// the options, so reports can be stored and diffed.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qdalg/classify.hpp"
#include "qdalg/document.hpp"

namespace qdalg {

struct RunOptions {
  std::uint32_t max_degree = 3;
  std::size_t samples = 20;
  std::uint64_t seed = 1;
};

struct ExpectationResult {
  std::string flag;
  Tri expected = Tri::kNotApplicable;
  Tri actual = Tri::kNotApplicable;
  bool ok() const { return expected == actual; }
};

struct ClassifyRun {
  std::string text;
  std::vector<std::pair<std::string, Tri>> flags;
  std::vector<ExpectationResult> expectations;
  bool expectations_met() const;
};

ClassifyRun run_classify(const StructureDocument& doc, const RunOptions& opts = {});

/// Anchor data only: the universal anchor of an operator, or both anchors of a bracket.
std::string render_anchors(const StructureDocument& doc);

}  // namespace qdalg
