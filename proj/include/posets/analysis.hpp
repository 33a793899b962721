#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "posets/ideal_filter.hpp"
#include "posets/poset.hpp"
#include "posets/pseudo.hpp"
#include "posets/theorems.hpp"

namespace posets {

/// Full classification of one poset, ready for text or JSON rendering.
struct AnalysisReport {
  std::string name;
  Poset poset;
  Catalog catalog;
  bool pseudocomplemented = false;
  std::optional<StarTable> star;
  /// Present when not pseudocomplemented.
  std::optional<StarCertificate> star_failure;
  std::optional<Subset> boolean_elems;
  std::optional<Subset> dense_elems;
  /// Each *-ideal with its first canonical filter witness.
  std::vector<std::pair<Subset, Subset>> star_ideals;
  std::vector<TheoremReport> theorems;
};

AnalysisReport analyze(const Poset& p, std::string name, const CheckOptions& opts = {});

nlohmann::json report_json(const TheoremReport& report);
nlohmann::json report_json(const AnalysisReport& report);
std::string report_text(const AnalysisReport& report);

}  // namespace posets
