#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posets/ideal_filter.hpp"
#include "posets/poset.hpp"
#include "posets/pseudo.hpp"

namespace posets {

enum class CheckStatus { pass, fail, not_applicable };

const char* to_string(CheckStatus s) noexcept;

/// Replayable witness of a failed check: named subsets and elements,
/// rendered with element labels so they can be pasted back into the DSL.
struct Counterexample {
  std::string detail;
  std::vector<std::pair<std::string, std::vector<std::string>>> sets;
  std::vector<std::pair<std::string, std::string>> elements;
};

struct TheoremReport {
  std::string theorem_id;
  CheckStatus status = CheckStatus::pass;
  std::uint64_t checked_instances = 0;
  std::optional<Counterexample> counterexample;
};

struct CheckOptions {
  /// Statements quantified over arbitrary subsets are instantiated
  /// exhaustively (all 2^n) up to this carrier size...
  int subset_cap = 10;
  /// ...and with this many seeded uniform samples above it. Zero disables
  /// sampling, making over-cap subset quantifiers an error.
  std::uint64_t sample_count = 10000;
  std::uint64_t sample_seed = 0x706f736574ULL;
  /// Pool size for family-quantified laws (families of up to 3 subsets).
  int family_pool = 16;
};

/// Registered theorem ids, in fixed registry order.
const std::vector<std::string>& theorem_ids();

/// Exhaustively instantiates one named statement over the poset.
TheoremReport check(const Poset& p, std::string_view theorem_id, const CheckOptions& opts = {});

/// Runs every registered statement, never aborting early; reports come
/// back in registry order.
std::vector<TheoremReport> check_all(const Poset& p, const CheckOptions& opts = {});

/// The directedness side condition used when relating ultrafilters to the
/// *-condition: for every a outside the proper filter F and all a1, a2
/// bounding L(a,f1), L(a,f2) from above (f1, f2 ∈ F), some f3 ∈ F and some
/// a3 ∈ L(a1,a2) satisfy L(a,f3) ⊆ (a3].
bool check_th2_condition_iii(const Poset& p, const Subset& proper_filter);

}  // namespace posets
