#include "posets/errors.hpp"

namespace posets {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::duplicate_label: return "DuplicateLabel";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::cycle_detected: return "CycleDetected";
    case Errc::unknown_element: return "UnknownElement";
    case Errc::empty_argument: return "EmptyArgument";
    case Errc::owner_mismatch: return "OwnerMismatch";
    case Errc::carrier_too_large: return "CarrierTooLarge";
    case Errc::not_an_ideal: return "NotAnIdeal";
    case Errc::not_a_filter: return "NotAFilter";
    case Errc::not_a_prime_filter: return "NotAPrimeFilter";
    case Errc::not_disjoint: return "NotDisjoint";
    case Errc::not_proper: return "NotProper";
    case Errc::no_least_element: return "NoLeastElement";
    case Errc::star_condition_fails: return "StarConditionFails";
    case Errc::unknown_theorem: return "UnknownTheorem";
    case Errc::subset_quantifier_too_large: return "CarrierTooLargeForSubsetQuantifier";
    case Errc::rejection_budget_exhausted: return "RejectionBudgetExhausted";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::duplicate_poset_name: return "DuplicatePosetName";
    case Errc::unknown_element_in_cover: return "UnknownElementInCover";
    case Errc::duplicate_element: return "DuplicateElement";
    case Errc::unknown_poset: return "UnknownPoset";
    case Errc::ambiguous_poset: return "AmbiguousPoset";
    case Errc::bad_argument: return "BadArgument";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace posets
