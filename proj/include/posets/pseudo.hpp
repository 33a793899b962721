#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "posets/poset.hpp"

namespace posets {

/// The total pseudocomplementation map x ↦ x* of one poset.
/// Only posets with a least element can carry one; construction goes
/// through star_table().
class StarTable {
public:
  const Poset& poset() const { return poset_; }
  int star(int e) const;
  std::span<const int> table() const { return map_; }
  int least() const { return *poset_.least(); }

private:
  friend std::variant<StarTable, struct StarCertificate> star_table(const Poset&);
  StarTable(Poset p, std::vector<int> map) : poset_(std::move(p)), map_(std::move(map)) {}

  Poset poset_;
  std::vector<int> map_;
};

/// Why a poset is not pseudocomplemented: either it has no least element
/// (element == nullopt) or `element` is the first one, in index order,
/// with no pseudocomplement.
struct StarCertificate {
  std::optional<int> element;
};

using StarResult = std::variant<StarTable, StarCertificate>;

/// The greatest x with L(a,x) = {0}, if one exists. Requires a least
/// element (Errc::no_least_element otherwise); absence of a greatest
/// candidate is a value, not an error.
std::optional<int> pseudocomplement(const Poset& p, int a);

/// Total star table, or the certificate that none exists.
StarResult star_table(const Poset& p);
/// Convenience view of star_table().
std::optional<StarTable> try_star_table(const Poset& p);
bool is_pseudocomplemented(const Poset& p);

/// B(P) = {a | a** = a}.
Subset boolean_elements(const StarTable& t);
/// D(P) = {a | a* = 0}.
Subset dense_elements(const StarTable& t);

/// A_* = {x | x* ∈ A}.
Subset lower_star(const StarTable& t, const Subset& a);
/// A^* = {x* | x ∈ A}.
Subset upper_star(const StarTable& t, const Subset& a);

/// If `ideal` equals F_* for some filter F, returns the first such F in
/// canonical filter order; otherwise nullopt. Errc::not_an_ideal when the
/// argument is not an ideal at all.
std::optional<Subset> star_ideal_witness(const StarTable& t, const Subset& ideal);
bool is_star_ideal(const StarTable& t, const Subset& ideal);

struct StarIdealConditions {
  bool star_ideal;          // some filter F has F_* = I
  bool double_star_closed;  // I** ⊆ I
  bool star_exchange;       // x* ≤ y ∈ I implies y* ≤ x
};

StarIdealConditions star_ideal_conditions(const StarTable& t, const Subset& ideal);

/// Exactly one of x, x* lies in s, for every element x.
bool satisfies_star_condition(const StarTable& t, const Subset& s);

/// Separation for *-ideals: given an ideal and a disjoint filter that
/// satisfies the *-condition, returns the *-ideal F_* (= P∖F), which
/// contains the ideal and avoids the filter.
Subset separate_star(const StarTable& t, const Subset& ideal, const Subset& filter);

}  // namespace posets
