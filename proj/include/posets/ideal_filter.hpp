#pragma once

#include <cstddef>
#include <vector>

#include "posets/poset.hpp"

namespace posets {

/// True iff s is non-empty, downward closed, and every pair of members has
/// an upper bound inside s. Never throws on "merely not an ideal" inputs.
bool is_ideal(const Poset& p, const Subset& s);
/// Order dual of is_ideal.
bool is_filter(const Poset& p, const Subset& s);

/// All ideals, i.e. the principal down-sets, sorted by (size, canonical).
std::vector<Subset> enumerate_ideals(const Poset& p);
std::vector<Subset> enumerate_filters(const Poset& p);

/// Proper ideal s with: L(a,b) ⊆ s implies a ∈ s or b ∈ s, for all a,b.
bool is_prime_ideal(const Poset& p, const Subset& s);
/// Proper filter s with: U(a,b) ⊆ s implies a ∈ s or b ∈ s, for all a,b.
bool is_prime_filter(const Poset& p, const Subset& s);

/// Maximal proper filters.
std::vector<Subset> ultrafilters(const Poset& p);

Subset complement(const Poset& p, const Subset& s);

/// Separation: given an ideal and a prime filter that are disjoint, returns
/// the prime ideal P∖F, which contains the ideal and avoids the filter.
Subset separate(const Poset& p, const Subset& ideal, const Subset& prime_filter);

/// Full ideal/filter classification of one poset. Lists are sorted by
/// (size, canonical bitset); the prime and ultrafilter lists are indices
/// into `ideals` / `filters`.
struct Catalog {
  std::vector<Subset> ideals;
  std::vector<Subset> filters;
  std::vector<int> ideal_generators;  // ideals[i] == down_set(ideal_generators[i])
  std::vector<int> filter_generators;
  std::vector<std::size_t> prime_ideals;
  std::vector<std::size_t> prime_filters;
  std::vector<std::size_t> ultrafilters;

  std::vector<Subset> prime_ideal_sets() const;
  std::vector<Subset> prime_filter_sets() const;
  std::vector<Subset> ultrafilter_sets() const;
};

Catalog build_catalog(const Poset& p);

}  // namespace posets
