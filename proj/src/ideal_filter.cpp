#include "posets/ideal_filter.hpp"

#include <algorithm>

namespace posets {

namespace {

void require_owned(const Poset& p, const Subset& s) {
  if (!p.same_carrier(s.owner()))
    throw Error(Errc::owner_mismatch, "subset belongs to a different poset");
}

bool directed_within(const Poset& p, const std::vector<int>& elems, const Subset& s, bool up) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j) {
      const Subset bounds = up ? p.upper_bounds(elems[i], elems[j])
                               : p.lower_bounds(elems[i], elems[j]);
      if (!bounds.intersects(s)) return false;
    }
  return true;
}

}  // namespace

bool is_ideal(const Poset& p, const Subset& s) {
  require_owned(p, s);
  if (s.empty()) return false;
  const auto elems = s.elements();
  for (int x : elems)
    if (!p.down_set(x).subset_of(s)) return false;
  return directed_within(p, elems, s, /*up=*/true);
}

bool is_filter(const Poset& p, const Subset& s) {
  require_owned(p, s);
  if (s.empty()) return false;
  const auto elems = s.elements();
  for (int x : elems)
    if (!p.up_set(x).subset_of(s)) return false;
  return directed_within(p, elems, s, /*up=*/false);
}

std::vector<Subset> enumerate_ideals(const Poset& p) {
  std::vector<Subset> out;
  out.reserve(p.size());
  for (int a = 0; a < p.size(); ++a) out.push_back(p.down_set(a));
  std::sort(out.begin(), out.end(), Subset::canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Subset> enumerate_filters(const Poset& p) {
  std::vector<Subset> out;
  out.reserve(p.size());
  for (int a = 0; a < p.size(); ++a) out.push_back(p.up_set(a));
  std::sort(out.begin(), out.end(), Subset::canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_prime_ideal(const Poset& p, const Subset& s) {
  if (!is_ideal(p, s) || s.is_full()) return false;
  const int n = p.size();
  for (int a = 0; a < n; ++a) {
    if (s.contains(a)) continue;
    for (int b = a; b < n; ++b) {
      if (s.contains(b)) continue;
      if (p.lower_bounds(a, b).subset_of(s)) return false;
    }
  }
  return true;
}

bool is_prime_filter(const Poset& p, const Subset& s) {
  if (!is_filter(p, s) || s.is_full()) return false;
  const int n = p.size();
  for (int a = 0; a < n; ++a) {
    if (s.contains(a)) continue;
    for (int b = a; b < n; ++b) {
      if (s.contains(b)) continue;
      if (p.upper_bounds(a, b).subset_of(s)) return false;
    }
  }
  return true;
}

std::vector<Subset> ultrafilters(const Poset& p) {
  const auto filters = enumerate_filters(p);
  std::vector<Subset> out;
  for (const auto& f : filters) {
    if (f.is_full()) continue;
    bool maximal = true;
    for (const auto& g : filters)
      if (!g.is_full() && f.proper_subset_of(g)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(f);
  }
  return out;
}

Subset complement(const Poset& p, const Subset& s) {
  require_owned(p, s);
  return s.complement();
}

Subset separate(const Poset& p, const Subset& ideal, const Subset& prime_filter) {
  if (!is_ideal(p, ideal)) throw Error(Errc::not_an_ideal, "separate: first argument is not an ideal");
  if (!is_prime_filter(p, prime_filter))
    throw Error(Errc::not_a_prime_filter, "separate: second argument is not a prime filter");
  if (ideal.intersects(prime_filter))
    throw Error(Errc::not_disjoint, "separate: ideal and filter are not disjoint");
  return prime_filter.complement();
}

std::vector<Subset> Catalog::prime_ideal_sets() const {
  std::vector<Subset> out;
  for (auto i : prime_ideals) out.push_back(ideals[i]);
  return out;
}

std::vector<Subset> Catalog::prime_filter_sets() const {
  std::vector<Subset> out;
  for (auto i : prime_filters) out.push_back(filters[i]);
  return out;
}

std::vector<Subset> Catalog::ultrafilter_sets() const {
  std::vector<Subset> out;
  for (auto i : ultrafilters) out.push_back(filters[i]);
  return out;
}

Catalog build_catalog(const Poset& p) {
  Catalog cat;
  cat.ideals = enumerate_ideals(p);
  cat.filters = enumerate_filters(p);

  for (std::size_t i = 0; i < cat.ideals.size(); ++i) {
    cat.ideal_generators.push_back(*p.maximal_elements(cat.ideals[i]).first());
    if (is_prime_ideal(p, cat.ideals[i])) cat.prime_ideals.push_back(i);
  }
  for (std::size_t i = 0; i < cat.filters.size(); ++i) {
    cat.filter_generators.push_back(*p.minimal_elements(cat.filters[i]).first());
    if (is_prime_filter(p, cat.filters[i])) cat.prime_filters.push_back(i);
  }
  for (std::size_t i = 0; i < cat.filters.size(); ++i) {
    const auto& f = cat.filters[i];
    if (f.is_full()) continue;
    bool maximal = true;
    for (const auto& g : cat.filters)
      if (!g.is_full() && f.proper_subset_of(g)) {
        maximal = false;
        break;
      }
    if (maximal) cat.ultrafilters.push_back(i);
  }
  return cat;
}

}  // namespace posets
