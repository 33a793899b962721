#include "posets/pseudo.hpp"

#include "posets/ideal_filter.hpp"

namespace posets {

namespace {

void require_owned(const StarTable& t, const Subset& s) {
  if (!t.poset().same_carrier(s.owner()))
    throw Error(Errc::owner_mismatch, "subset belongs to a different poset");
}

}  // namespace

int StarTable::star(int e) const {
  if (e < 0 || e >= poset_.size())
    throw Error(Errc::unknown_element, "element index out of range: " + std::to_string(e));
  return map_[e];
}

std::optional<int> pseudocomplement(const Poset& p, int a) {
  const auto zero = p.least();
  if (!zero) throw Error(Errc::no_least_element, "pseudocomplement requires a least element");
  const Subset bottom = p.singleton(*zero);

  // Candidates x with L(a,x) = {0}; a pseudocomplement is a greatest one.
  Subset candidates = p.empty_set();
  for (int x = 0; x < p.size(); ++x)
    if (p.lower_bounds(a, x) == bottom) candidates.insert(x);
  for (int m : candidates.elements())
    if (candidates.subset_of(p.down_set(m))) return m;
  return std::nullopt;
}

StarResult star_table(const Poset& p) {
  if (!p.least()) return StarCertificate{std::nullopt};
  std::vector<int> map(static_cast<std::size_t>(p.size()));
  for (int a = 0; a < p.size(); ++a) {
    const auto s = pseudocomplement(p, a);
    if (!s) return StarCertificate{a};
    map[a] = *s;
  }
  return StarTable(p, std::move(map));
}

std::optional<StarTable> try_star_table(const Poset& p) {
  auto r = star_table(p);
  if (auto* t = std::get_if<StarTable>(&r)) return std::move(*t);
  return std::nullopt;
}

bool is_pseudocomplemented(const Poset& p) {
  return std::holds_alternative<StarTable>(star_table(p));
}

Subset boolean_elements(const StarTable& t) {
  const Poset& p = t.poset();
  Subset out = p.empty_set();
  for (int a = 0; a < p.size(); ++a)
    if (t.star(t.star(a)) == a) out.insert(a);
  return out;
}

Subset dense_elements(const StarTable& t) {
  const Poset& p = t.poset();
  Subset out = p.empty_set();
  for (int a = 0; a < p.size(); ++a)
    if (t.star(a) == t.least()) out.insert(a);
  return out;
}

Subset lower_star(const StarTable& t, const Subset& a) {
  require_owned(t, a);
  const Poset& p = t.poset();
  Subset out = p.empty_set();
  for (int x = 0; x < p.size(); ++x)
    if (a.contains(t.star(x))) out.insert(x);
  return out;
}

Subset upper_star(const StarTable& t, const Subset& a) {
  require_owned(t, a);
  Subset out = t.poset().empty_set();
  for (int x : a.elements()) out.insert(t.star(x));
  return out;
}

std::optional<Subset> star_ideal_witness(const StarTable& t, const Subset& ideal) {
  const Poset& p = t.poset();
  if (!is_ideal(p, ideal))
    throw Error(Errc::not_an_ideal, "star_ideal_witness: argument is not an ideal");
  for (const auto& f : enumerate_filters(p))
    if (lower_star(t, f) == ideal) return f;
  return std::nullopt;
}

bool is_star_ideal(const StarTable& t, const Subset& ideal) {
  return star_ideal_witness(t, ideal).has_value();
}

StarIdealConditions star_ideal_conditions(const StarTable& t, const Subset& ideal) {
  const Poset& p = t.poset();
  StarIdealConditions c{};
  c.star_ideal = is_star_ideal(t, ideal);  // validates the ideal precondition
  c.double_star_closed = upper_star(t, upper_star(t, ideal)).subset_of(ideal);
  c.star_exchange = true;
  for (int x = 0; x < p.size() && c.star_exchange; ++x)
    for (int y : ideal.elements())
      if (p.leq(t.star(x), y) && !p.leq(t.star(y), x)) {
        c.star_exchange = false;
        break;
      }
  return c;
}

bool satisfies_star_condition(const StarTable& t, const Subset& s) {
  require_owned(t, s);
  for (int x = 0; x < t.poset().size(); ++x)
    if (s.contains(x) == s.contains(t.star(x))) return false;
  return true;
}

Subset separate_star(const StarTable& t, const Subset& ideal, const Subset& filter) {
  const Poset& p = t.poset();
  if (!is_ideal(p, ideal))
    throw Error(Errc::not_an_ideal, "separate_star: first argument is not an ideal");
  if (!is_filter(p, filter))
    throw Error(Errc::not_a_filter, "separate_star: second argument is not a filter");
  if (!satisfies_star_condition(t, filter))
    throw Error(Errc::star_condition_fails,
                "separate_star: filter does not satisfy the *-condition");
  if (ideal.intersects(filter))
    throw Error(Errc::not_disjoint, "separate_star: ideal and filter are not disjoint");
  return lower_star(t, filter);
}

}  // namespace posets
