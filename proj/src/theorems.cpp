#include "posets/theorems.hpp"

#include <algorithm>
#include <functional>

#include "posets/randgen.hpp"

namespace posets {

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

namespace {

struct Context {
  const Poset& p;
  CheckOptions opts;
  Catalog cat;
  std::optional<StarTable> star;
  Subset booleans;
  Subset denses;

  Context(const Poset& poset, const CheckOptions& options)
      : p(poset), opts(options), cat(build_catalog(poset)), star(try_star_table(poset)) {
    if (star) {
      booleans = boolean_elements(*star);
      denses = dense_elements(*star);
    }
  }
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Counterexample& add_set(Counterexample& ce, std::string name, const Subset& s) {
  ce.sets.emplace_back(std::move(name), s.labels());
  return ce;
}

Counterexample& add_elem(Counterexample& ce, std::string name, const Poset& p, int e) {
  ce.elements.emplace_back(std::move(name), p.label(e));
  return ce;
}

TheoremReport pass(const char* id, std::uint64_t count) {
  return {id, CheckStatus::pass, count, std::nullopt};
}

TheoremReport not_applicable(const char* id) {
  return {id, CheckStatus::not_applicable, 0, std::nullopt};
}

TheoremReport fail(const char* id, std::uint64_t count, Counterexample ce) {
  return {id, CheckStatus::fail, count, std::move(ce)};
}

// --- order-theoretic predicates over arbitrary subsets --------------------

bool down_closed(const Poset& p, const Subset& s) {
  for (int x : s.elements())
    if (!p.down_set(x).subset_of(s)) return false;
  return true;
}

bool up_closed(const Poset& p, const Subset& s) {
  for (int x : s.elements())
    if (!p.up_set(x).subset_of(s)) return false;
  return true;
}

bool up_directed_within(const Poset& p, const Subset& s) {
  const auto elems = s.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j)
      if (!p.upper_bounds(elems[i], elems[j]).intersects(s)) return false;
  return true;
}

bool down_directed_within(const Poset& p, const Subset& s) {
  const auto elems = s.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j)
      if (!p.lower_bounds(elems[i], elems[j]).intersects(s)) return false;
  return true;
}

// ∀a,b ∈ P: L(a,b) ⊆ s implies a ∈ s or b ∈ s.
bool l_prime_condition(const Poset& p, const Subset& s) {
  for (int a = 0; a < p.size(); ++a) {
    if (s.contains(a)) continue;
    for (int b = a; b < p.size(); ++b) {
      if (s.contains(b)) continue;
      if (p.lower_bounds(a, b).subset_of(s)) return false;
    }
  }
  return true;
}

bool u_prime_condition(const Poset& p, const Subset& s) {
  for (int a = 0; a < p.size(); ++a) {
    if (s.contains(a)) continue;
    for (int b = a; b < p.size(); ++b) {
      if (s.contains(b)) continue;
      if (p.upper_bounds(a, b).subset_of(s)) return false;
    }
  }
  return true;
}

bool is_principal_ideal(const Poset& p, const Subset& s) {
  const auto m = p.maximal_elements(s);
  return m.size() == 1 && s == p.down_set(*m.first());
}

bool is_principal_filter(const Poset& p, const Subset& s) {
  const auto m = p.minimal_elements(s);
  return m.size() == 1 && s == p.up_set(*m.first());
}

Subset random_subset(const Poset& p, SplitMix64& rng) {
  Subset s = p.empty_set();
  std::uint64_t word = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (i % 64 == 0) word = rng.next();
    if ((word >> (i % 64)) & 1u) s.insert(i);
  }
  return s;
}

// Visits every subset when 2^n enumeration fits under the cap, otherwise
// seeded uniform samples. The visitor returns false to report a violation
// (iteration stops). Result: {all_ok, instances_visited}.
std::pair<bool, std::uint64_t> for_each_subset(const Context& ctx, std::uint64_t salt,
                                               const std::function<bool(const Subset&)>& visit) {
  const Poset& p = ctx.p;
  const int n = p.size();
  std::uint64_t count = 0;
  if (n <= ctx.opts.subset_cap && n <= 63) {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      ++count;
      if (!visit(p.set_from_mask(mask))) return {false, count};
    }
    return {true, count};
  }
  if (ctx.opts.sample_count == 0)
    throw Error(Errc::subset_quantifier_too_large,
                "carrier of " + std::to_string(n) +
                    " exceeds the exhaustive subset cap and sampling is disabled");
  SplitMix64 rng(ctx.opts.sample_seed ^ salt);
  for (std::uint64_t k = 0; k < ctx.opts.sample_count; ++k) {
    ++count;
    if (!visit(random_subset(p, rng))) return {false, count};
  }
  return {true, count};
}

// --- checkers --------------------------------------------------------------

// Complementation swaps down-sets with up-sets, internal directedness with
// the prime-style bound condition on the complement.
TheoremReport check_lem5(Context& ctx) {
  Counterexample ce;
  auto [ok, count] = for_each_subset(ctx, fnv1a("lem5"), [&](const Subset& s) {
    const Subset co = s.complement();
    if (down_closed(ctx.p, s) != up_closed(ctx.p, co)) {
      ce.detail = "down-set / up-set complement equivalence fails";
      add_set(ce, "I", s);
      return false;
    }
    if (up_directed_within(ctx.p, s) != u_prime_condition(ctx.p, co)) {
      ce.detail = "internal upper bounds vs complement bound condition fails";
      add_set(ce, "I", s);
      return false;
    }
    if (l_prime_condition(ctx.p, s) != down_directed_within(ctx.p, co)) {
      ce.detail = "lower-bound condition vs complement directedness fails";
      add_set(ce, "I", s);
      return false;
    }
    return true;
  });
  return ok ? pass("lem5", count) : fail("lem5", count, std::move(ce));
}

TheoremReport check_cor2(Context& ctx) {
  std::uint64_t count = 0;
  for (const auto& ideal : ctx.cat.ideals) {
    ++count;
    const Subset co = ideal.complement();
    const bool prime = is_prime_ideal(ctx.p, ideal);
    const bool co_prime_filter = is_prime_filter(ctx.p, co);
    const bool co_filter = is_filter(ctx.p, co);
    if (prime != co_prime_filter || prime != co_filter) {
      Counterexample ce;
      ce.detail = "prime ideal / complement filter equivalence fails";
      add_set(ce, "I", ideal);
      add_set(ce, "P\\I", co);
      return fail("cor2", count, std::move(ce));
    }
  }
  return pass("cor2", count);
}

TheoremReport check_cor1(Context& ctx) {
  std::uint64_t count = 0;
  for (const auto& filter : ctx.cat.filters) {
    ++count;
    const Subset co = filter.complement();
    const bool prime = is_prime_filter(ctx.p, filter);
    if (prime != is_prime_ideal(ctx.p, co) || prime != is_ideal(ctx.p, co)) {
      Counterexample ce;
      ce.detail = "prime filter / complement ideal equivalence fails";
      add_set(ce, "F", filter);
      add_set(ce, "P\\F", co);
      return fail("cor1", count, std::move(ce));
    }
  }
  // Complementation is a bijection between prime ideals and prime filters.
  auto mapped = ctx.cat.prime_ideal_sets();
  for (auto& s : mapped) s = s.complement();
  std::sort(mapped.begin(), mapped.end(), Subset::canonical_less);
  auto prime_filters = ctx.cat.prime_filter_sets();
  std::sort(prime_filters.begin(), prime_filters.end(), Subset::canonical_less);
  ++count;
  if (mapped != prime_filters) {
    Counterexample ce;
    ce.detail = "complement map is not a bijection onto the prime filters";
    return fail("cor1", count, std::move(ce));
  }
  return pass("cor1", count);
}

TheoremReport check_cor3(Context& ctx) {
  std::uint64_t count = 0;
  for (const auto& ideal : ctx.cat.ideals) {
    for (auto fi : ctx.cat.prime_filters) {
      const Subset& f = ctx.cat.filters[fi];
      if (ideal.intersects(f)) continue;
      ++count;
      const Subset j = separate(ctx.p, ideal, f);
      if (!is_prime_ideal(ctx.p, j) || !ideal.subset_of(j) || j.intersects(f)) {
        Counterexample ce;
        ce.detail = "separation witness violates its contract";
        add_set(ce, "I", ideal);
        add_set(ce, "F", f);
        add_set(ce, "J", j);
        return fail("cor3", count, std::move(ce));
      }
    }
  }
  return pass("cor3", count);
}

TheoremReport check_lem1_finite(Context& ctx) {
  std::uint64_t ideals_found = 0, filters_found = 0;
  Counterexample ce;
  auto [ok, count] = for_each_subset(ctx, fnv1a("lem1-finite"), [&](const Subset& s) {
    if (is_ideal(ctx.p, s)) {
      ++ideals_found;
      if (!is_principal_ideal(ctx.p, s)) {
        ce.detail = "ideal is not principal";
        add_set(ce, "I", s);
        return false;
      }
    }
    if (is_filter(ctx.p, s)) {
      ++filters_found;
      if (!is_principal_filter(ctx.p, s)) {
        ce.detail = "filter is not principal";
        add_set(ce, "F", s);
        return false;
      }
    }
    return true;
  });
  if (!ok) return fail("lem1-finite", count, std::move(ce));
  // Under exhaustive enumeration the principal lists are complete.
  if (ctx.p.size() <= ctx.opts.subset_cap &&
      (ideals_found != ctx.cat.ideals.size() || filters_found != ctx.cat.filters.size())) {
    ce.detail = "principal enumeration disagrees with the subset scan";
    return fail("lem1-finite", count, std::move(ce));
  }
  return pass("lem1-finite", count);
}

TheoremReport check_facts(Context& ctx) {
  if (!ctx.star) return not_applicable("facts");
  const Poset& p = ctx.p;
  const StarTable& t = *ctx.star;
  const int n = p.size();
  const int zero = t.least();
  const Subset bottom = p.singleton(zero);
  std::uint64_t count = 0;
  auto bad = [&](std::string detail, std::initializer_list<int> elems) {
    Counterexample ce;
    ce.detail = std::move(detail);
    const char* names[] = {"a", "b"};
    int i = 0;
    for (int e : elems) add_elem(ce, names[i++], p, e);
    return fail("facts", count, std::move(ce));
  };

  if (!p.greatest() || t.star(zero) != *p.greatest())
    return bad("0* is not the greatest element", {zero});
  if (t.star(*p.greatest()) != zero) return bad("1* is not 0", {*p.greatest()});

  for (int a = 0; a < n; ++a) {
    ++count;
    if (!p.leq(a, t.star(t.star(a)))) return bad("a <= a** fails", {a});
    if (t.star(t.star(t.star(a))) != t.star(a)) return bad("a*** = a* fails", {a});
    for (int b = 0; b < n; ++b) {
      ++count;
      if (p.leq(a, b) && !p.leq(t.star(b), t.star(a))) return bad("antitonicity fails", {a, b});
      const bool e1 = p.lower_bounds(a, b) == bottom;
      const bool e2 = p.leq(a, t.star(b));
      const bool e3 = p.leq(t.star(t.star(a)), t.star(b));
      const bool e4 = p.leq(b, t.star(a));
      const bool e5 = p.leq(t.star(t.star(b)), t.star(a));
      const bool e6 = p.lower_bounds(t.star(t.star(a)), b) == bottom;
      if (e1 != e2 || e1 != e3 || e1 != e4 || e1 != e5 || e1 != e6)
        return bad("disjointness equivalence chain fails", {a, b});
    }
    ++count;
    if (ctx.denses.contains(a))
      for (int b = 0; b < n; ++b)
        if (p.leq(a, b) && !ctx.denses.contains(b)) return bad("dense up-closure fails", {a, b});
  }

  ++count;
  if (!ctx.booleans.contains(zero) || !ctx.booleans.contains(*p.greatest()) ||
      !ctx.denses.contains(*p.greatest()))
    return bad("0,1 Boolean / 1 dense membership fails", {});
  if (upper_star(t, p.full_set()) != ctx.booleans) return bad("P^* = B(P) fails", {});
  if ((ctx.booleans & ctx.denses) != p.singleton(*p.greatest()))
    return bad("B(P) ∩ D(P) = {1} fails", {});
  return pass("facts", count);
}

TheoremReport check_lem4(Context& ctx) {
  if (!ctx.star) return not_applicable("lem4");
  const Poset& p = ctx.p;
  const StarTable& t = *ctx.star;
  std::uint64_t count = 0;
  Counterexample ce;

  // (i) fullness transfers through _*; (ii) proper filters avoid their _*.
  for (const auto& ideal : ctx.cat.ideals) {
    ++count;
    if (ideal.is_full() != lower_star(t, ideal).is_full()) {
      ce.detail = "fullness equivalence fails for an ideal";
      add_set(ce, "I", ideal);
      return fail("lem4", count, std::move(ce));
    }
  }
  for (const auto& f : ctx.cat.filters) {
    ++count;
    const Subset fs = lower_star(t, f);
    if (f.is_full() != fs.is_full()) {
      ce.detail = "fullness equivalence fails for a filter";
      add_set(ce, "F", f);
      return fail("lem4", count, std::move(ce));
    }
    if (!f.is_full() && f.intersects(fs)) {
      ce.detail = "proper filter meets its lower star";
      add_set(ce, "F", f);
      add_set(ce, "F_*", fs);
      return fail("lem4", count, std::move(ce));
    }
  }

  // (iii) a ∈ A_* iff a** ∈ A_*; (iv) monotone in A.
  auto [ok3, c3] = for_each_subset(ctx, fnv1a("lem4-iii"), [&](const Subset& a) {
    const Subset as = lower_star(t, a);
    for (int e = 0; e < p.size(); ++e)
      if (as.contains(e) != as.contains(t.star(t.star(e)))) {
        ce.detail = "double-star stability of the preimage fails";
        add_set(ce, "A", a);
        add_elem(ce, "a", p, e);
        return false;
      }
    return true;
  });
  count += c3;
  if (!ok3) return fail("lem4", count, std::move(ce));

  const int n = p.size();
  if (n <= ctx.opts.subset_cap && n <= 30) {
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t a = 0; a <= full; ++a) {
      const Subset sa = p.set_from_mask(a);
      const Subset sa_star = lower_star(t, sa);
      const std::uint64_t rest = full & ~a;
      // Supersets of a: a | sub for every submask sub of the complement.
      std::uint64_t sub = rest;
      while (true) {
        ++count;
        const Subset sb = p.set_from_mask(a | sub);
        if (!sa_star.subset_of(lower_star(t, sb))) {
          ce.detail = "monotonicity of the preimage fails";
          add_set(ce, "A", sa);
          add_set(ce, "B", sb);
          return fail("lem4", count, std::move(ce));
        }
        if (sub == 0) break;
        sub = (sub - 1) & rest;
      }
    }
  } else {
    SplitMix64 rng(ctx.opts.sample_seed ^ fnv1a("lem4-iv"));
    for (std::uint64_t k = 0; k < ctx.opts.sample_count; ++k) {
      ++count;
      const Subset a = random_subset(p, rng);
      const Subset b = a | random_subset(p, rng);
      if (!lower_star(t, a).subset_of(lower_star(t, b))) {
        ce.detail = "monotonicity of the preimage fails";
        add_set(ce, "A", a);
        add_set(ce, "B", b);
        return fail("lem4", count, std::move(ce));
      }
    }
  }

  // (v) _* commutes with unions and intersections of small families.
  std::vector<Subset> pool{p.empty_set(), p.full_set()};
  SplitMix64 rng(ctx.opts.sample_seed ^ fnv1a("lem4-v"));
  for (int i = 0; i < ctx.opts.family_pool; ++i) pool.push_back(random_subset(p, rng));
  const std::size_t m = pool.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t k = j; k < m; ++k) {
        ++count;
        const Subset u = pool[i] | pool[j] | pool[k];
        const Subset x = pool[i] & pool[j] & pool[k];
        if (lower_star(t, u) !=
                (lower_star(t, pool[i]) | lower_star(t, pool[j]) | lower_star(t, pool[k])) ||
            lower_star(t, x) !=
                (lower_star(t, pool[i]) & lower_star(t, pool[j]) & lower_star(t, pool[k]))) {
          ce.detail = "preimage does not commute with union/intersection";
          add_set(ce, "A1", pool[i]);
          add_set(ce, "A2", pool[j]);
          add_set(ce, "A3", pool[k]);
          return fail("lem4", count, std::move(ce));
        }
      }
  return pass("lem4", count);
}

TheoremReport check_star_char(Context& ctx) {
  if (!ctx.star) return not_applicable("star-char");
  std::uint64_t count = 0;
  for (const auto& ideal : ctx.cat.ideals) {
    ++count;
    const auto c = star_ideal_conditions(*ctx.star, ideal);
    if ((c.star_ideal && !c.double_star_closed) ||
        (c.double_star_closed && c.star_exchange && !c.star_ideal)) {
      Counterexample ce;
      ce.detail = "characterization implication fails";
      add_set(ce, "I", ideal);
      return fail("star-char", count, std::move(ce));
    }
  }
  return pass("star-char", count);
}

TheoremReport check_lem3(Context& ctx) {
  if (!ctx.star) return not_applicable("lem3");
  const StarTable& t = *ctx.star;
  std::uint64_t count = 0;
  for (const auto& f : ctx.cat.filters) {
    ++count;
    const Subset fs = lower_star(t, f);
    if (!is_ideal(ctx.p, fs) || !is_star_ideal(t, fs)) {
      Counterexample ce;
      ce.detail = "lower star of a filter is not a *-ideal";
      add_set(ce, "F", f);
      add_set(ce, "F_*", fs);
      return fail("lem3", count, std::move(ce));
    }
  }
  for (int a = 0; a < ctx.p.size(); ++a) {
    ++count;
    if (ctx.p.down_set(t.star(a)) != lower_star(t, ctx.p.up_set(a))) {
      Counterexample ce;
      ce.detail = "(a*] = [a)_* fails";
      add_elem(ce, "a", ctx.p, a);
      return fail("lem3", count, std::move(ce));
    }
  }
  return pass("lem3", count);
}

TheoremReport check_lem2(Context& ctx) {
  if (!ctx.star) return not_applicable("lem2");
  std::uint64_t count = 0;
  for (const auto& ideal : ctx.cat.ideals) {
    if (ideal.is_full() || !is_star_ideal(*ctx.star, ideal)) continue;
    ++count;
    if (ideal.intersects(ctx.denses)) {
      Counterexample ce;
      ce.detail = "proper *-ideal contains a dense element";
      add_set(ce, "I", ideal);
      return fail("lem2", count, std::move(ce));
    }
  }
  return pass("lem2", count);
}

TheoremReport check_th1(Context& ctx) {
  if (!ctx.star) return not_applicable("th1");
  const Poset& p = ctx.p;
  const StarTable& t = *ctx.star;
  std::uint64_t count = 0;
  for (int a = 0; a < p.size(); ++a) {
    ++count;
    const bool boolean = ctx.booleans.contains(a);
    const bool principal_star = is_star_ideal(t, p.down_set(a));
    bool closed = true;
    for (const auto& ideal : ctx.cat.ideals)
      if (ideal.contains(a) && !ideal.contains(t.star(t.star(a)))) {
        closed = false;
        break;
      }
    if (boolean != principal_star || boolean != closed) {
      Counterexample ce;
      ce.detail = "Boolean element characterization fails";
      add_elem(ce, "a", p, a);
      return fail("th1", count, std::move(ce));
    }
  }
  ++count;
  const bool only_top_dense = ctx.denses == p.singleton(*p.greatest());
  bool no_proper_ideal_meets = true;
  for (const auto& ideal : ctx.cat.ideals)
    if (!ideal.is_full() && ideal.intersects(ctx.denses)) {
      no_proper_ideal_meets = false;
      break;
    }
  if (only_top_dense != no_proper_ideal_meets) {
    Counterexample ce;
    ce.detail = "dense-element / proper-ideal equivalence fails";
    add_set(ce, "D", ctx.denses);
    return fail("th1", count, std::move(ce));
  }
  return pass("th1", count);
}

TheoremReport check_th3(Context& ctx) {
  if (!ctx.star) return not_applicable("th3");
  const Poset& p = ctx.p;
  const StarTable& t = *ctx.star;
  std::uint64_t count = 0;
  auto both_in = [&](const Subset& s) -> std::optional<int> {
    for (int a = 0; a < p.size(); ++a)
      if (s.contains(a) && s.contains(t.star(a))) return a;
    return std::nullopt;
  };
  for (const auto& ideal : ctx.cat.ideals) {
    ++count;
    const bool dense_free = !ideal.intersects(ctx.denses);
    if (dense_free)
      if (auto a = both_in(ideal)) {
        Counterexample ce;
        ce.detail = "dense-free ideal contains x and x*";
        add_set(ce, "I", ideal);
        add_elem(ce, "a", p, *a);
        return fail("th3", count, std::move(ce));
      }
    if (is_prime_ideal(p, ideal) && dense_free && !satisfies_star_condition(t, ideal)) {
      Counterexample ce;
      ce.detail = "dense-free prime ideal misses the *-condition";
      add_set(ce, "I", ideal);
      return fail("th3", count, std::move(ce));
    }
    if (satisfies_star_condition(t, ideal) && ideal.intersects(ctx.denses)) {
      Counterexample ce;
      ce.detail = "*-condition ideal contains a dense element";
      add_set(ce, "I", ideal);
      return fail("th3", count, std::move(ce));
    }
  }
  for (const auto& f : ctx.cat.filters) {
    if (f.is_full()) continue;
    ++count;
    if (auto a = both_in(f)) {
      Counterexample ce;
      ce.detail = "proper filter contains x and x*";
      add_set(ce, "F", f);
      add_elem(ce, "a", p, *a);
      return fail("th3", count, std::move(ce));
    }
    if (is_prime_filter(p, f) && ctx.denses.subset_of(f) && !satisfies_star_condition(t, f)) {
      Counterexample ce;
      ce.detail = "dense-complete prime filter misses the *-condition";
      add_set(ce, "F", f);
      return fail("th3", count, std::move(ce));
    }
    if (satisfies_star_condition(t, f) && !ctx.denses.subset_of(f)) {
      Counterexample ce;
      ce.detail = "*-condition filter misses a dense element";
      add_set(ce, "F", f);
      return fail("th3", count, std::move(ce));
    }
  }
  return pass("th3", count);
}

TheoremReport check_cor6(Context& ctx) {
  if (!ctx.star) return not_applicable("cor6");
  std::uint64_t count = 0;
  for (auto ii : ctx.cat.prime_ideals) {
    ++count;
    const Subset& ideal = ctx.cat.ideals[ii];
    if (satisfies_star_condition(*ctx.star, ideal) != !ideal.intersects(ctx.denses)) {
      Counterexample ce;
      ce.detail = "prime ideal *-condition / dense-freeness equivalence fails";
      add_set(ce, "I", ideal);
      return fail("cor6", count, std::move(ce));
    }
  }
  return pass("cor6", count);
}

TheoremReport check_th2(Context& ctx) {
  if (!ctx.star) return not_applicable("th2");
  const StarTable& t = *ctx.star;
  const auto ultra = ctx.cat.ultrafilter_sets();
  auto is_ultra = [&](const Subset& f) {
    return std::find(ultra.begin(), ultra.end(), f) != ultra.end();
  };
  std::uint64_t count = 0;
  for (const auto& f : ctx.cat.filters) {
    if (f.is_full()) continue;
    ++count;
    const bool star_cond = satisfies_star_condition(t, f);
    if (star_cond && !is_ultra(f)) {
      Counterexample ce;
      ce.detail = "*-condition filter is not an ultrafilter";
      add_set(ce, "F", f);
      return fail("th2", count, std::move(ce));
    }
    if (is_ultra(f) && check_th2_condition_iii(ctx.p, f) && !star_cond) {
      Counterexample ce;
      ce.detail = "directed ultrafilter misses the *-condition";
      add_set(ce, "F", f);
      return fail("th2", count, std::move(ce));
    }
  }
  return pass("th2", count);
}

TheoremReport check_th2_cor(Context& ctx) {
  if (!ctx.star) return not_applicable("th2-cor");
  const auto ultra = ctx.cat.ultrafilter_sets();
  std::uint64_t count = 0;
  for (auto fi : ctx.cat.prime_filters) {
    const Subset& f = ctx.cat.filters[fi];
    if (!ctx.denses.subset_of(f)) continue;
    ++count;
    if (std::find(ultra.begin(), ultra.end(), f) == ultra.end()) {
      Counterexample ce;
      ce.detail = "dense-complete prime filter is not an ultrafilter";
      add_set(ce, "F", f);
      return fail("th2-cor", count, std::move(ce));
    }
  }
  return pass("th2-cor", count);
}

TheoremReport check_lem6(Context& ctx) {
  if (!ctx.star) return not_applicable("lem6");
  const StarTable& t = *ctx.star;
  std::uint64_t count = 0;
  for (const auto& f : ctx.cat.filters) {
    if (f.is_full() || !satisfies_star_condition(t, f)) continue;
    ++count;
    const Subset fs = lower_star(t, f);
    if (!is_prime_filter(ctx.p, f) || !ctx.denses.subset_of(f) || fs != f.complement() ||
        !is_star_ideal(t, fs)) {
      Counterexample ce;
      ce.detail = "*-condition filter violates the key lemma";
      add_set(ce, "F", f);
      add_set(ce, "F_*", fs);
      return fail("lem6", count, std::move(ce));
    }
  }
  return pass("lem6", count);
}

TheoremReport check_lem6_cor(Context& ctx) {
  if (!ctx.star) return not_applicable("lem6-cor");
  std::uint64_t count = 0;
  for (const auto& f : ctx.cat.filters) {
    if (f.is_full()) continue;
    ++count;
    if (satisfies_star_condition(*ctx.star, f) != ctx.denses.subset_of(f)) {
      Counterexample ce;
      ce.detail = "proper filter *-condition / dense-completeness equivalence fails";
      add_set(ce, "F", f);
      return fail("lem6-cor", count, std::move(ce));
    }
  }
  return pass("lem6-cor", count);
}

TheoremReport check_cor4(Context& ctx) {
  if (!ctx.star) return not_applicable("cor4");
  const StarTable& t = *ctx.star;
  std::uint64_t count = 0;
  for (const auto& ideal : ctx.cat.ideals) {
    for (const auto& f : ctx.cat.filters) {
      if (!satisfies_star_condition(t, f) || ideal.intersects(f)) continue;
      ++count;
      const Subset j = separate_star(t, ideal, f);
      if (!is_star_ideal(t, j) || !ideal.subset_of(j) || j.intersects(f) ||
          j != f.complement()) {
        Counterexample ce;
        ce.detail = "*-separation witness violates its contract";
        add_set(ce, "I", ideal);
        add_set(ce, "F", f);
        add_set(ce, "J", j);
        return fail("cor4", count, std::move(ce));
      }
    }
  }
  return pass("cor4", count);
}

struct RegistryEntry {
  const char* id;
  TheoremReport (*run)(Context&);
};

constexpr RegistryEntry kRegistry[] = {
    {"lem5", check_lem5},
    {"cor2", check_cor2},
    {"cor1", check_cor1},
    {"cor3", check_cor3},
    {"lem1-finite", check_lem1_finite},
    {"facts", check_facts},
    {"lem4", check_lem4},
    {"star-char", check_star_char},
    {"lem3", check_lem3},
    {"lem2", check_lem2},
    {"th1", check_th1},
    {"th3", check_th3},
    {"cor6", check_cor6},
    {"th2", check_th2},
    {"th2-cor", check_th2_cor},
    {"lem6", check_lem6},
    {"lem6-cor", check_lem6_cor},
    {"cor4", check_cor4},
};

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : kRegistry) v.emplace_back(e.id);
    return v;
  }();
  return ids;
}

TheoremReport check(const Poset& p, std::string_view theorem_id, const CheckOptions& opts) {
  for (const auto& e : kRegistry)
    if (theorem_id == e.id) {
      Context ctx(p, opts);
      return e.run(ctx);
    }
  throw Error(Errc::unknown_theorem, "unknown theorem id: " + std::string(theorem_id));
}

std::vector<TheoremReport> check_all(const Poset& p, const CheckOptions& opts) {
  Context ctx(p, opts);
  std::vector<TheoremReport> out;
  out.reserve(std::size(kRegistry));
  for (const auto& e : kRegistry) out.push_back(e.run(ctx));
  return out;
}

bool check_th2_condition_iii(const Poset& p, const Subset& proper_filter) {
  if (!is_filter(p, proper_filter))
    throw Error(Errc::not_a_filter, "condition (iii) needs a filter");
  if (proper_filter.is_full())
    throw Error(Errc::not_proper, "condition (iii) needs a proper filter");
  const int n = p.size();
  const auto members = proper_filter.elements();
  for (int a = 0; a < n; ++a) {
    if (proper_filter.contains(a)) continue;
    // Bounds set {x | ∃f ∈ F: L(a,f) ⊆ (x]}; the condition demands it be
    // closed under common lower bounds within itself.
    Subset bounds = p.empty_set();
    for (int x = 0; x < n; ++x) {
      const Subset dx = p.down_set(x);
      for (int f : members)
        if (p.lower_bounds(a, f).subset_of(dx)) {
          bounds.insert(x);
          break;
        }
    }
    const auto be = bounds.elements();
    for (std::size_t i = 0; i < be.size(); ++i)
      for (std::size_t j = i; j < be.size(); ++j)
        if (!p.lower_bounds(be[i], be[j]).intersects(bounds)) return false;
  }
  return true;
}

}  // namespace posets
