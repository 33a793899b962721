#include "posets/randgen.hpp"

#include "posets/pseudo.hpp"

namespace posets {

namespace {

void validate(const GenConfig& cfg) {
  if (cfg.n < 1) throw Error(Errc::bad_argument, "generator needs n >= 1");
  if (!(cfg.edge_prob >= 0.0 && cfg.edge_prob <= 1.0))
    throw Error(Errc::bad_argument, "edge_prob must lie in [0,1]");
  if (cfg.max_rejects < 1) throw Error(Errc::bad_argument, "max_rejects must be >= 1");
}

Poset sample_once(const GenConfig& cfg, SplitMix64& rng) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> pairs;
  if (cfg.force_bottom) labels.emplace_back("bot");
  for (int i = 0; i < cfg.n; ++i) labels.push_back("x" + std::to_string(i));

  // One draw per (i,j) pair, even for edges later absorbed by transitivity,
  // so the draw count per attempt is fixed at n(n-1)/2.
  for (int i = 0; i < cfg.n; ++i)
    for (int j = i + 1; j < cfg.n; ++j)
      if (rng.next_unit() < cfg.edge_prob)
        pairs.emplace_back("x" + std::to_string(i), "x" + std::to_string(j));

  if (cfg.force_bottom)
    for (int i = 0; i < cfg.n; ++i) pairs.emplace_back("bot", "x" + std::to_string(i));

  return Poset::from_covers(labels, pairs);
}

}  // namespace

Poset generate(const GenConfig& cfg) {
  validate(cfg);
  SplitMix64 rng(cfg.seed);
  for (int attempt = 0; attempt < cfg.max_rejects; ++attempt) {
    Poset p = sample_once(cfg, rng);
    if (!cfg.require_pseudocomplemented || is_pseudocomplemented(p)) return p;
  }
  throw Error(Errc::rejection_budget_exhausted,
              "no pseudocomplemented poset after " + std::to_string(cfg.max_rejects) +
                  " attempts (seed " + std::to_string(cfg.seed) + ")");
}

std::vector<StreamItem> stream(const GenConfig& cfg, int count) {
  if (count < 1) throw Error(Errc::bad_argument, "stream needs count >= 1");
  validate(cfg);
  std::vector<StreamItem> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    GenConfig item_cfg = cfg;
    item_cfg.seed = cfg.seed + static_cast<std::uint64_t>(k);
    StreamItem item;
    item.seed = item_cfg.seed;
    try {
      item.poset = generate(item_cfg);
    } catch (const Error& e) {
      item.error = e.code();
      item.message = e.what();
    }
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace posets
