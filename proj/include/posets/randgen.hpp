#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posets/poset.hpp"

namespace posets {

/// SplitMix64. The algorithm identity is part of the generation contract:
/// golden outputs pinned against the published reference sequence, so
/// fixtures reproduce across platforms and implementations.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Top 53 bits as a double in [0,1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

struct GenConfig {
  int n = 6;
  double edge_prob = 0.3;
  std::uint64_t seed = 0;
  /// Adjoin a fresh least element "bot" below everything (carrier n+1).
  bool force_bottom = false;
  /// Rejection-sample until the star table is total.
  bool require_pseudocomplemented = false;
  int max_rejects = 1000;
};

/// Deterministic random poset: each pair (i,j), i<j in index order, gets one
/// PRNG draw and becomes a relation edge with probability edge_prob; the
/// order is the transitive closure. Identical configs give identical posets.
Poset generate(const GenConfig& cfg);

struct StreamItem {
  std::uint64_t seed = 0;
  std::optional<Poset> poset;
  std::optional<Errc> error;
  std::string message;
};

/// Posets for seeds seed, seed+1, …, seed+count-1; per-item failures are
/// recorded without aborting the stream.
std::vector<StreamItem> stream(const GenConfig& cfg, int count);

}  // namespace posets
