#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bipint/graph.hpp"

namespace bipint {

// Degree-preserving double-edge swap chain.
struct SwapConfig {
  double swaps_per_edge = 10.0;
  std::uint64_t seed = 1;
  std::uint64_t max_rejections_factor = 100;
};

struct RandomizeResult {
  BipartiteGraph graph;
  std::uint64_t attempts = 0;
  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;
  // The chain stopped on a run of consecutive rejections as long as the guard
  // min(max_rejections_factor * |E|, attempt budget).
  bool saturated = false;
};

// One double-edge swap (a,b),(c,d) -> (a,d),(c,b). Returns false and leaves
// `g` untouched when a == c, b == d, or either new link already exists.
// Throws NotFoundError if an input link is absent.
bool swap_links(BipartiteGraph& g, const Edge& ab, const Edge& cd);

// ⌈swaps_per_edge · |E|⌉ attempted swaps (a,b),(c,d) → (a,d),(c,b); rejected
// attempts count toward the budget. Labels and node sets are kept.
// Throws CannotSwapError when |E| < 2, Error on a non-positive rate.
RandomizeResult randomize(const BipartiteGraph& g, const SwapConfig& cfg);

// n_samples independent chains from `g`, sample k seeded with cfg.seed + k.
std::vector<RandomizeResult> sample_batch(const BipartiteGraph& g, const SwapConfig& cfg, std::size_t n_samples);

// Per-node degrees of both sides, bottom first.
std::vector<std::size_t> degree_sequence(const BipartiteGraph& g);

}  // namespace bipint
