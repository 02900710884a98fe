#include "bipint/nullmodel.hpp"

#include <algorithm>
#include <cmath>

#include "bipint/error.hpp"
#include "bipint/random.hpp"

namespace bipint {

bool swap_links(BipartiteGraph& g, const Edge& ab, const Edge& cd) {
  if (!g.has_edge(ab) || !g.has_edge(cd)) throw NotFoundError("swap needs two existing links");
  const Edge ad{ab.bottom, cd.top};
  const Edge cb{cd.bottom, ab.top};
  if (ab.bottom == cd.bottom || ab.top == cd.top || g.has_edge(ad) || g.has_edge(cb)) return false;
  g.remove_link(ab);
  g.remove_link(cd);
  g.add_link(ad);
  g.add_link(cb);
  return true;
}

RandomizeResult randomize(const BipartiteGraph& g, const SwapConfig& cfg) {
  if (!(cfg.swaps_per_edge > 0.0) || !std::isfinite(cfg.swaps_per_edge)) {
    throw Error("swaps_per_edge must be a positive number");
  }
  if (cfg.max_rejections_factor == 0) throw Error("max_rejections_factor must be positive");
  const std::size_t m = g.edge_count();
  if (m < 2) throw CannotSwapError("randomization needs at least 2 links, graph has " + std::to_string(m));

  RandomizeResult result;
  result.graph = g;
  BipartiteGraph& h = result.graph;
  std::vector<Edge> edges = g.edges();

  const auto budget = static_cast<std::uint64_t>(std::ceil(cfg.swaps_per_edge * static_cast<double>(m)));
  const std::uint64_t guard = std::min<std::uint64_t>(cfg.max_rejections_factor * m, budget);
  std::uint64_t run = 0;

  Rng rng(cfg.seed);
  while (result.attempts < budget) {
    ++result.attempts;
    const auto i = rng.below(m);
    auto j = rng.below(m - 1);
    if (j >= i) ++j;
    const Edge ab = edges[i];
    const Edge cd = edges[j];
    if (!swap_links(h, ab, cd)) {
      ++result.rejected;
      if (++run >= guard) {
        result.saturated = true;
        break;
      }
      continue;
    }
    run = 0;
    edges[i] = {ab.bottom, cd.top};
    edges[j] = {cd.bottom, ab.top};
    ++result.accepted;
  }
  return result;
}

std::vector<RandomizeResult> sample_batch(const BipartiteGraph& g, const SwapConfig& cfg, std::size_t n_samples) {
  if (n_samples == 0) throw Error("n_samples must be at least 1");
  std::vector<RandomizeResult> out;
  out.reserve(n_samples);
  for (std::size_t k = 0; k < n_samples; ++k) {
    SwapConfig c = cfg;
    c.seed = cfg.seed + k;
    out.push_back(randomize(g, c));
  }
  return out;
}

std::vector<std::size_t> degree_sequence(const BipartiteGraph& g) {
  std::vector<std::size_t> out;
  out.reserve(g.bottom_count() + g.top_count());
  for (Side s : {Side::Bottom, Side::Top}) {
    for (Index i = 0; i < g.node_count(s); ++i) out.push_back(g.degree(s, i));
  }
  return out;
}

}  // namespace bipint
