#include "bipint/internal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bipint/error.hpp"
#include "bipint/random.hpp"

namespace bipint {

namespace {

void require_role(NodeId u, NodeId v, Side side) {
  if (u.side != side || v.side != opposite(side)) {
    throw RangeError("expected u on the " + std::string(to_string(side)) + " side and v on the opposite side");
  }
}

void require_link(const BipartiteGraph& g, const Edge& e) {
  if (!g.has_edge(e)) {
    throw NotFoundError("(" + g.label(Side::Bottom, e.bottom) + ", " + g.label(Side::Top, e.top) +
                        ") is not a link");
  }
}

void require_non_link(const BipartiteGraph& g, const Edge& e) {
  if (g.has_edge(e)) {
    throw DuplicateError("(" + g.label(Side::Bottom, e.bottom) + ", " + g.label(Side::Top, e.top) +
                         ") is already a link");
  }
}

bool link_check(const BipartiteGraph& g, const Edge& e, Side side) {
  const Side other = opposite(side);
  const Index u = endpoint(e, side);
  const Index v = endpoint(e, other);
  const auto nu = g.neighbors(side, u);
  for (Index x : g.neighbors(other, v)) {
    if (x == u) continue;
    if (!shares_element_except(nu, g.neighbors(side, x), v)) return false;
  }
  return true;
}

bool pair_check(const BipartiteGraph& g, const Edge& e, Side side) {
  const Side other = opposite(side);
  const Index u = endpoint(e, side);
  const Index v = endpoint(e, other);
  const auto nu = g.neighbors(side, u);
  for (Index x : g.neighbors(other, v)) {
    if (x != u && !shares_element(nu, g.neighbors(side, x))) return false;
  }
  return true;
}

bool eligible_node(const BipartiteGraph& g, Side s, Index i, bool filter) {
  return !filter || g.degree(s, i) >= 2;
}

}  // namespace

bool passes_degree_filter(const BipartiteGraph& g, const Edge& e) {
  return g.degree(Side::Bottom, e.bottom) >= 2 && g.degree(Side::Top, e.top) >= 2;
}

bool is_internal_link(const BipartiteGraph& g, const Edge& e, Side side) {
  require_link(g, e);
  return link_check(g, e, side);
}

bool is_internal_link(const BipartiteGraph& g, NodeId u, NodeId v, Side side) {
  require_role(u, v, side);
  return is_internal_link(g, make_edge(u, v), side);
}

bool is_internal_link_oracle(const BipartiteGraph& g, const Edge& e, Side side) {
  require_link(g, e);
  BipartiteGraph removed = g;
  removed.remove_link(e);
  return projection_equal(project(g, side), project(removed, side));
}

bool is_internal_link_oracle(const BipartiteGraph& g, NodeId u, NodeId v, Side side) {
  require_role(u, v, side);
  return is_internal_link_oracle(g, make_edge(u, v), side);
}

bool is_internal_pair(const BipartiteGraph& g, const Edge& e, Side side) {
  require_non_link(g, e);
  return pair_check(g, e, side);
}

bool is_internal_pair(const BipartiteGraph& g, NodeId u, NodeId v, Side side) {
  require_role(u, v, side);
  return is_internal_pair(g, make_edge(u, v), side);
}

bool is_internal_pair_oracle(const BipartiteGraph& g, const Edge& e, Side side) {
  require_non_link(g, e);
  BipartiteGraph added = g;
  added.add_link(e);
  return projection_equal(project(g, side), project(added, side));
}

InternalLinkSet enumerate_internal_links(const BipartiteGraph& g, Side side, bool apply_degree_filter) {
  InternalLinkSet out;
  out.side = side;
  out.filtered = apply_degree_filter;
  for (Index u = 0; u < g.bottom_count(); ++u) {
    for (Index v : g.neighbors(Side::Bottom, u)) {
      const Edge e{u, v};
      if (apply_degree_filter && !passes_degree_filter(g, e)) continue;
      ++out.analyzed_links;
      if (link_check(g, e, side)) out.links.push_back(e);
    }
  }
  return out;
}

InternalPairCount count_internal_pairs_exact(const BipartiteGraph& g, Side side, PairOptions options) {
  const Side other = opposite(side);
  const std::size_t own_count = g.node_count(side);
  const bool filter = options.apply_degree_filter;

  std::uint64_t eligible_own = 0;
  for (Index u = 0; u < own_count; ++u) eligible_own += eligible_node(g, side, u, filter) ? 1 : 0;

  InternalPairCount result;
  result.side = side;
  std::uint64_t count = 0;
  std::uint64_t candidates = 0;

  std::vector<Index> seen(own_count, 0);   // seen[x] == v + 1: x collected for v
  std::vector<Index> inner(own_count, 0);  // inner[x] == v + 1: x ∈ N(v)
  std::vector<Index> pool;

  for (Index v = 0; v < g.node_count(other); ++v) {
    const auto nv = g.neighbors(other, v);
    if (!eligible_node(g, other, v, filter)) continue;
    std::uint64_t linked_eligible = 0;
    for (Index x : nv) linked_eligible += eligible_node(g, side, x, filter) ? 1 : 0;
    if (nv.empty()) {
      if (options.count_isolated) {
        candidates += eligible_own;
        count += eligible_own;
      }
      continue;
    }
    candidates += eligible_own - linked_eligible;

    // Every internal partner of v lies in N_side(x) for each x ∈ N(v); start
    // from the x with the cheapest two-hop expansion.
    Index pivot = nv.front();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Index x : nv) {
      std::size_t cost = 0;
      for (Index y : g.neighbors(side, x)) cost += g.degree(other, y);
      if (cost < best) {
        best = cost;
        pivot = x;
      }
    }
    for (Index x : nv) inner[x] = v + 1;

    pool.clear();
    for (Index y : g.neighbors(side, pivot)) {
      for (Index c : g.neighbors(other, y)) {
        if (seen[c] == v + 1 || inner[c] == v + 1) continue;
        seen[c] = v + 1;
        pool.push_back(c);
      }
    }
    for (Index c : pool) {
      if (!eligible_node(g, side, c, filter)) continue;
      const auto nc = g.neighbors(side, c);
      bool internal = true;
      for (Index x : nv) {
        if (x != pivot && !shares_element(nc, g.neighbors(side, x))) {
          internal = false;
          break;
        }
      }
      if (internal) ++count;
    }
  }
  result.exact_count = count;
  result.candidate_pairs = candidates;
  return result;
}

InternalPairCount estimate_internal_pairs(const BipartiteGraph& g, Side side, std::uint64_t sample_size,
                                          std::uint64_t seed, PairOptions options) {
  if (sample_size == 0) throw Error("sample size must be at least 1");
  const Side other = opposite(side);
  const bool filter = options.apply_degree_filter;

  std::vector<Index> own;
  std::vector<Index> opp;
  std::vector<char> own_ok(g.node_count(side), 0);
  for (Index u = 0; u < g.node_count(side); ++u) {
    if (eligible_node(g, side, u, filter)) {
      own.push_back(u);
      own_ok[u] = 1;
    }
  }
  std::uint64_t linked = 0;
  for (Index v = 0; v < g.node_count(other); ++v) {
    if (!eligible_node(g, other, v, filter)) continue;
    if (g.degree(other, v) == 0 && !options.count_isolated) continue;
    opp.push_back(v);
    for (Index x : g.neighbors(other, v)) linked += own_ok[x];
  }
  const std::uint64_t population = static_cast<std::uint64_t>(own.size()) * opp.size() - linked;
  if (population == 0) throw NoNonEdgesError("no candidate non-edges to sample");

  auto to_edge = [side](Index u, Index v) { return side == Side::Bottom ? Edge{u, v} : Edge{v, u}; };

  InternalPairCount result;
  result.side = side;
  result.candidate_pairs = population;

  if (sample_size >= population) {
    std::uint64_t hits = 0;
    for (Index v : opp) {
      for (Index u : own) {
        const Edge e = to_edge(u, v);
        if (!g.has_edge(e) && pair_check(g, e, side)) ++hits;
      }
    }
    result.estimate = PairEstimate{static_cast<double>(hits), 0.0};
    result.sample_size = population;
    return result;
  }

  Rng rng(seed);
  std::uint64_t hits = 0;
  std::uint64_t drawn = 0;
  while (drawn < sample_size) {
    const Edge e = to_edge(own[rng.below(own.size())], opp[rng.below(opp.size())]);
    if (g.has_edge(e)) continue;
    ++drawn;
    if (pair_check(g, e, side)) ++hits;
  }
  const double n = static_cast<double>(drawn);
  const double p = static_cast<double>(hits) / n;
  const double total = static_cast<double>(population);
  result.estimate = PairEstimate{p * total, 1.96 * std::sqrt(p * (1.0 - p) / n) * total};
  result.sample_size = drawn;
  return result;
}

std::vector<NodeStats> node_stats(const BipartiteGraph& g, Side side, bool apply_degree_filter) {
  const Side other = opposite(side);
  std::array<std::vector<std::size_t>, 2> analyzed{std::vector<std::size_t>(g.bottom_count(), 0),
                                                   std::vector<std::size_t>(g.top_count(), 0)};
  std::array<std::vector<std::size_t>, 2> internal = analyzed;

  for (Index u = 0; u < g.bottom_count(); ++u) {
    for (Index v : g.neighbors(Side::Bottom, u)) {
      const Edge e{u, v};
      if (apply_degree_filter && !passes_degree_filter(g, e)) continue;
      ++analyzed[0][u];
      ++analyzed[1][v];
      if (link_check(g, e, side)) {
        ++internal[0][u];
        ++internal[1][v];
      }
    }
  }

  std::vector<NodeStats> out;
  auto emit = [&](Side s, Index i) {
    NodeStats st;
    st.node = {s, i};
    st.degree = g.degree(s, i);
    st.analyzed_degree = analyzed[slot(s)][i];
    st.internal_degree = internal[slot(s)][i];
    if (st.analyzed_degree > 0) {
      st.internal_fraction = static_cast<double>(st.internal_degree) / static_cast<double>(st.analyzed_degree);
    }
    st.redundancy = redundancy(g, st.node);
    out.push_back(st);
  };
  for (Index i = 0; i < g.node_count(side); ++i) emit(side, i);
  for (Index i = 0; i < g.node_count(other); ++i) {
    if (analyzed[slot(other)][i] > 0) emit(other, i);
  }
  return out;
}

std::optional<double> redundancy(const BipartiteGraph& g, NodeId v) {
  const auto nv = g.neighbors(v.side, v.index);
  if (nv.size() < 2) return std::nullopt;
  const Side other = opposite(v.side);
  std::uint64_t linked = 0;
  for (std::size_t a = 0; a < nv.size(); ++a) {
    const auto na = g.neighbors(other, nv[a]);
    for (std::size_t b = a + 1; b < nv.size(); ++b) {
      if (shares_element_except(na, g.neighbors(other, nv[b]), v.index)) ++linked;
    }
  }
  const double pairs = static_cast<double>(nv.size()) * static_cast<double>(nv.size() - 1) / 2.0;
  return static_cast<double>(linked) / pairs;
}

}  // namespace bipint
