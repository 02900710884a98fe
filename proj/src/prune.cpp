#include "bipint/prune.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "bipint/error.hpp"
#include "bipint/internal.hpp"
#include "bipint/random.hpp"

namespace bipint {

std::string_view to_string(Eligibility e) noexcept {
  return e == Eligibility::All ? "all" : "filtered";
}

std::optional<Eligibility> parse_eligibility(std::string_view text) noexcept {
  if (text == "all") return Eligibility::All;
  if (text == "filtered") return Eligibility::Filtered;
  return std::nullopt;
}

namespace {

// Edge set with O(1) insert, erase and uniform draw (swap-remove).
class IndexedEdgeSet {
 public:
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const Edge& at(std::size_t i) const { return items_[i]; }
  std::span<const Edge> items() const noexcept { return items_; }

  bool contains(const Edge& e) const { return pos_.count(edge_key(e)) != 0; }

  void insert(const Edge& e) {
    if (pos_.emplace(edge_key(e), items_.size()).second) items_.push_back(e);
  }

  void erase(const Edge& e) {
    auto it = pos_.find(edge_key(e));
    if (it == pos_.end()) return;
    const std::size_t i = it->second;
    pos_.erase(it);
    if (i + 1 != items_.size()) {
      items_[i] = items_.back();
      pos_[edge_key(items_[i])] = i;
    }
    items_.pop_back();
  }

 private:
  std::vector<Edge> items_;
  std::unordered_map<std::uint64_t, std::size_t> pos_;
};

std::size_t serialized_size(const BipartiteGraph& g) {
  std::ostringstream out;
  write_graph(g, out);
  return out.str().size();
}

}  // namespace

bool is_eligible(const BipartiteGraph& g, const Edge& e, Side side, Eligibility policy) {
  if (policy == Eligibility::Filtered && !passes_degree_filter(g, e)) return false;
  return is_internal_link(g, e, side);
}

std::vector<Edge> eligible_links(const BipartiteGraph& g, Side side, Eligibility policy) {
  return enumerate_internal_links(g, side, policy == Eligibility::Filtered).links;
}

std::vector<Edge> affected_links(const BipartiteGraph& g, const Edge& removed, Side /*side*/) {
  // The neighborhood test for (a, b) reads N(a), N(b) and N(x) for x ∈ N(b)
  // on either side, so only links within two hops of the removed one can
  // change. The closure is the same for both sides.
  std::vector<Index> bottoms{removed.bottom};
  std::vector<Index> tops{removed.top};
  for (Index t : g.neighbors(Side::Bottom, removed.bottom)) tops.push_back(t);
  for (Index b : g.neighbors(Side::Top, removed.top)) bottoms.push_back(b);

  std::vector<Edge> out;
  for (Index b : bottoms) {
    for (Index t : g.neighbors(Side::Bottom, b)) out.push_back({b, t});
  }
  for (Index t : tops) {
    for (Index b : g.neighbors(Side::Top, t)) out.push_back({b, t});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PruneResult prune_random(const BipartiteGraph& g, Side side, std::uint64_t seed, Eligibility policy,
                         const PruneObserver& observer) {
  PruneResult result;
  result.pruned_graph = g;
  BipartiteGraph& h = result.pruned_graph;
  PruneTrajectory& traj = result.trajectory;
  traj.side = side;
  traj.seed = seed;
  traj.eligibility = policy;

  IndexedEdgeSet eligible;
  for (const Edge& e : eligible_links(h, side, policy)) eligible.insert(e);
  traj.initial_internal = eligible.size();
  traj.points.push_back({0, eligible.size()});

  Rng rng(seed);
  while (!eligible.empty()) {
    const Edge e = eligible.at(rng.below(eligible.size()));
    h.remove_link(e);
    eligible.erase(e);
    for (const Edge& a : affected_links(h, e, side)) {
      if (is_eligible(h, a, side, policy)) {
        eligible.insert(a);
      } else {
        eligible.erase(a);
      }
    }
    traj.removed_edges.push_back(e);
    traj.points.push_back({traj.removed_edges.size(), eligible.size()});
    if (observer) observer(h, e, eligible.items());
  }

  const std::size_t m0 = g.edge_count();
  result.compression_ratio = m0 == 0 ? 1.0 : static_cast<double>(h.edge_count()) / static_cast<double>(m0);
  result.original_bytes = serialized_size(g);
  result.pruned_bytes = serialized_size(h);
  result.byte_ratio = result.original_bytes == 0
                          ? 1.0
                          : static_cast<double>(result.pruned_bytes) / static_cast<double>(result.original_bytes);
  return result;
}

void write_trajectory(const PruneTrajectory& t, std::ostream& out) {
  out << "removals\tremaining_internal\tupper_bound\n";
  for (const auto& p : t.points) {
    const std::size_t bound = t.initial_internal > p.removals ? t.initial_internal - p.removals : 0;
    out << p.removals << '\t' << p.remaining_internal << '\t' << bound << '\n';
  }
  if (!out) throw Error("write failure on trajectory stream");
}

}  // namespace bipint
