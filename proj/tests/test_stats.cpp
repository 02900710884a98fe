#include <doctest.h>

#include <sstream>

#include "bipint/error.hpp"
#include "bipint/stats.hpp"
#include "oracles.hpp"

using namespace bipint;

namespace {

NodeStats with_fraction(std::optional<double> f, std::size_t degree = 2, std::size_t internal = 0) {
  NodeStats s;
  s.degree = degree;
  s.analyzed_degree = f ? degree : 0;
  s.internal_degree = internal;
  s.internal_fraction = f;
  return s;
}

void check_monotone(const CcdfSeries& s) {
  REQUIRE_FALSE(s.points.empty());
  CHECK(s.points.front().x == 0.0);
  CHECK(s.points.front().p == 1.0);
  CHECK(s.points.back().x == 1.0);
  for (std::size_t i = 1; i < s.points.size(); ++i) {
    CHECK(s.points[i].x > s.points[i - 1].x);
    CHECK(s.points[i].p <= s.points[i - 1].p);
  }
}

}  // namespace

TEST_CASE("compute_report without null samples") {
  ReportConfig cfg;
  cfg.null_samples = 0;
  const auto r = compute_report(fixtures::k22(), cfg);
  CHECK(r.side(Side::Bottom).f_EI == 1.0);
  CHECK(r.side(Side::Bottom).internal_links == 4);
  CHECK(r.side(Side::Bottom).analyzed_links == 4);
  CHECK(r.side(Side::Bottom).pairs->exact_count == 0u);
  CHECK_FALSE(r.side(Side::Bottom).E_I_ratio.has_value());
  CHECK_FALSE(r.side(Side::Bottom).P_I_ratio.has_value());

  std::ostringstream text;
  write_report_text(r, text);
  CHECK(text.str().find("f_EI(⊥) = 1.000000") != std::string::npos);
}

TEST_CASE("compute_report on K_{2,2}: the null model cannot move, both ratios are 1") {
  ReportConfig cfg;
  cfg.null_samples = 5;
  const auto r = compute_report(fixtures::k22(), cfg);
  for (Side s : {Side::Bottom, Side::Top}) {
    CHECK(r.side(s).E_I_ratio == 1.0);
    CHECK(r.side(s).P_I_ratio == 1.0);
  }
  CHECK(r.saturated_null_samples == 5);

  std::ostringstream tsv;
  write_report_tsv(r, tsv);
  CHECK(tsv.str().find("bottom.E_I_ratio\t1\n") != std::string::npos);
  CHECK(tsv.str().find("config.null_samples\t5\n") != std::string::npos);
}

TEST_CASE("compute_report pair modes and the exact-count budget") {
  Rng rng(4);
  const auto g = fixtures::random_graph(20, 20, 0.2, rng);
  ReportConfig cfg;
  cfg.null_samples = 0;
  cfg.pairs = PairMode::Off;
  CHECK_FALSE(compute_report(g, cfg).side(Side::Bottom).pairs.has_value());

  cfg.pairs = PairMode::Exact;
  cfg.exact_pair_budget = 100;  // 20 * 20 exceeds it
  cfg.estimate_samples = 200;
  const auto r = compute_report(g, cfg);
  CHECK(r.side(Side::Bottom).pair_mode == PairMode::Estimate);
  CHECK(r.side(Side::Bottom).pairs->estimate.has_value());
  CHECK(r.notices.size() == 1);
}

TEST_CASE("safe_ratio") {
  CHECK(safe_ratio(2.0, 4.0) == 0.5);
  CHECK(safe_ratio(0.0, 0.0) == 1.0);
  CHECK_FALSE(safe_ratio(3.0, 0.0).has_value());
}

TEST_CASE("ccdf_internal_fraction") {
  const std::vector<NodeStats> ones{with_fraction(1.0), with_fraction(1.0)};
  const auto s1 = ccdf_internal_fraction(ones, {});
  CHECK(s1.points.back().x == 1.0);
  CHECK(s1.points.back().p == 1.0);

  const std::vector<NodeStats> half{with_fraction(0.0), with_fraction(1.0)};
  const auto s2 = ccdf_internal_fraction(half, {});
  REQUIRE(s2.points.size() == 2);
  CHECK(s2.points[0].p == 1.0);
  CHECK(s2.points[1].p == 0.5);

  const auto c4 = node_stats(fixtures::k22(), Side::Bottom, true);
  const auto s3 = ccdf_internal_fraction(c4, {Side::Bottom, false});
  CHECK(s3.population_size == 2);
  for (const auto& pt : s3.points) CHECK(pt.p == 1.0);

  const std::vector<NodeStats> none{with_fraction(std::nullopt)};
  CHECK_THROWS_AS((void)ccdf_internal_fraction(none, {}), EmptyPopulationError);
  const auto with_zero = ccdf_internal_fraction(none, {std::nullopt, true});
  CHECK(with_zero.population_size == 1);
  check_monotone(with_zero);
}

TEST_CASE("degree_vs_internal_degree") {
  const std::vector<NodeStats> same{with_fraction(0.5, 4, 2), with_fraction(0.5, 4, 2), with_fraction(0.5, 4, 2)};
  const auto s1 = degree_vs_internal_degree(same);
  REQUIRE(s1.points.size() == 1);
  CHECK(s1.points[0].internal_degree == 2);
  CHECK(s1.points[0].mean_degree == 4.0);
  CHECK(s1.points[0].node_count == 3);

  const std::vector<NodeStats> two{with_fraction(0.5, 2, 1), with_fraction(0.25, 4, 1)};
  const auto s2 = degree_vs_internal_degree(two);
  REQUIRE(s2.points.size() == 1);
  CHECK(s2.points[0].mean_degree == 3.0);
  CHECK(s2.points[0].node_count == 2);

  const auto c4 = select_population(node_stats(fixtures::k22(), Side::Bottom, true), {Side::Bottom, false});
  const auto s3 = degree_vs_internal_degree(c4);
  REQUIRE(s3.points.size() == 1);
  CHECK(s3.points[0].internal_degree == 2);
  CHECK(s3.points[0].mean_degree == 2.0);
  CHECK(s3.points[0].node_count == 2);
}

TEST_CASE("series writers") {
  const std::vector<NodeStats> half{with_fraction(0.0), with_fraction(1.0)};
  std::ostringstream ccdf;
  write_ccdf(ccdf_internal_fraction(half, {}), ccdf);
  CHECK(ccdf.str() == "x\tp\n0.000000\t1.000000\n1.000000\t0.500000\n");
  std::ostringstream deg;
  write_degree_series(degree_vs_internal_degree(half), deg);
  CHECK(deg.str() == "internal_degree\tmean_degree\tnode_count\n0\t2\t2\n");
}

TEST_CASE("property: report cross-checks on random graphs") {
  Rng rng(77);
  for (std::size_t k = 0; k < 80; ++k) {
    const auto g = fixtures::random_small(k, rng);
    for (bool filter : {true, false}) {
      ReportConfig cfg;
      cfg.filter = filter;
      cfg.null_samples = g.edge_count() >= 2 ? 2 : 0;
      cfg.swap.seed = k;
      const auto r = compute_report(g, cfg);
      for (Side s : {Side::Bottom, Side::Top}) {
        const auto& sr = r.side(s);
        REQUIRE(sr.f_EI >= 0.0);
        REQUIRE(sr.f_EI <= 1.0);
        const auto stats = node_stats(g, s, filter);
        REQUIRE(f_EI_from_node_stats(stats, s) == doctest::Approx(sr.f_EI));
        REQUIRE(sr.E_I_ratio.has_value() == (cfg.null_samples > 0 && (sr.internal_links == 0 ||
                                                                        sr.null_internal_links->mean > 0)));
        for (const auto& pt : degree_vs_internal_degree(stats).points) {
          REQUIRE(pt.mean_degree >= static_cast<double>(pt.internal_degree));
        }
        const auto pop = select_population(stats, {s, true});
        if (!pop.empty()) check_monotone(ccdf_internal_fraction(stats, {s, true}));
      }
    }
  }
}

TEST_CASE("property: null samples keep the degree-1 link population") {
  Rng rng(12);
  for (std::size_t k = 0; k < 50; ++k) {
    const auto g = fixtures::random_graph(10, 14, 0.2, rng);
    if (g.edge_count() < 2) continue;
    auto degree_one_top_links = [](const BipartiteGraph& h) {
      std::size_t n = 0;
      for (const Edge& e : h.edges()) n += h.degree(Side::Top, e.top) == 1;
      return n;
    };
    for (const auto& sample : sample_batch(g, SwapConfig{5.0, k, 100}, 3)) {
      REQUIRE(degree_one_top_links(sample.graph) == degree_one_top_links(g));
      for (const Edge& e : sample.graph.edges()) {
        if (sample.graph.degree(Side::Top, e.top) == 1) REQUIRE(is_internal_link(sample.graph, e, Side::Bottom));
      }
    }
  }
}
