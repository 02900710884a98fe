#include "bipint/stats.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>

#include "bipint/error.hpp"

namespace bipint {

std::string_view to_string(PairMode m) noexcept {
  switch (m) {
    case PairMode::Off:
      return "off";
    case PairMode::Exact:
      return "exact";
    case PairMode::Estimate:
      return "estimate";
  }
  return "off";
}

std::string format_fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string format_significant(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::optional<double> safe_ratio(double real, double null_mean) noexcept {
  if (null_mean > 0.0) return real / null_mean;
  if (real == 0.0) return 1.0;
  return std::nullopt;
}

namespace {

struct SideMeasure {
  std::size_t analyzed = 0;
  std::size_t internal = 0;
  std::optional<InternalPairCount> pairs;
};

InternalPairCount count_pairs(const BipartiteGraph& g, Side side, PairMode mode, const ReportConfig& cfg,
                              std::uint64_t seed) {
  const PairOptions opts{cfg.filter, cfg.count_isolated_pairs};
  if (mode == PairMode::Exact) return count_internal_pairs_exact(g, side, opts);
  try {
    return estimate_internal_pairs(g, side, cfg.estimate_samples, seed, opts);
  } catch (const NoNonEdgesError&) {
    InternalPairCount empty;
    empty.side = side;
    empty.exact_count = 0;
    return empty;
  }
}

SideMeasure measure(const BipartiteGraph& g, Side side, PairMode mode, const ReportConfig& cfg, std::uint64_t seed) {
  SideMeasure m;
  const auto links = enumerate_internal_links(g, side, cfg.filter);
  m.analyzed = links.analyzed_links;
  m.internal = links.links.size();
  if (mode != PairMode::Off) m.pairs = count_pairs(g, side, mode, cfg, seed);
  return m;
}

double fraction(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

Spread spread(const std::vector<double>& xs) {
  Spread s;
  s.min = *std::min_element(xs.begin(), xs.end());
  s.max = *std::max_element(xs.begin(), xs.end());
  double total = 0.0;
  for (double x : xs) total += x;
  s.mean = total / static_cast<double>(xs.size());
  return s;
}

std::string opt_text(const std::optional<double>& v) { return v ? format_significant(*v) : "NA"; }

std::string_view side_symbol(Side s) { return s == Side::Bottom ? "⊥" : "⊤"; }

}  // namespace

InternalReport compute_report(const BipartiteGraph& g, const ReportConfig& cfg) {
  InternalReport r;
  r.config = cfg;
  r.bottom_count = g.bottom_count();
  r.top_count = g.top_count();
  r.edge_count = g.edge_count();
  for (Index i = 0; i < g.bottom_count(); ++i) r.isolated_bottom += g.degree(Side::Bottom, i) == 0 ? 1 : 0;
  for (Index i = 0; i < g.top_count(); ++i) r.isolated_top += g.degree(Side::Top, i) == 0 ? 1 : 0;

  PairMode mode = cfg.pairs;
  const std::uint64_t work = static_cast<std::uint64_t>(g.bottom_count()) * g.top_count();
  if (mode == PairMode::Exact && cfg.exact_pair_budget > 0 && work > cfg.exact_pair_budget) {
    mode = PairMode::Estimate;
    r.notices.push_back("exact pair counting skipped: " + std::to_string(work) + " candidate pairs exceed budget " +
                        std::to_string(cfg.exact_pair_budget) + "; estimated from " +
                        std::to_string(cfg.estimate_samples) + " samples");
  }

  std::array<SideMeasure, 2> real;
  for (Side s : {Side::Bottom, Side::Top}) {
    real[slot(s)] = measure(g, s, mode, cfg, cfg.swap.seed);
    SideReport& sr = r.sides[slot(s)];
    sr.side = s;
    sr.analyzed_links = real[slot(s)].analyzed;
    sr.internal_links = real[slot(s)].internal;
    sr.f_EI = fraction(sr.internal_links, sr.analyzed_links);
    sr.pairs = real[slot(s)].pairs;
    sr.pair_mode = mode;
  }

  if (cfg.null_samples == 0) return r;

  std::array<std::vector<double>, 2> null_links;
  std::array<std::vector<double>, 2> null_pairs;
  std::array<std::vector<double>, 2> null_f;
  for (std::size_t k = 0; k < cfg.null_samples; ++k) {
    SwapConfig sc = cfg.swap;
    sc.seed = cfg.swap.seed + k;
    const RandomizeResult sample = randomize(g, sc);
    if (sample.saturated) ++r.saturated_null_samples;
    for (Side s : {Side::Bottom, Side::Top}) {
      const SideMeasure m = measure(sample.graph, s, mode, cfg, sc.seed);
      null_links[slot(s)].push_back(static_cast<double>(m.internal));
      null_f[slot(s)].push_back(fraction(m.internal, m.analyzed));
      if (m.pairs) null_pairs[slot(s)].push_back(m.pairs->value());
    }
  }
  for (Side s : {Side::Bottom, Side::Top}) {
    SideReport& sr = r.sides[slot(s)];
    sr.null_internal_links = spread(null_links[slot(s)]);
    sr.null_f_EI = spread(null_f[slot(s)]);
    sr.E_I_ratio = safe_ratio(static_cast<double>(sr.internal_links), sr.null_internal_links->mean);
    if (sr.pairs) {
      sr.null_pairs = spread(null_pairs[slot(s)]);
      sr.P_I_ratio = safe_ratio(sr.pairs->value(), sr.null_pairs->mean);
    }
  }
  if (r.saturated_null_samples > 0) {
    r.notices.push_back(std::to_string(r.saturated_null_samples) + " of " + std::to_string(cfg.null_samples) +
                        " null samples saturated (no accepted swap within the rejection guard)");
  }
  return r;
}

void write_report_text(const InternalReport& r, std::ostream& out) {
  out << "graph: |⊥|=" << r.bottom_count << " |⊤|=" << r.top_count << " |E|=" << r.edge_count
      << " isolated ⊥=" << r.isolated_bottom << " isolated ⊤=" << r.isolated_top << '\n';
  out << "degree filter: " << (r.config.filter ? "on" : "off") << ", null samples: " << r.config.null_samples
      << ", swaps per edge: " << format_significant(r.config.swap.swaps_per_edge) << ", seed: " << r.config.swap.seed
      << '\n';
  out << '\n';
  out << "side\tf_EI\tE_I\tanalyzed\tP_I\tP_I/P*_I\tE_I/E*_I\n";
  for (const SideReport& sr : r.sides) {
    std::string pairs = "NA";
    if (sr.pairs) {
      pairs = sr.pairs->exact_count ? std::to_string(*sr.pairs->exact_count)
                                    : format_significant(sr.pairs->estimate->mean) + "±" +
                                          format_significant(sr.pairs->estimate->half_width);
    }
    out << side_symbol(sr.side) << '\t' << format_fixed(sr.f_EI) << '\t' << sr.internal_links << '\t'
        << sr.analyzed_links << '\t' << pairs << '\t' << opt_text(sr.P_I_ratio) << '\t' << opt_text(sr.E_I_ratio)
        << '\n';
  }
  out << '\n';
  for (const SideReport& sr : r.sides) {
    out << "f_EI(" << side_symbol(sr.side) << ") = " << format_fixed(sr.f_EI) << '\n';
  }
  for (const SideReport& sr : r.sides) {
    if (sr.null_internal_links) {
      const Spread& s = *sr.null_internal_links;
      out << "E*_I(" << side_symbol(sr.side) << "): mean " << format_significant(s.mean) << ", min "
          << format_significant(s.min) << ", max " << format_significant(s.max) << '\n';
    }
    if (sr.null_pairs) {
      const Spread& s = *sr.null_pairs;
      out << "P*_I(" << side_symbol(sr.side) << "): mean " << format_significant(s.mean) << ", min "
          << format_significant(s.min) << ", max " << format_significant(s.max) << '\n';
    }
  }
  for (const auto& n : r.notices) out << "note: " << n << '\n';
}

void write_report_tsv(const InternalReport& r, std::ostream& out) {
  auto kv = [&out](std::string_view k, const auto& v) { out << k << '\t' << v << '\n'; };
  kv("graph.bottom_count", r.bottom_count);
  kv("graph.top_count", r.top_count);
  kv("graph.edge_count", r.edge_count);
  kv("graph.isolated_bottom", r.isolated_bottom);
  kv("graph.isolated_top", r.isolated_top);
  kv("config.filter", r.config.filter ? "on" : "off");
  kv("config.null_samples", r.config.null_samples);
  kv("config.swaps_per_edge", format_significant(r.config.swap.swaps_per_edge));
  kv("config.seed", r.config.swap.seed);
  kv("config.max_rejections_factor", r.config.swap.max_rejections_factor);
  kv("config.pairs", to_string(r.config.pairs));
  kv("config.estimate_samples", r.config.estimate_samples);
  kv("config.count_isolated_pairs", r.config.count_isolated_pairs ? "yes" : "no");
  kv("null.saturated_samples", r.saturated_null_samples);
  for (const SideReport& sr : r.sides) {
    const std::string p(to_string(sr.side));
    auto spread_kv = [&](const std::string& key, const std::optional<Spread>& s) {
      kv(key + ".mean", s ? format_significant(s->mean) : "NA");
      kv(key + ".min", s ? format_significant(s->min) : "NA");
      kv(key + ".max", s ? format_significant(s->max) : "NA");
    };
    kv(p + ".analyzed_links", sr.analyzed_links);
    kv(p + ".E_I", sr.internal_links);
    kv(p + ".f_EI", format_fixed(sr.f_EI));
    kv(p + ".P_I.method", to_string(sr.pair_mode));
    if (sr.pairs && sr.pairs->exact_count) {
      kv(p + ".P_I", *sr.pairs->exact_count);
      kv(p + ".P_I.half_width", "0");
    } else if (sr.pairs) {
      kv(p + ".P_I", format_significant(sr.pairs->estimate->mean));
      kv(p + ".P_I.half_width", format_significant(sr.pairs->estimate->half_width));
    } else {
      kv(p + ".P_I", "NA");
      kv(p + ".P_I.half_width", "NA");
    }
    kv(p + ".P_I.sample_size", sr.pairs && sr.pairs->sample_size ? std::to_string(*sr.pairs->sample_size) : "NA");
    kv(p + ".P_I.candidate_pairs", sr.pairs ? std::to_string(sr.pairs->candidate_pairs) : "NA");
    spread_kv(p + ".null.E_I", sr.null_internal_links);
    spread_kv(p + ".null.f_EI", sr.null_f_EI);
    spread_kv(p + ".null.P_I", sr.null_pairs);
    kv(p + ".E_I_ratio", opt_text(sr.E_I_ratio));
    kv(p + ".P_I_ratio", opt_text(sr.P_I_ratio));
  }
  if (!out) throw Error("write failure on report stream");
}

double f_EI_from_node_stats(std::span<const NodeStats> stats, Side s) {
  std::size_t internal = 0;
  std::size_t analyzed = 0;
  for (const NodeStats& st : stats) {
    if (st.node.side != s) continue;
    internal += st.internal_degree;
    analyzed += st.analyzed_degree;
  }
  return fraction(internal, analyzed);
}

std::string describe(const NodePopulation& p) {
  std::string out = p.side ? std::string(to_string(*p.side)) : "both";
  out += p.include_unanalyzed ? ", unanalyzed nodes as 0" : ", unanalyzed nodes excluded";
  return out;
}

std::vector<NodeStats> select_population(std::span<const NodeStats> stats, const NodePopulation& p) {
  std::vector<NodeStats> out;
  for (const NodeStats& st : stats) {
    if (p.side && st.node.side != *p.side) continue;
    if (!st.internal_fraction && !p.include_unanalyzed) continue;
    out.push_back(st);
  }
  return out;
}

CcdfSeries ccdf_internal_fraction(std::span<const NodeStats> stats, const NodePopulation& population) {
  const auto selected = select_population(stats, population);
  if (selected.empty()) throw EmptyPopulationError("no node in the selected population (" + describe(population) + ")");

  std::vector<double> values;
  values.reserve(selected.size());
  for (const NodeStats& st : selected) values.push_back(st.internal_fraction.value_or(0.0));
  std::sort(values.begin(), values.end());

  std::vector<double> xs = values;
  xs.push_back(0.0);
  xs.push_back(1.0);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  CcdfSeries series;
  series.population = population;
  series.population_size = values.size();
  const double n = static_cast<double>(values.size());
  for (double x : xs) {
    const auto at_least = values.end() - std::lower_bound(values.begin(), values.end(), x);
    series.points.push_back({x, static_cast<double>(at_least) / n});
  }
  return series;
}

DegreeCorrelationSeries degree_vs_internal_degree(std::span<const NodeStats> stats) {
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> groups;  // internal -> (degree sum, count)
  for (const NodeStats& st : stats) {
    auto& g = groups[st.internal_degree];
    g.first += st.degree;
    ++g.second;
  }
  DegreeCorrelationSeries series;
  for (const auto& [k, g] : groups) {
    series.points.push_back({k, static_cast<double>(g.first) / static_cast<double>(g.second), g.second});
  }
  return series;
}

void write_ccdf(const CcdfSeries& s, std::ostream& out) {
  out << "x\tp\n";
  for (const auto& pt : s.points) out << format_fixed(pt.x) << '\t' << format_fixed(pt.p) << '\n';
  if (!out) throw Error("write failure on ccdf stream");
}

void write_degree_series(const DegreeCorrelationSeries& s, std::ostream& out) {
  out << "internal_degree\tmean_degree\tnode_count\n";
  for (const auto& pt : s.points) {
    out << pt.internal_degree << '\t' << format_significant(pt.mean_degree) << '\t' << pt.node_count << '\n';
  }
  if (!out) throw Error("write failure on degree series stream");
}

}  // namespace bipint
