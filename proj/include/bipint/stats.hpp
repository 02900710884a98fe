#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bipint/graph.hpp"
#include "bipint/internal.hpp"
#include "bipint/nullmodel.hpp"

namespace bipint {

enum class PairMode { Off, Exact, Estimate };

std::string_view to_string(PairMode m) noexcept;

struct ReportConfig {
  SwapConfig swap;
  std::size_t null_samples = 5;
  bool filter = true;
  PairMode pairs = PairMode::Exact;
  std::uint64_t estimate_samples = 10000;
  bool count_isolated_pairs = false;
  // Exact pair counting is replaced by the estimator when |own| * |opposite|
  // exceeds this. 0 disables the guard.
  std::uint64_t exact_pair_budget = 50'000'000;
};

struct Spread {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct SideReport {
  Side side = Side::Bottom;
  std::size_t analyzed_links = 0;
  std::size_t internal_links = 0;  // E_I
  double f_EI = 0.0;               // 0 when nothing is analyzed
  std::optional<InternalPairCount> pairs;
  PairMode pair_mode = PairMode::Off;  // method actually used
  std::optional<Spread> null_internal_links;
  std::optional<Spread> null_pairs;
  std::optional<Spread> null_f_EI;
  std::optional<double> E_I_ratio;
  std::optional<double> P_I_ratio;
};

struct InternalReport {
  std::size_t bottom_count = 0;
  std::size_t top_count = 0;
  std::size_t edge_count = 0;
  std::size_t isolated_bottom = 0;
  std::size_t isolated_top = 0;
  std::array<SideReport, 2> sides;  // indexed by slot(Side)
  ReportConfig config;
  std::size_t saturated_null_samples = 0;
  std::vector<std::string> notices;

  const SideReport& side(Side s) const { return sides[slot(s)]; }
};

// Real quantities for both sides, and real / mean-null ratios when
// cfg.null_samples >= 1. A ratio 0/0 is reported as 1; x/0 with x > 0 is absent.
InternalReport compute_report(const BipartiteGraph& g, const ReportConfig& cfg);

std::optional<double> safe_ratio(double real, double null_mean) noexcept;

// Human-readable table.
void write_report_text(const InternalReport& r, std::ostream& out);
// key<TAB>value lines; "NA" for absent values.
void write_report_tsv(const InternalReport& r, std::ostream& out);

// Internal fraction via summed internal / analyzed degrees of the nodes on
// side `s`; cross-check of SideReport::f_EI.
double f_EI_from_node_stats(std::span<const NodeStats> stats, Side s);

struct NodePopulation {
  std::optional<Side> side;  // nullopt: both sides
  // Nodes without analyzed links enter with fraction 0 instead of being dropped.
  bool include_unanalyzed = false;
};

std::string describe(const NodePopulation& p);

std::vector<NodeStats> select_population(std::span<const NodeStats> stats, const NodePopulation& p);

struct CcdfPoint {
  double x = 0.0;
  double p = 0.0;
};

struct CcdfSeries {
  std::vector<CcdfPoint> points;  // ascending x
  NodePopulation population;
  std::size_t population_size = 0;
};

// P(internal_fraction >= x) at every observed fraction plus 0 and 1.
// Throws EmptyPopulationError when the selection is empty.
CcdfSeries ccdf_internal_fraction(std::span<const NodeStats> stats, const NodePopulation& population);

struct DegreePoint {
  std::size_t internal_degree = 0;
  double mean_degree = 0.0;
  std::size_t node_count = 0;
};

struct DegreeCorrelationSeries {
  std::vector<DegreePoint> points;  // ascending internal_degree
};

DegreeCorrelationSeries degree_vs_internal_degree(std::span<const NodeStats> stats);

void write_ccdf(const CcdfSeries& s, std::ostream& out);
void write_degree_series(const DegreeCorrelationSeries& s, std::ostream& out);

// Decimal formatting used by every text output.
std::string format_fixed(double v);        // 6 digits after the point
std::string format_significant(double v);  // 6 significant digits

}  // namespace bipint
