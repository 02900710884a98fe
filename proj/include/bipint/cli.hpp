#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bipint/graph.hpp"
#include "bipint/prune.hpp"
#include "bipint/stats.hpp"

namespace bipint::cli {

inline constexpr std::string_view kVersion = "0.1.0";

struct CommandConfig {
  std::string subcommand;
  std::string input;
  Side side = Side::Bottom;
  std::uint64_t seed = 1;
  bool filter = true;
  Eligibility policy = Eligibility::All;
  std::size_t null_samples = 5;
  double swaps_per_edge = 10.0;
  std::uint64_t max_rejections_factor = 100;
  PairMode pairs = PairMode::Exact;
  std::uint64_t estimate_samples = 10000;
  std::uint64_t pair_budget = 50'000'000;
  bool count_isolated_pairs = false;
  bool include_unanalyzed = false;
  std::optional<std::string> out_prefix;
};

// Comment lines written at the top of every output file.
std::string metadata_header(const CommandConfig& cfg);

int cmd_stats(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_project(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_nullmodel(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_prune(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_distribution(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

// Parses `args` (args[0] is the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bipint::cli
