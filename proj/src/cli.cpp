#include "bipint/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "bipint/error.hpp"
#include "bipint/internal.hpp"
#include "bipint/nullmodel.hpp"

namespace bipint::cli {

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << content;
  f.flush();
  if (!f) throw Error("write failure on " + path);
}

std::string pairs_text(const CommandConfig& cfg) {
  if (cfg.pairs == PairMode::Estimate) return "estimate:" + std::to_string(cfg.estimate_samples);
  return std::string(to_string(cfg.pairs));
}

LoadResult load_input(const CommandConfig& cfg, std::ostream& err) {
  LoadResult loaded = load_graph_file(cfg.input);
  if (loaded.duplicate_edges > 0) {
    err << "warning: " << loaded.duplicate_edges << " duplicate link line(s) collapsed in " << cfg.input << '\n';
  }
  return loaded;
}

SwapConfig swap_config(const CommandConfig& cfg) {
  return SwapConfig{cfg.swaps_per_edge, cfg.seed, cfg.max_rejections_factor};
}

std::string path_for(const CommandConfig& cfg, std::string_view suffix) {
  return *cfg.out_prefix + std::string(suffix);
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

std::string metadata_header(const CommandConfig& cfg) {
  std::ostringstream h;
  h << "# bipint " << kVersion << '\n';
  h << "# command: " << cfg.subcommand << '\n';
  h << "# side: " << to_string(cfg.side) << '\n';
  h << "# seed: " << cfg.seed << '\n';
  h << "# filter: " << (cfg.filter ? "on" : "off") << '\n';
  h << "# policy: " << to_string(cfg.policy) << '\n';
  h << "# null_samples: " << cfg.null_samples << '\n';
  h << "# swaps_per_edge: " << format_significant(cfg.swaps_per_edge) << '\n';
  h << "# max_rejections_factor: " << cfg.max_rejections_factor << '\n';
  h << "# pairs: " << pairs_text(cfg) << '\n';
  h << "# pair_budget: " << cfg.pair_budget << '\n';
  h << "# count_isolated_pairs: " << (cfg.count_isolated_pairs ? "yes" : "no") << '\n';
  h << "# include_unanalyzed: " << (cfg.include_unanalyzed ? "yes" : "no") << '\n';
  return h.str();
}

int cmd_stats(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LoadResult loaded = load_input(cfg, err);
    const BipartiteGraph& g = loaded.graph;

    ReportConfig rc;
    rc.swap = swap_config(cfg);
    rc.null_samples = cfg.null_samples;
    rc.filter = cfg.filter;
    rc.pairs = cfg.pairs;
    rc.estimate_samples = cfg.estimate_samples;
    rc.count_isolated_pairs = cfg.count_isolated_pairs;
    rc.exact_pair_budget = cfg.pair_budget;
    std::string skipped;
    if (rc.null_samples > 0 && g.edge_count() < 2) {
      skipped = "null model skipped: the graph has fewer than 2 links";
      rc.null_samples = 0;
    }
    InternalReport report = compute_report(g, rc);
    if (!skipped.empty()) report.notices.push_back(skipped);
    for (const auto& n : report.notices) err << "note: " << n << '\n';

    std::ostringstream text;
    text << metadata_header(cfg);
    text << "# duplicate_links: " << loaded.duplicate_edges << '\n';
    write_report_text(report, text);
    if (!cfg.out_prefix) {
      out << text.str();
      return 0;
    }
    std::ostringstream tsv;
    tsv << metadata_header(cfg);
    tsv << "# duplicate_links: " << loaded.duplicate_edges << '\n';
    write_report_tsv(report, tsv);
    write_file(path_for(cfg, ".report.txt"), text.str());
    write_file(path_for(cfg, ".report.tsv"), tsv.str());
    return 0;
  });
}

int cmd_project(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LoadResult loaded = load_input(cfg, err);
    std::ostringstream body;
    body << metadata_header(cfg);
    write_projection(project(loaded.graph, cfg.side), loaded.graph, body);
    if (cfg.out_prefix) {
      write_file(path_for(cfg, ".projection.tsv"), body.str());
    } else {
      out << body.str();
    }
    return 0;
  });
}

int cmd_nullmodel(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!cfg.out_prefix) throw Error("nullmodel needs --out");
    if (cfg.null_samples == 0) throw Error("nullmodel needs --null-samples >= 1");
    const LoadResult loaded = load_input(cfg, err);
    const auto samples = sample_batch(loaded.graph, swap_config(cfg), cfg.null_samples);
    out << "sample\tseed\tattempts\taccepted\trejected\tsaturated\n";
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const RandomizeResult& s = samples[k];
      std::ostringstream body;
      body << metadata_header(cfg);
      body << "# sample: " << k << '\n';
      body << "# sample_seed: " << cfg.seed + k << '\n';
      body << "# accepted_swaps: " << s.accepted << '\n';
      body << "# rejected_swaps: " << s.rejected << '\n';
      body << "# saturated: " << (s.saturated ? "yes" : "no") << '\n';
      write_graph(s.graph, body);
      write_file(path_for(cfg, ".null." + std::to_string(k) + ".tsv"), body.str());
      out << k << '\t' << cfg.seed + k << '\t' << s.attempts << '\t' << s.accepted << '\t' << s.rejected << '\t'
          << (s.saturated ? "yes" : "no") << '\n';
    }
    return 0;
  });
}

int cmd_prune(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!cfg.out_prefix) throw Error("prune needs --out");
    const LoadResult loaded = load_input(cfg, err);
    const PruneResult r = prune_random(loaded.graph, cfg.side, cfg.seed, cfg.policy);

    std::ostringstream graph;
    graph << metadata_header(cfg);
    write_graph(r.pruned_graph, graph);

    std::ostringstream traj;
    traj << metadata_header(cfg);
    write_trajectory(r.trajectory, traj);

    std::ostringstream summary;
    summary << metadata_header(cfg);
    summary << "original_links\t" << loaded.graph.edge_count() << '\n';
    summary << "pruned_links\t" << r.pruned_graph.edge_count() << '\n';
    summary << "initial_internal\t" << r.trajectory.initial_internal << '\n';
    summary << "removals\t" << r.trajectory.removed_edges.size() << '\n';
    summary << "compression_ratio\t" << format_fixed(r.compression_ratio) << '\n';
    summary << "original_bytes\t" << r.original_bytes << '\n';
    summary << "pruned_bytes\t" << r.pruned_bytes << '\n';
    summary << "byte_ratio\t" << format_fixed(r.byte_ratio) << '\n';

    write_file(path_for(cfg, ".pruned.tsv"), graph.str());
    write_file(path_for(cfg, ".trajectory.tsv"), traj.str());
    write_file(path_for(cfg, ".summary.txt"), summary.str());
    out << summary.str();
    return 0;
  });
}

int cmd_distribution(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!cfg.out_prefix) throw Error("distribution needs --out");
    const LoadResult loaded = load_input(cfg, err);
    const BipartiteGraph& g = loaded.graph;
    const NodePopulation population{cfg.side, cfg.include_unanalyzed};

    auto emit = [&](const std::vector<NodeStats>& stats, std::string_view tag, std::string_view extra) {
      const auto selected = select_population(stats, population);
      std::ostringstream ccdf;
      ccdf << metadata_header(cfg) << "# population: " << describe(population) << '\n' << extra;
      write_ccdf(ccdf_internal_fraction(stats, population), ccdf);
      std::ostringstream deg;
      deg << metadata_header(cfg) << "# population: " << describe(population) << '\n' << extra;
      write_degree_series(degree_vs_internal_degree(selected), deg);
      write_file(path_for(cfg, std::string(".ccdf") + std::string(tag) + ".tsv"), ccdf.str());
      write_file(path_for(cfg, std::string(".degree") + std::string(tag) + ".tsv"), deg.str());
    };

    emit(node_stats(g, cfg.side, cfg.filter), "", "");
    std::size_t written = 2;
    if (cfg.null_samples > 0 && g.edge_count() >= 2) {
      std::vector<NodeStats> pooled;
      for (const auto& s : sample_batch(g, swap_config(cfg), cfg.null_samples)) {
        const auto st = node_stats(s.graph, cfg.side, cfg.filter);
        pooled.insert(pooled.end(), st.begin(), st.end());
      }
      emit(pooled, ".null", "# pooled over " + std::to_string(cfg.null_samples) + " null samples\n");
      written += 2;
    } else if (cfg.null_samples > 0) {
      err << "note: null model skipped: the graph has fewer than 2 links\n";
    }
    out << "wrote " << written << " series with prefix " << *cfg.out_prefix << '\n';
    return 0;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Internal links and pairs of bipartite graphs", "bipint"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CommandConfig cfg;
  std::string side = "bottom";
  std::string filter;
  std::string policy = "all";
  std::string pairs = "exact";
  std::string out_prefix;

  struct Entry {
    CLI::App* app;
    bool filter_default;
  };
  std::vector<Entry> subs;
  auto add = [&](const std::string& name, const std::string& desc, bool filter_default, bool out_required) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--input,-i", cfg.input, "bipartite edge list (bottom<TAB>top per line)")->required();
    sub->add_option("--side", side, "projection side")->check(CLI::IsMember({"bottom", "top"}));
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--filter", filter, "restrict to links whose endpoints have degree >= 2")
        ->check(CLI::IsMember({"on", "off"}));
    sub->add_option("--null-samples", cfg.null_samples, "number of degree-preserving random samples");
    sub->add_option("--swaps-per-edge", cfg.swaps_per_edge, "attempted swaps per link")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-rejections-factor", cfg.max_rejections_factor,
                    "stop after this many consecutive rejections per link")
        ->check(CLI::PositiveNumber);
    sub->add_option("--policy", policy, "which internal links pruning may remove")
        ->check(CLI::IsMember({"all", "filtered"}));
    sub->add_option("--pairs", pairs, "internal pair counting: exact, estimate:N or off");
    sub->add_option("--pair-budget", cfg.pair_budget, "largest |own|*|opposite| counted exactly (0 = no limit)");
    sub->add_flag("--count-isolated-pairs", cfg.count_isolated_pairs,
                  "count pairs whose opposite endpoint has degree 0");
    sub->add_flag("--include-unanalyzed", cfg.include_unanalyzed,
                  "keep nodes without analyzed links in distributions as fraction 0");
    auto* o = sub->add_option("--out,-o", out_prefix, "output path prefix");
    if (out_required) o->required();
    subs.push_back({sub, filter_default});
  };
  add("stats", "internal link and pair report with null-model normalization", true, false);
  add("project", "write the one-mode projection", true, false);
  add("nullmodel", "write degree-preserving randomized graphs", true, true);
  add("prune", "random deletion of internal links", false, true);
  add("distribution", "internal-fraction CCDF and degree vs internal degree", true, true);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;  // --help/--version succeed; every other parse failure is a usage error
  }

  CLI::App* chosen = nullptr;
  bool filter_default = true;
  for (const auto& s : subs) {
    if (s.app->parsed()) {
      chosen = s.app;
      filter_default = s.filter_default;
    }
  }
  cfg.subcommand = chosen->get_name();
  cfg.side = *parse_side(side);
  cfg.filter = filter.empty() ? filter_default : filter == "on";
  cfg.policy = *parse_eligibility(policy);
  if (cfg.subcommand == "prune" && filter == "on" && chosen->count("--policy") == 0) {
    cfg.policy = Eligibility::Filtered;
  }
  if (!out_prefix.empty()) cfg.out_prefix = out_prefix;

  if (pairs == "exact") {
    cfg.pairs = PairMode::Exact;
  } else if (pairs == "off") {
    cfg.pairs = PairMode::Off;
  } else if (pairs.rfind("estimate:", 0) == 0) {
    cfg.pairs = PairMode::Estimate;
    try {
      std::size_t used = 0;
      const std::string n = pairs.substr(9);
      cfg.estimate_samples = std::stoull(n, &used);
      if (used != n.size() || cfg.estimate_samples == 0) throw std::invalid_argument("bad count");
    } catch (const std::exception&) {
      err << "error: --pairs estimate:N needs a positive integer N\n";
      return 2;
    }
  } else {
    err << "error: --pairs must be exact, estimate:N or off\n";
    return 2;
  }

  if (cfg.subcommand == "stats") return cmd_stats(cfg, out, err);
  if (cfg.subcommand == "project") return cmd_project(cfg, out, err);
  if (cfg.subcommand == "nullmodel") return cmd_nullmodel(cfg, out, err);
  if (cfg.subcommand == "prune") return cmd_prune(cfg, out, err);
  return cmd_distribution(cfg, out, err);
}

}  // namespace bipint::cli
