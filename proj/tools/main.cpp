/// Command line front end: single-shot sampling and metrics, plus the
/// config-driven experiment runners.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "cdsample/cplusd.hpp"
#include "cdsample/harness.hpp"
#include "cdsample/metrics.hpp"
#include "cdsample/samplers.hpp"

namespace {

using namespace cdsample;

std::ofstream open_output(const std::string& path) {
  auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output " + path);
  return out;
}

int cmd_sample(const std::string& input, const std::string& method, double fraction, double d_alpha,
               bool induced, std::uint64_t seed, long long edge_budget, const std::string& output,
               const std::string& shortfall_path) {
  LoadedGraph loaded = load_edge_list_file(input);
  SamplerParams params;
  params.fraction = fraction;
  params.induced = induced;
  params.rng_seed = seed;

  if (method == "C+D") {
    CplusdResult r = sample_cplusd(loaded.graph, fraction, d_alpha, seed);
    auto out = open_output(output);
    write_sample(out, r.sample, &loaded.ids);
    if (!shortfall_path.empty()) {
      auto sf = open_output(shortfall_path);
      write_shortfall_report(sf, r);
    }
    return 0;
  }

  std::unique_ptr<Hierarchy> hier;
  if (method.rfind("CBased", 0) == 0) hier = std::make_unique<Hierarchy>(extract_hierarchy(loaded.graph));
  if (edge_budget < 0) edge_budget = default_edge_budget(loaded.graph, fraction);
  std::string tag = method;
  if (induced && (tag == "RW" || tag == "RJ" || tag == "FF")) tag += "(i)";
  SampleGraph s = run_method(loaded.graph, hier.get(), tag, params, edge_budget, d_alpha);
  auto out = open_output(output);
  write_sample(out, s, &loaded.ids);
  return 0;
}

int cmd_metrics(const std::string& input, int svd_k, const std::string& hop_mode, int hop_sources,
                const std::string& output) {
  LoadedGraph loaded = load_edge_list_file(input);
  const Graph& g = loaded.graph;
  HopMode mode = hop_mode == "sampled" ? HopMode::sampled : HopMode::exact;
  auto out = open_output(output);
  write_distribution(out, degree_distribution(g));
  write_distribution(out, singular_value_distribution(g, svd_k));
  write_distribution(out, singular_vector_distribution(g));
  write_distribution(out, cc_distribution(g));
  write_distribution(out, hop_distribution(g, mode, hop_sources));
  return 0;
}

int cmd_experiment(const std::string& kind, const std::string& config_path, const std::string& out_dir) {
  ExperimentConfig cfg = ExperimentConfig::parse_file(config_path);
  HarnessOutput result;
  if (kind == "compare")
    result = run_comparison(cfg);
  else if (kind == "consistency")
    result = run_consistency(cfg);
  else if (kind == "dpl-table")
    result = run_dpl_table(cfg);
  else if (kind == "alpha-sweep")
    result = run_alpha_sweep(cfg);
  else
    result = run_hybrid_comparison(cfg);
  write_outputs(result, cfg, out_dir);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"community + densification-law graph sampling toolkit"};
  app.require_subcommand(1);

  std::string input, output, method, hop_mode = "exact", config_path, out_dir, shortfall_path;
  double fraction = 0.10, d_alpha = 0.0;
  bool induced = false;
  std::uint64_t seed = 1;
  long long edge_budget = -1;
  int svd_k = 100, hop_sources = 1000;

  auto* sample = app.add_subcommand("sample", "draw one sample from an edge list");
  sample->add_option("--input", input, "edge-list file")->required();
  sample->add_option("--method", method, "method tag (RN, RDN, RPN, RE, RNE, RW, RJ, FF, C+D, CBased*, DBased*)")
      ->required();
  sample->add_option("--fraction", fraction, "node fraction to keep");
  sample->add_option("--d-alpha", d_alpha, "densification exponent offset (C+D)");
  sample->add_flag("--induced", induced, "induced edge semantics for RW/RJ/FF");
  sample->add_option("--seed", seed, "rng seed");
  sample->add_option("--edge-budget", edge_budget, "edge budget for edge-based methods (default: fraction of edges)");
  sample->add_option("--output", output, "sample edge-list path")->required();
  sample->add_option("--shortfall-report", shortfall_path, "C+D budget shortfall CSV");

  auto* metrics = app.add_subcommand("metrics", "dump the five property distributions");
  metrics->add_option("--input", input, "edge-list file")->required();
  metrics->add_option("--svd-k", svd_k, "top singular values to keep");
  metrics->add_option("--hop-mode", hop_mode, "exact or sampled")
      ->check(CLI::IsMember({"exact", "sampled"}));
  metrics->add_option("--hop-sources", hop_sources, "BFS sources in sampled mode");
  metrics->add_option("--output", output, "CSV path")->required();

  std::vector<CLI::App*> experiments;
  for (const char* name : {"compare", "consistency", "dpl-table", "alpha-sweep", "hybrid"}) {
    auto* sub = app.add_subcommand(name, std::string("run the ") + name + " experiment");
    sub->add_option("--config", config_path, "key = value config file")->required();
    sub->add_option("--output-dir", out_dir, "directory for CSV tables")->required();
    experiments.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (sample->parsed()) return cmd_sample(input, method, fraction, d_alpha, induced, seed, edge_budget,
                                            output, shortfall_path);
    if (metrics->parsed()) return cmd_metrics(input, svd_k, hop_mode, hop_sources, output);
    for (auto* sub : experiments)
      if (sub->parsed()) return cmd_experiment(sub->get_name(), config_path, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
