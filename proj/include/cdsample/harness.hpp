#ifndef CDSAMPLE_HARNESS_HPP
#define CDSAMPLE_HARNESS_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cdsample/cplusd.hpp"
#include "cdsample/metrics.hpp"
#include "cdsample/samplers.hpp"

namespace cdsample {

inline constexpr const char* kToolVersion = "0.1.0";

inline constexpr std::array<PropertyKind, 5> kProperties = {
    PropertyKind::degree, PropertyKind::sval, PropertyKind::svec, PropertyKind::cc, PropertyKind::hop};

struct ExperimentConfig {
  std::vector<std::string> datasets;   // file paths, or "pa:<n>:<attachment>:<seed>"
  std::vector<std::string> methods;    // empty: experiment-specific default set
  double fraction = 0.10;
  int repetitions = 10;
  std::uint64_t master_seed = 1;
  std::vector<double> d_alpha_list;    // empty: -0.5 .. 0.5 step 0.1
  std::string edge_budget_policy = "fraction-of-edges";  // or "matched-to-cplusd"
  int svd_k = 100;
  std::string hop_mode = "exact";      // or "sampled"
  int hop_sources = 1000;

  static ExperimentConfig parse(std::istream& in);
  static ExperimentConfig parse_file(const std::string& path);
  std::vector<double> effective_d_alpha_list() const;
  std::string canonical_text() const;
  std::uint64_t config_hash() const;
};

/// Per-run seed derivation: fixed mixing of master seed, dataset name hash,
/// method tag hash, and repetition index.
std::uint64_t derive_run_seed(std::uint64_t master, const std::string& dataset, const std::string& method,
                              int rep);

/// Loads a dataset path or generates a "pa:<n>:<attachment>:<seed>" synthetic.
Graph load_dataset(const std::string& spec);

using PropertySet = std::array<Distribution, 5>;
PropertySet compute_properties(const Graph& g, const ExperimentConfig& cfg);

bool is_edge_based_method(const std::string& tag);
std::vector<std::string> default_node_based_methods();
std::vector<std::string> default_edge_based_methods();

/// Dispatches a method tag. `hier` may be null for methods that do not need
/// the community structure; `edge_budget` applies to edge-based tags.
SampleGraph run_method(const Graph& g, const Hierarchy* hier, const std::string& tag,
                       const SamplerParams& params, long long edge_budget, double d_alpha);

struct RunRecord {
  std::string dataset;
  std::string method;
  int rep = 0;
  std::uint64_t seed = 0;
  bool failed = false;
  std::string error;
  std::array<double, 5> d_stat{};     // NaN when failed
  double delta_alpha = 0.0;           // NaN when undefined
  long long sample_nodes = 0;
  long long sample_edges = 0;
};

struct ReportTable {
  std::vector<std::string> columns;
  std::vector<std::string> row_names;
  std::vector<std::vector<double>> cells;
};

struct HarnessOutput {
  std::vector<std::pair<std::string, ReportTable>> tables;  // name -> table
  std::vector<RunRecord> runs;
};

HarnessOutput run_comparison(const ExperimentConfig& cfg);
HarnessOutput run_consistency(const ExperimentConfig& cfg);
HarnessOutput run_dpl_table(const ExperimentConfig& cfg);
HarnessOutput run_alpha_sweep(const ExperimentConfig& cfg);
HarnessOutput run_hybrid_comparison(const ExperimentConfig& cfg);

void write_table_csv(std::ostream& out, const ReportTable& table, const ExperimentConfig& cfg);
void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& runs, const ExperimentConfig& cfg);
/// Writes every table as `<dir>/<name>.csv` plus a `runs.csv` log.
void write_outputs(const HarnessOutput& out, const ExperimentConfig& cfg, const std::string& dir);

}  // namespace cdsample

#endif  // CDSAMPLE_HARNESS_HPP
