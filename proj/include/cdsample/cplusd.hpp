#ifndef CDSAMPLE_CPLUSD_HPP
#define CDSAMPLE_CPLUSD_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cdsample/budget.hpp"
#include "cdsample/community.hpp"
#include "cdsample/samplers.hpp"

namespace cdsample {

/// Nodes/edges drawn from one leaf community, with unmet budget counters.
struct CommunitySample {
  int leaf_id = -1;
  std::vector<int> nodes;                  // parent-graph indices, sorted
  std::vector<std::pair<int, int>> edges;  // intra-community, parent indices
  long long node_shortfall = 0;
  long long edge_shortfall = 0;
};

struct MergeShortfall {
  int dendrogram_node = -1;
  long long requested = 0;
  long long taken = 0;
};

struct CplusdResult {
  SampleGraph sample;
  std::vector<CommunitySample> leaf_samples;   // one per dendrogram leaf
  std::vector<MergeShortfall> merge_shortfalls;
};

/// Degree-proportional node selection inside one community (weights are
/// degrees within the community's induced subgraph by default), then
/// degree-sum weighted edge selection among the induced candidates.
CommunitySample sample_within_community(const Graph& g, const std::vector<int>& community, int leaf_id,
                                        long long node_budget, long long edge_budget, std::uint64_t seed,
                                        bool within_community_degrees = true);

/// Bottom-up merge over the dendrogram: internal nodes in ascending merge
/// order; at each one, inter-community candidate edges (one selected
/// endpoint per child) drawn without replacement, weighted by global
/// degree sum.
CplusdResult merge_dendrogram(const Graph& g, const Dendrogram& dend, const BudgetTree& budgets,
                              std::vector<CommunitySample> leaf_samples, std::uint64_t seed);

/// Full pipeline: hierarchy extraction, budget allocation, per-leaf
/// sampling, dendrogram merge. Deterministic given the seed.
CplusdResult sample_cplusd(const Graph& g, double fraction, double d_alpha, std::uint64_t seed,
                           bool within_community_degrees = true);

/// Convenience: pipeline on a precomputed hierarchy (the harness reuses one
/// hierarchy across repetitions).
CplusdResult sample_cplusd_with_hierarchy(const Graph& g, const Hierarchy& h, double fraction,
                                          double d_alpha, std::uint64_t seed,
                                          bool within_community_degrees = true);

/// Per-leaf and per-merge shortfall counts as CSV.
void write_shortfall_report(std::ostream& out, const CplusdResult& r);

}  // namespace cdsample

#endif  // CDSAMPLE_CPLUSD_HPP
