#ifndef CDSAMPLE_SAMPLERS_HPP
#define CDSAMPLE_SAMPLERS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cdsample/community.hpp"
#include "cdsample/graph.hpp"

namespace cdsample {

struct SamplerParams {
  double fraction = 0.1;
  double restart_probability = 0.15;
  double forward_burning_probability = 0.3;  // P_f
  double pagerank_damping = 0.85;
  bool induced = false;  // exploration methods only
  std::uint64_t rng_seed = 0;
};

/// Node and edge subset of a parent graph. Edges are parent-index pairs
/// (u < v, sorted); every endpoint is a selected node.
struct SampleGraph {
  std::vector<int> nodes;                   // sorted parent indices
  std::vector<std::pair<int, int>> edges;   // sorted, subset of parent edges
  std::string method;
  SamplerParams params;
  std::vector<std::string> notes;           // fallbacks, shortfalls, stalls
};

enum class ExploreMethod { random_walk, random_jump, forest_fire };
enum class BaseMethod { rn, rdn, re, rw };

long long node_budget_for(const Graph& g, double fraction);
long long default_edge_budget(const Graph& g, double fraction);

// random node selection (induced edge semantics)
SampleGraph sample_rn(const Graph& g, const SamplerParams& p);
SampleGraph sample_rdn(const Graph& g, const SamplerParams& p);
SampleGraph sample_rpn(const Graph& g, const SamplerParams& p);

// random edge selection
SampleGraph sample_re(const Graph& g, long long edge_budget, const SamplerParams& p);
SampleGraph sample_rne(const Graph& g, long long edge_budget, const SamplerParams& p);

// exploration (p.induced selects edge semantics)
SampleGraph sample_exploration(const Graph& g, ExploreMethod method, const SamplerParams& p);

/// Runs the base method independently inside each community with
/// largest-remainder apportioned budgets. Node-based bases and RW then take
/// all parent edges among the selected nodes; RE keeps only intra-community
/// edges. edge_budget < 0 means round(fraction * |edges|).
SampleGraph wrap_community_based(BaseMethod base, const Graph& g, const Partition& part,
                                 const SamplerParams& p, long long edge_budget = -1);

/// Runs the base method, then inserts or removes edges (degree-sum weighted)
/// until the edge count matches the whole-graph DPL target for the sample's
/// node count.
SampleGraph wrap_dpl_based(BaseMethod base, const Graph& g, const SamplerParams& p,
                           long long edge_budget = -1);

/// Standalone graph over the sample (nodes reindexed densely ascending;
/// isolated selected nodes kept).
Graph sample_to_graph(const SampleGraph& s);

/// Edge-list format plus `# method=<tag> seed=<s> fraction=<f>` header;
/// isolated selected nodes listed under `# isolated:`.
void write_sample(std::ostream& out, const SampleGraph& s, const NodeIdMap* ids = nullptr);

namespace detail {

/// Largest-remainder apportionment of `total` proportionally to `weights`,
/// residual ties to the lower index.
std::vector<long long> apportion(const std::vector<long long>& weights, long long total);

/// All parent edges with both endpoints in `nodes` (sorted unique).
std::vector<std::pair<int, int>> induced_edges(const Graph& g, const std::vector<int>& nodes);

}  // namespace detail

}  // namespace cdsample

#endif  // CDSAMPLE_SAMPLERS_HPP
