#ifndef CDSAMPLE_COMMUNITY_HPP
#define CDSAMPLE_COMMUNITY_HPP

#include <iosfwd>
#include <vector>

#include "cdsample/graph.hpp"

namespace cdsample {

struct Partition {
  std::vector<int> labels;                    // per-node community label
  std::vector<std::vector<int>> communities;  // label -> sorted members

  static Partition from_labels(std::vector<int> labels);
  std::size_t size() const { return communities.size(); }
};

/// Newman modularity Q = sum_c [ L_c/m - (d_c/2m)^2 ].
/// Throws std::domain_error on an edgeless graph.
double modularity(const Graph& g, const Partition& p);

struct DendrogramNode {
  int left = -1;          // -1 for leaves
  int right = -1;
  int merge_order = -1;   // 0-based order of the merge, leaves -1
  long long node_count = 0;
  long long edge_count = 0;  // edges of the induced subgraph on this node's set
  bool is_leaf() const { return left < 0; }
};

/// Binary merge hierarchy above the max-modularity cut. Leaves are the
/// extracted communities; the root covers the whole graph.
struct Dendrogram {
  std::vector<DendrogramNode> nodes;
  std::vector<int> leaf_ids;                  // leaf k = partition community k
  std::vector<std::vector<int>> leaf_members; // aligned with nodes, empty for internal
  int root = -1;

  std::size_t leaf_count() const { return leaf_ids.size(); }
  /// Collects the original node set under a dendrogram node (sorted).
  std::vector<int> members(int id) const;
};

struct Hierarchy {
  Partition partition;
  Dendrogram dendrogram;
};

/// CNM-style greedy modularity: start from singletons, repeatedly merge the
/// pair with the largest dQ (ties to the smallest community-id pair). The
/// partition is the max-Q state along the sequence; merges above the cut
/// form the dendrogram, forced to completion so a single root always exists.
/// Throws std::domain_error on an empty graph.
Hierarchy extract_hierarchy(const Graph& g);

/// One line per node: `leaf <id> <node-count> <edge-count> : <node list>` or
/// `merge <id> <left> <right> <order>`.
void write_dendrogram(std::ostream& out, const Dendrogram& d);

}  // namespace cdsample

#endif  // CDSAMPLE_COMMUNITY_HPP
