#ifndef CDSAMPLE_GRAPH_HPP
#define CDSAMPLE_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cdsample {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Bijection between external node labels (as they appear in an edge-list
/// file) and dense internal indices assigned in first-seen order.
class NodeIdMap {
 public:
  int intern(std::int64_t external) {
    auto [it, inserted] = to_internal_.try_emplace(external, static_cast<int>(to_external_.size()));
    if (inserted) to_external_.push_back(external);
    return it->second;
  }
  std::optional<int> internal_id(std::int64_t external) const {
    auto it = to_internal_.find(external);
    if (it == to_internal_.end()) return std::nullopt;
    return it->second;
  }
  std::int64_t external_id(int internal) const { return to_external_.at(static_cast<std::size_t>(internal)); }
  std::size_t size() const { return to_external_.size(); }

 private:
  std::unordered_map<std::int64_t, int> to_internal_;
  std::vector<std::int64_t> to_external_;
};

/// Immutable undirected simple graph. Nodes are dense indices
/// 0..node_count-1; each edge is stored once as (u, v) with u < v.
class Graph {
 public:
  Graph() = default;

  /// Normalizing constructor: drops self-loops, deduplicates, orients each
  /// pair with the smaller index first. Throws std::out_of_range if an
  /// endpoint is outside [0, node_count).
  static Graph from_edges(int node_count, std::vector<std::pair<int, int>> edges);

  int node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::vector<int> degree_sequence() const;

 private:
  int node_count_ = 0;
  std::vector<std::pair<int, int>> edges_;        // sorted, u < v
  std::vector<std::vector<int>> adjacency_;       // sorted neighbor lists
};

struct LoadReport {
  std::size_t data_lines = 0;
  std::size_t raw_edges = 0;          // arcs seen in the input
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0; // includes reverse arcs of seen edges
};

struct LoadedGraph {
  Graph graph;
  NodeIdMap ids;
  LoadReport report;
};

/// Reads a SNAP-style edge list: '#'-prefixed comment lines, then two
/// whitespace-separated integer tokens per line. Directed input is
/// symmetrized. Empty input yields an empty graph.
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list_file(const std::string& path);

/// Writes `# nodes: N edges: M` then the sorted edge pairs. When an id map
/// is given, external labels are emitted instead of internal indices.
void write_edge_list(std::ostream& out, const Graph& g, const NodeIdMap* ids = nullptr);

/// Subgraph on the given nodes (duplicates ignored), reindexed densely in
/// ascending order of the original indices. Keeps every edge with both
/// endpoints in the set. Throws std::domain_error on an out-of-range index.
Graph induced_subgraph(const Graph& g, const std::vector<int>& nodes);

}  // namespace cdsample

#endif  // CDSAMPLE_GRAPH_HPP
