#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "cdsample/community.hpp"
#include "cdsample/samplers.hpp"
#include "helpers.hpp"

using namespace cdsample;
using cdsample::testing::random_graph;
using cdsample::testing::two_triangle_bridge;

namespace {

/// Definition-based modularity, independent of the library implementation:
/// Q = (intra-edge fraction) - sum over communities of (d_c / 2m)^2.
double modularity_oracle(const Graph& g, const std::vector<int>& labels) {
  double m = static_cast<double>(g.edge_count());
  double intra = 0.0;
  for (const auto& [u, v] : g.edges())
    if (labels[static_cast<std::size_t>(u)] == labels[static_cast<std::size_t>(v)]) intra += 1.0;
  std::vector<double> degree_sum(labels.size(), 0.0);
  for (int v = 0; v < g.node_count(); ++v)
    degree_sum[static_cast<std::size_t>(labels[static_cast<std::size_t>(v)])] += g.degree(v);
  double q = intra / m;
  for (double d : degree_sum) q -= (d / (2.0 * m)) * (d / (2.0 * m));
  return q;
}

/// Enumerates every set partition of n elements (restricted growth strings)
/// and returns the maximum modularity. Only usable for small n.
double exhaustive_best_q(const Graph& g, std::vector<int>* best_labels = nullptr) {
  int n = g.node_count();
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  double best = -2.0;
  while (true) {
    double q = modularity_oracle(g, labels);
    if (q > best) {
      best = q;
      if (best_labels) *best_labels = labels;
    }
    // next restricted growth string
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(labels.begin(), labels.begin() + i) + 1;
      if (labels[static_cast<std::size_t>(i)] < cap) {
        ++labels[static_cast<std::size_t>(i)];
        std::fill(labels.begin() + i + 1, labels.end(), 0);
        break;
      }
      }
    if (i == 0) break;
  }
  return best;
}

std::set<std::set<int>> community_sets(const std::vector<std::vector<int>>& communities) {
  std::set<std::set<int>> out;
  for (const auto& c : communities) out.insert(std::set<int>(c.begin(), c.end()));
  return out;
}

}  // namespace

TEST_CASE("modularity matches the definition on random partitions") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 12, 0.3);
    if (g.edge_count() == 0) continue;
    std::vector<int> labels;
    for (int v = 0; v < g.node_count(); ++v)
      labels.push_back(static_cast<int>(rng.below(4)));
    // compact labels so Partition::from_labels accepts them
    std::vector<int> remap(4, -1);
    int next = 0;
    for (int& l : labels) {
      if (remap[static_cast<std::size_t>(l)] < 0) remap[static_cast<std::size_t>(l)] = next++;
      l = remap[static_cast<std::size_t>(l)];
    }
    double q = modularity(g, Partition::from_labels(labels));
    CHECK(q == doctest::Approx(modularity_oracle(g, labels)).epsilon(1e-12));
  }
}

TEST_CASE("two-triangle bridge: greedy finds the exhaustive optimum") {
  Graph g = two_triangle_bridge();
  std::vector<int> best_labels;
  double best_q = exhaustive_best_q(g, &best_labels);
  CHECK(best_q == doctest::Approx(0.35714285).epsilon(1e-6));

  Hierarchy h = extract_hierarchy(g);
  CHECK(modularity(g, h.partition) == doctest::Approx(best_q).epsilon(1e-9));
  auto sets = community_sets(h.partition.communities);
  CHECK(sets == std::set<std::set<int>>({{0, 1, 2}, {3, 4, 5}}));
}

TEST_CASE("greedy modularity never exceeds the exhaustive optimum") {
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_graph(rng, 7, 0.35);
    if (g.edge_count() == 0) continue;
    Hierarchy h = extract_hierarchy(g);
    double q = modularity(g, h.partition);
    double best = exhaustive_best_q(g);
    CHECK(q <= best + 1e-9);
  }
}

TEST_CASE("dendrogram invariants") {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng, 14, 0.22);
    if (g.edge_count() == 0) continue;
    Hierarchy h = extract_hierarchy(g);
    const Dendrogram& d = h.dendrogram;

    // root covers the whole node set
    std::vector<int> all = d.members(d.root);
    REQUIRE(static_cast<int>(all.size()) == g.node_count());
    for (int v = 0; v < g.node_count(); ++v) CHECK(all[static_cast<std::size_t>(v)] == v);

    // leaves are exactly the partition communities
    CHECK(d.leaf_count() == h.partition.size());
    std::set<std::set<int>> leaf_sets;
    for (int leaf : d.leaf_ids)
      leaf_sets.insert(std::set<int>(d.leaf_members[static_cast<std::size_t>(leaf)].begin(),
                                     d.leaf_members[static_cast<std::size_t>(leaf)].end()));
    CHECK(leaf_sets == community_sets(h.partition.communities));

    std::set<int> orders;
    for (std::size_t id = 0; id < d.nodes.size(); ++id) {
      const auto& node = d.nodes[id];
      std::vector<int> members = d.members(static_cast<int>(id));
      CHECK(node.node_count == static_cast<long long>(members.size()));
      // cached edge count matches the induced subgraph
      CHECK(node.edge_count ==
            static_cast<long long>(detail::induced_edges(g, members).size()));
      if (!node.is_leaf()) {
        CHECK(orders.insert(node.merge_order).second);
        CHECK(node.node_count == d.nodes[static_cast<std::size_t>(node.left)].node_count +
                                     d.nodes[static_cast<std::size_t>(node.right)].node_count);
      }
    }
  }
}

TEST_CASE("edgeless graphs reject modularity but still build a hierarchy") {
  Graph g = Graph::from_edges(4, {});
  CHECK_THROWS_AS(modularity(g, Partition::from_labels({0, 1, 2, 3})), std::domain_error);
  Hierarchy h = extract_hierarchy(g);
  CHECK(h.partition.size() == 4);
  CHECK(h.dendrogram.members(h.dendrogram.root).size() == 4);
}
