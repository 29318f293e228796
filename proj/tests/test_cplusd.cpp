#include <doctest.h>

#include <sstream>

#include "cdsample/cplusd.hpp"
#include "cdsample/synthetic.hpp"
#include "helpers.hpp"

using namespace cdsample;
using cdsample::testing::random_graph;
using cdsample::testing::two_triangle_bridge;

namespace {

std::string serialize(const SampleGraph& s) {
  std::ostringstream out;
  write_sample(out, s);
  return out.str();
}

}  // namespace

TEST_CASE("pipeline hits the node budget exactly") {
  Rng outer(211);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = random_graph(outer, 30 + static_cast<int>(outer.below(30)), 0.12);
    if (g.edge_count() == 0) continue;
    double fraction = 0.15 + 0.5 * outer.uniform01();
    CplusdResult r = sample_cplusd(g, fraction, 0.0, outer.next());
    CHECK(static_cast<long long>(r.sample.nodes.size()) == round_half_up(fraction * g.node_count()));
    for (const auto& [u, v] : r.sample.edges) {
      CHECK(g.has_edge(u, v));
      CHECK(std::binary_search(r.sample.nodes.begin(), r.sample.nodes.end(), u));
      CHECK(std::binary_search(r.sample.nodes.begin(), r.sample.nodes.end(), v));
    }
  }
}

TEST_CASE("pipeline is deterministic in the seed") {
  Graph g = generate_preferential_attachment(200, 3, 7);
  CplusdResult a = sample_cplusd(g, 0.2, 0.0, 42);
  CplusdResult b = sample_cplusd(g, 0.2, 0.0, 42);
  CHECK(serialize(a.sample) == serialize(b.sample));
  CplusdResult c = sample_cplusd(g, 0.2, 0.0, 43);
  CHECK(serialize(a.sample) != serialize(c.sample));
}

TEST_CASE("edge count grows with the exponent offset") {
  Graph g = generate_preferential_attachment(300, 4, 11);
  Hierarchy h = extract_hierarchy(g);
  std::size_t prev = 0;
  for (double d_alpha : {-0.5, -0.2, 0.0, 0.2, 0.5}) {
    CplusdResult r = sample_cplusd_with_hierarchy(g, h, 0.2, d_alpha, 99);
    CHECK(r.sample.edges.size() >= prev);
    prev = r.sample.edges.size();
  }
}

TEST_CASE("leaf samples stay inside their communities") {
  Graph g = two_triangle_bridge();
  Hierarchy h = extract_hierarchy(g);
  CplusdResult r = sample_cplusd_with_hierarchy(g, h, 0.5, 0.0, 5);
  for (const auto& cs : r.leaf_samples) {
    const auto& members = h.dendrogram.leaf_members[static_cast<std::size_t>(cs.leaf_id)];
    for (int v : cs.nodes) CHECK(std::binary_search(members.begin(), members.end(), v));
    for (const auto& [u, v] : cs.edges) {
      CHECK(std::binary_search(members.begin(), members.end(), u));
      CHECK(std::binary_search(members.begin(), members.end(), v));
    }
  }
}

TEST_CASE("shortfall accounting is consistent") {
  // sparse graph: edge budgets frequently unmeetable
  Rng outer(223);
  Graph g = random_graph(outer, 40, 0.04);
  if (g.edge_count() == 0) return;
  CplusdResult r = sample_cplusd(g, 0.5, 0.5, 17);
  for (const auto& ms : r.merge_shortfalls) {
    CHECK(ms.taken < ms.requested);
    CHECK(ms.taken >= 0);
  }
  for (const auto& cs : r.leaf_samples) {
    CHECK(cs.node_shortfall >= 0);
    CHECK(cs.edge_shortfall >= 0);
  }
  std::ostringstream report;
  write_shortfall_report(report, r);
  CHECK(report.str().rfind("scope,id,node_shortfall", 0) == 0);
}

TEST_CASE("single-community graph degenerates to within-community sampling") {
  // complete graph: one community, no merges with candidates needed
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 12; ++u)
    for (int v = u + 1; v < 12; ++v) edges.emplace_back(u, v);
  Graph g = Graph::from_edges(12, edges);
  CplusdResult r = sample_cplusd(g, 0.5, 0.0, 3);
  CHECK(r.sample.nodes.size() == 6);
  CHECK(r.sample.method == "C+D");
}
