#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "cdsample/graph.hpp"
#include "helpers.hpp"

using namespace cdsample;
using cdsample::testing::random_graph;

TEST_CASE("load_edge_list parses comments, duplicates and self-loops") {
  std::istringstream in(
      "# SNAP-style header\n"
      "# Nodes: 4 Edges: 5\n"
      "10 20\n"
      "20 10\n"
      "10 10\n"
      "20 30\n"
      "30\t40\n"
      "10 20\n");
  LoadedGraph lg = load_edge_list(in);
  CHECK(lg.graph.node_count() == 4);
  CHECK(lg.graph.edge_count() == 3);
  CHECK(lg.report.data_lines == 6);
  CHECK(lg.report.self_loops_dropped == 1);
  CHECK(lg.report.duplicates_dropped == 2);
  // first-seen dense ids
  CHECK(lg.ids.internal_id(10) == 0);
  CHECK(lg.ids.internal_id(40) == 3);
  CHECK(lg.ids.external_id(2) == 30);
  CHECK(lg.graph.has_edge(0, 1));
  CHECK_FALSE(lg.graph.has_edge(0, 3));
}

TEST_CASE("load_edge_list reports the offending line") {
  std::istringstream in("1 2\nnot numbers\n");
  try {
    load_edge_list(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("empty input gives an empty graph") {
  std::istringstream in("# only comments\n");
  LoadedGraph lg = load_edge_list(in);
  CHECK(lg.graph.node_count() == 0);
  CHECK(lg.graph.edge_count() == 0);
}

TEST_CASE("write/load round trip preserves the graph") {
  Rng rng(3);
  Graph g = random_graph(rng, 12, 0.3);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  LoadedGraph lg = load_edge_list(in);
  // internal ids are first-seen, so map each reloaded edge back to the
  // original labels before comparing
  std::vector<std::pair<int, int>> mapped;
  for (const auto& [u, v] : lg.graph.edges()) {
    auto a = static_cast<int>(lg.ids.external_id(u));
    auto b = static_cast<int>(lg.ids.external_id(v));
    mapped.push_back(std::minmax(a, b));
  }
  std::sort(mapped.begin(), mapped.end());
  CHECK(mapped == g.edges());
}

TEST_CASE("from_edges normalizes and validates") {
  Graph g = Graph::from_edges(4, {{2, 1}, {1, 2}, {3, 3}, {0, 3}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges()[0] == std::pair<int, int>{0, 3});
  CHECK(g.edges()[1] == std::pair<int, int>{1, 2});
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 5}}), std::out_of_range);
}

TEST_CASE("handshake lemma on random graphs") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng, 20, 0.2);
    long long total = 0;
    for (int v = 0; v < g.node_count(); ++v) total += g.degree(v);
    CHECK(total == 2 * static_cast<long long>(g.edge_count()));
  }
}

TEST_CASE("induced_subgraph matches the brute-force definition") {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 15, 0.25);
    std::vector<int> nodes;
    for (int v = 0; v < g.node_count(); ++v)
      if (rng.uniform01() < 0.5) nodes.push_back(v);
    Graph sub = induced_subgraph(g, nodes);
    REQUIRE(sub.node_count() == static_cast<int>(nodes.size()));
    // brute force: check every pair (nodes are sorted ascending after reindex)
    std::size_t expected = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        bool orig = g.has_edge(nodes[i], nodes[j]);
        CHECK(sub.has_edge(static_cast<int>(i), static_cast<int>(j)) == orig);
        if (orig) ++expected;
      }
    CHECK(sub.edge_count() == expected);
  }
  Graph g = random_graph(rng, 5, 0.5);
  CHECK_THROWS_AS(induced_subgraph(g, {0, 9}), std::domain_error);
}
