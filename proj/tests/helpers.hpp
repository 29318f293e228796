#ifndef CDSAMPLE_TESTS_HELPERS_HPP
#define CDSAMPLE_TESTS_HELPERS_HPP

#include <utility>
#include <vector>

#include "cdsample/graph.hpp"
#include "cdsample/rng.hpp"

namespace cdsample::testing {

/// Erdos-Renyi G(n, p) over the dense index set.
inline Graph random_graph(Rng& rng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

/// Star K_{1,leaves} with the hub at index 0.
inline Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, std::move(edges));
}

/// Two triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
inline Graph two_triangle_bridge() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

}  // namespace cdsample::testing

#endif
