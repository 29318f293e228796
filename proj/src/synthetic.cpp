#include "cdsample/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "cdsample/budget.hpp"
#include "cdsample/rng.hpp"

namespace cdsample {

namespace {

/// Shared growth loop: seed clique, then one node at a time with
/// `attachment_of(v)` preferential (or triad-closing) links.
template <typename AttachmentFn>
Graph grow(int nodes, int clique, double triad_probability, std::uint64_t seed,
           AttachmentFn attachment_of) {
  if (triad_probability < 0.0 || triad_probability > 1.0)
    throw std::domain_error("triad probability must be in [0, 1]");
  if (nodes < clique) throw std::domain_error("need at least the seed clique");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> endpoint_pool;  // every edge endpoint once: degree-proportional urn
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(nodes));

  auto link = [&](int u, int v) {
    edges.emplace_back(u, v);
    endpoint_pool.push_back(u);
    endpoint_pool.push_back(v);
    adjacency[static_cast<std::size_t>(u)].push_back(v);
    adjacency[static_cast<std::size_t>(v)].push_back(u);
  };

  for (int u = 0; u < clique; ++u)
    for (int v = u + 1; v < clique; ++v) link(u, v);

  for (int v = clique; v < nodes; ++v) {
    int want = std::min(attachment_of(v), v);  // at most one link per existing node
    std::set<int> targets;
    int previous = -1;
    while (static_cast<int>(targets.size()) < want) {
      int t = -1;
      if (previous >= 0 && rng.uniform01() < triad_probability) {
        // triad step: close a triangle through the previous target
        const auto& nbrs = adjacency[static_cast<std::size_t>(previous)];
        int candidate = nbrs[rng.below(nbrs.size())];
        if (candidate != v && !targets.count(candidate)) t = candidate;
      }
      if (t < 0) {
        do {
          t = endpoint_pool[rng.below(endpoint_pool.size())];
        } while (targets.count(t));
      }
      targets.insert(t);
      previous = t;
    }
    for (int t : targets) link(t, v);
  }
  return Graph::from_edges(nodes, std::move(edges));
}

}  // namespace

Graph generate_preferential_attachment(int nodes, int attachment, std::uint64_t seed,
                                       double triad_probability) {
  if (attachment < 1) throw std::domain_error("attachment must be >= 1");
  if (nodes < attachment + 1) throw std::domain_error("need more nodes than the attachment count");
  return grow(nodes, attachment + 1, triad_probability, seed, [=](int) { return attachment; });
}

Graph generate_dpl_attachment(int nodes, double alpha, std::uint64_t seed, double triad_probability) {
  if (alpha <= 1.0 || alpha >= 2.0) throw std::domain_error("densification exponent must be in (1, 2)");
  if (nodes < 3) throw std::domain_error("need at least 3 nodes");
  if (triad_probability < 0.0 || triad_probability > 1.0)
    throw std::domain_error("triad probability must be in [0, 1]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> endpoint_pool;
  std::set<std::pair<int, int>> edge_set;
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(nodes));

  auto link = [&](int u, int v) {
    if (u == v) return false;
    auto key = std::minmax(u, v);
    if (!edge_set.insert(key).second) return false;
    edges.push_back(key);
    endpoint_pool.push_back(u);
    endpoint_pool.push_back(v);
    adjacency[static_cast<std::size_t>(u)].push_back(v);
    adjacency[static_cast<std::size_t>(v)].push_back(u);
    return true;
  };

  link(0, 1);
  link(1, 2);
  link(0, 2);

  // e(t) = t^alpha by construction: step t adds round(t^alpha - (t-1)^alpha)
  // edges. The new node claims up to two of them (preferential targets); the
  // rest densify the existing graph between degree-weighted endpoint pairs,
  // which is where hub-hub edges and the dense core come from.
  for (int v = 3; v < nodes; ++v) {
    double t = static_cast<double>(v + 1);
    long long quota = std::max(1ll, round_half_up(std::pow(t, alpha) - std::pow(t - 1.0, alpha)));
    long long fresh = std::min<long long>({2, quota, v});
    long long placed = 0;
    while (placed < fresh) {
      if (link(endpoint_pool[rng.below(endpoint_pool.size())], v)) ++placed;
    }
    for (long long i = fresh; i < quota; ++i) {
      // densifying edge; give up after a bounded number of collisions
      for (int attempt = 0; attempt < 50; ++attempt) {
        int u = endpoint_pool[rng.below(endpoint_pool.size())];
        int w;
        if (rng.uniform01() < triad_probability) {
          // close a wedge: two hops out from u
          const auto& n1 = adjacency[static_cast<std::size_t>(u)];
          int mid = n1[rng.below(n1.size())];
          const auto& n2 = adjacency[static_cast<std::size_t>(mid)];
          w = n2[rng.below(n2.size())];
        } else {
          w = endpoint_pool[rng.below(endpoint_pool.size())];
        }
        if (link(u, w)) break;
      }
    }
  }
  return Graph::from_edges(nodes, std::move(edges));
}

}  // namespace cdsample
