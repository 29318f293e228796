#include "cdsample/cplusd.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_set>

#include "cdsample/rng.hpp"

namespace cdsample {

CommunitySample sample_within_community(const Graph& g, const std::vector<int>& community, int leaf_id,
                                        long long node_budget, long long edge_budget, std::uint64_t seed,
                                        bool within_community_degrees) {
  CommunitySample cs;
  cs.leaf_id = leaf_id;
  std::vector<int> sorted(community);
  std::sort(sorted.begin(), sorted.end());

  if (node_budget >= static_cast<long long>(sorted.size())) {
    cs.node_shortfall = node_budget - static_cast<long long>(sorted.size());
    cs.nodes = sorted;
  } else if (node_budget > 0) {
    Graph sub = induced_subgraph(g, sorted);
    std::vector<double> weights(static_cast<std::size_t>(sub.node_count()));
    for (int v = 0; v < sub.node_count(); ++v)
      weights[static_cast<std::size_t>(v)] =
          within_community_degrees ? sub.degree(v) : g.degree(sorted[static_cast<std::size_t>(v)]);
    Rng rng(seed);
    WeightedPicker picker(weights);
    std::vector<char> taken(weights.size(), 0);
    while (static_cast<long long>(cs.nodes.size()) < node_budget && !picker.empty()) {
      std::size_t i = picker.draw(rng);
      taken[i] = 1;
      cs.nodes.push_back(sorted[i]);
    }
    if (static_cast<long long>(cs.nodes.size()) < node_budget) {
      // zero-weight remainder (edgeless part of the community): fill uniformly
      std::vector<int> rest;
      for (std::size_t i = 0; i < weights.size(); ++i)
        if (!taken[i]) rest.push_back(static_cast<int>(i));
      long long need = node_budget - static_cast<long long>(cs.nodes.size());
      for (long long i = 0; i < need; ++i) {
        std::size_t j = static_cast<std::size_t>(i) + rng.below(rest.size() - static_cast<std::size_t>(i));
        std::swap(rest[static_cast<std::size_t>(i)], rest[j]);
        cs.nodes.push_back(sorted[static_cast<std::size_t>(rest[static_cast<std::size_t>(i)])]);
      }
    }
    std::sort(cs.nodes.begin(), cs.nodes.end());
  }

  if (edge_budget > 0 && cs.nodes.size() >= 2) {
    auto candidates = detail::induced_edges(g, cs.nodes);
    if (static_cast<long long>(candidates.size()) <= edge_budget) {
      cs.edge_shortfall = edge_budget - static_cast<long long>(candidates.size());
      cs.edges = std::move(candidates);
    } else {
      Rng rng(mix_seed(seed, 0xEDull));
      std::vector<double> weights;
      Graph sub;
      std::vector<int> local_of;  // parent index -> local index, for within-community degrees
      if (within_community_degrees) {
        sub = induced_subgraph(g, sorted);
        local_of.assign(static_cast<std::size_t>(g.node_count()), -1);
        for (std::size_t i = 0; i < sorted.size(); ++i) local_of[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
      }
      for (const auto& [u, v] : candidates) {
        double w = within_community_degrees
                       ? sub.degree(local_of[static_cast<std::size_t>(u)]) + sub.degree(local_of[static_cast<std::size_t>(v)])
                       : g.degree(u) + g.degree(v);
        weights.push_back(w);
      }
      WeightedPicker picker(weights);
      for (long long i = 0; i < edge_budget && !picker.empty(); ++i)
        cs.edges.push_back(candidates[picker.draw(rng)]);
      std::sort(cs.edges.begin(), cs.edges.end());
      cs.edge_shortfall = edge_budget - static_cast<long long>(cs.edges.size());
    }
  } else if (edge_budget > 0) {
    cs.edge_shortfall = edge_budget;
  }
  return cs;
}

CplusdResult merge_dendrogram(const Graph& g, const Dendrogram& dend, const BudgetTree& budgets,
                              std::vector<CommunitySample> leaf_samples, std::uint64_t seed) {
  CplusdResult result;
  result.leaf_samples = std::move(leaf_samples);

  // accumulated selected node set per dendrogram node
  std::vector<std::vector<int>> selected(dend.nodes.size());
  std::vector<std::pair<int, int>> all_edges;
  for (const auto& cs : result.leaf_samples) {
    selected[static_cast<std::size_t>(cs.leaf_id)] = cs.nodes;
    all_edges.insert(all_edges.end(), cs.edges.begin(), cs.edges.end());
  }

  // internal nodes by ascending merge order (children before parents)
  std::vector<int> internal;
  for (std::size_t id = 0; id < dend.nodes.size(); ++id)
    if (!dend.nodes[id].is_leaf()) internal.push_back(static_cast<int>(id));
  std::sort(internal.begin(), internal.end(), [&](int a, int b) {
    return dend.nodes[static_cast<std::size_t>(a)].merge_order < dend.nodes[static_cast<std::size_t>(b)].merge_order;
  });

  for (int id : internal) {
    const auto& node = dend.nodes[static_cast<std::size_t>(id)];
    const auto& left = selected[static_cast<std::size_t>(node.left)];
    const auto& right = selected[static_cast<std::size_t>(node.right)];
    long long budget = budgets.nodes[static_cast<std::size_t>(id)].inter_edge_budget;

    if (budget > 0 && !left.empty() && !right.empty()) {
      const auto& small = left.size() <= right.size() ? left : right;
      const auto& large = left.size() <= right.size() ? right : left;
      std::unordered_set<int> in_large(large.begin(), large.end());
      std::vector<std::pair<int, int>> candidates;
      for (int u : small)
        for (int w : g.neighbors(u))
          if (in_large.count(w)) candidates.push_back(std::minmax(u, w));
      std::sort(candidates.begin(), candidates.end());

      long long take = std::min(budget, static_cast<long long>(candidates.size()));
      if (take < budget) result.merge_shortfalls.push_back({id, budget, take});
      if (take > 0) {
        Rng rng(mix_seed(seed, 0xC0DEull + static_cast<std::uint64_t>(id)));
        std::vector<double> weights;
        for (const auto& [u, v] : candidates)
          weights.push_back(static_cast<double>(g.degree(u) + g.degree(v)));
        WeightedPicker picker(weights);
        for (long long i = 0; i < take && !picker.empty(); ++i)
          all_edges.push_back(candidates[picker.draw(rng)]);
      }
    } else if (budget > 0) {
      result.merge_shortfalls.push_back({id, budget, 0});
    }

    auto& merged = selected[static_cast<std::size_t>(id)];
    merged.resize(left.size() + right.size());
    std::merge(left.begin(), left.end(), right.begin(), right.end(), merged.begin());
  }

  SampleGraph s;
  s.method = "C+D";
  int root = dend.root;
  s.nodes = selected[static_cast<std::size_t>(root)];
  std::sort(all_edges.begin(), all_edges.end());
  all_edges.erase(std::unique(all_edges.begin(), all_edges.end()), all_edges.end());
  s.edges = std::move(all_edges);
  result.sample = std::move(s);
  return result;
}

CplusdResult sample_cplusd_with_hierarchy(const Graph& g, const Hierarchy& h, double fraction,
                                          double d_alpha, std::uint64_t seed, bool within_community_degrees) {
  BudgetTree budgets = allocate_budgets(h.dendrogram, fraction, d_alpha);
  std::vector<CommunitySample> leaf_samples;
  for (std::size_t k = 0; k < h.dendrogram.leaf_count(); ++k) {
    int leaf = h.dendrogram.leaf_ids[k];
    const auto& bn = budgets.nodes[static_cast<std::size_t>(leaf)];
    leaf_samples.push_back(sample_within_community(g, h.dendrogram.leaf_members[static_cast<std::size_t>(leaf)],
                                                   leaf, bn.node_budget, bn.edge_budget,
                                                   mix_seed(seed, static_cast<std::uint64_t>(leaf)),
                                                   within_community_degrees));
  }
  CplusdResult r = merge_dendrogram(g, h.dendrogram, budgets, std::move(leaf_samples), seed);
  r.sample.params.fraction = fraction;
  r.sample.params.rng_seed = seed;
  return r;
}

CplusdResult sample_cplusd(const Graph& g, double fraction, double d_alpha, std::uint64_t seed,
                           bool within_community_degrees) {
  Hierarchy h = extract_hierarchy(g);
  return sample_cplusd_with_hierarchy(g, h, fraction, d_alpha, seed, within_community_degrees);
}

void write_shortfall_report(std::ostream& out, const CplusdResult& r) {
  out << "scope,id,node_shortfall,edge_shortfall,requested,taken\n";
  for (const auto& cs : r.leaf_samples)
    out << "leaf," << cs.leaf_id << "," << cs.node_shortfall << "," << cs.edge_shortfall << ",,\n";
  for (const auto& ms : r.merge_shortfalls)
    out << "merge," << ms.dendrogram_node << ",,," << ms.requested << "," << ms.taken << "\n";
}

}  // namespace cdsample
