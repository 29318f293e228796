#include "cdsample/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "cdsample/budget.hpp"
#include "cdsample/rng.hpp"
#include "cdsample/spectral.hpp"

namespace cdsample {

namespace detail {

std::vector<long long> apportion(const std::vector<long long>& weights, long long total) {
  std::vector<long long> out(weights.size(), 0);
  long long wsum = std::accumulate(weights.begin(), weights.end(), 0LL);
  if (wsum <= 0 || total <= 0) return out;
  std::vector<std::pair<double, std::size_t>> remainders(weights.size());
  long long assigned = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    double quota = static_cast<double>(total) * static_cast<double>(weights[i]) / static_cast<double>(wsum);
    out[i] = static_cast<long long>(std::floor(quota));
    remainders[i] = {quota - std::floor(quota), i};
    assigned += out[i];
  }
  std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (long long i = 0; i < total - assigned; ++i) ++out[remainders[static_cast<std::size_t>(i)].second];
  return out;
}

std::vector<std::pair<int, int>> induced_edges(const Graph& g, const std::vector<int>& nodes) {
  std::vector<char> in(static_cast<std::size_t>(g.node_count()), 0);
  for (int v : nodes) in[static_cast<std::size_t>(v)] = 1;
  std::vector<std::pair<int, int>> out;
  for (int v : nodes)
    for (int w : g.neighbors(v))
      if (w > v && in[static_cast<std::size_t>(w)]) out.emplace_back(v, w);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

namespace {

using detail::induced_edges;

long long checked_node_budget(const Graph& g, double fraction) {
  if (g.node_count() == 0) throw std::domain_error("sampling from empty graph");
  long long budget = round_half_up(fraction * static_cast<double>(g.node_count()));
  if (budget < 1) throw std::domain_error("node budget below 1; increase the fraction");
  return budget;
}

/// `budget` distinct indices uniformly from [0, n), via partial Fisher-Yates.
std::vector<int> pick_uniform(int n, long long budget, Rng& rng) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  for (long long i = 0; i < budget; ++i) {
    std::size_t j = static_cast<std::size_t>(i) + rng.below(static_cast<std::size_t>(n) - static_cast<std::size_t>(i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(budget));
  return pool;
}

/// Distinct indices weighted without replacement (successive renormalized
/// draws). Fills uniformly from the zero-weight remainder if the positive
/// weights run out; reports via fell_back.
std::vector<int> pick_weighted(const std::vector<double>& weights, long long budget, Rng& rng,
                               bool& fell_back) {
  fell_back = false;
  WeightedPicker picker(weights);
  std::vector<int> chosen;
  std::vector<char> taken(weights.size(), 0);
  while (static_cast<long long>(chosen.size()) < budget && !picker.empty()) {
    std::size_t i = picker.draw(rng);
    chosen.push_back(static_cast<int>(i));
    taken[i] = 1;
  }
  if (static_cast<long long>(chosen.size()) < budget) {
    fell_back = true;
    std::vector<int> rest;
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (!taken[i]) rest.push_back(static_cast<int>(i));
    long long need = budget - static_cast<long long>(chosen.size());
    for (long long i = 0; i < need; ++i) {
      std::size_t j = static_cast<std::size_t>(i) + rng.below(rest.size() - static_cast<std::size_t>(i));
      std::swap(rest[static_cast<std::size_t>(i)], rest[j]);
      chosen.push_back(rest[static_cast<std::size_t>(i)]);
    }
  }
  return chosen;
}

SampleGraph finalize_node_sample(const Graph& g, std::vector<int> nodes, std::string method,
                                 const SamplerParams& p) {
  std::sort(nodes.begin(), nodes.end());
  SampleGraph s;
  s.edges = induced_edges(g, nodes);
  s.nodes = std::move(nodes);
  s.method = std::move(method);
  s.params = p;
  return s;
}

SampleGraph node_weighted_sample(const Graph& g, const std::vector<double>& weights, const char* tag,
                                 const SamplerParams& p) {
  long long budget = checked_node_budget(g, p.fraction);
  Rng rng(p.rng_seed);
  bool fell_back = false;
  auto nodes = pick_weighted(weights, budget, rng, fell_back);
  std::string method = tag;
  if (fell_back) method += "[uniform-fallback]";
  SampleGraph s = finalize_node_sample(g, std::move(nodes), std::move(method), p);
  if (fell_back) s.notes.push_back("weighted selection exhausted; filled uniformly");
  return s;
}

}  // namespace

long long node_budget_for(const Graph& g, double fraction) { return checked_node_budget(g, fraction); }

long long default_edge_budget(const Graph& g, double fraction) {
  return round_half_up(fraction * static_cast<double>(g.edge_count()));
}

SampleGraph sample_rn(const Graph& g, const SamplerParams& p) {
  long long budget = checked_node_budget(g, p.fraction);
  Rng rng(p.rng_seed);
  return finalize_node_sample(g, pick_uniform(g.node_count(), budget, rng), "RN", p);
}

SampleGraph sample_rdn(const Graph& g, const SamplerParams& p) {
  std::vector<double> weights(static_cast<std::size_t>(g.node_count()));
  for (int v = 0; v < g.node_count(); ++v) weights[static_cast<std::size_t>(v)] = g.degree(v);
  return node_weighted_sample(g, weights, "RDN", p);
}

SampleGraph sample_rpn(const Graph& g, const SamplerParams& p) {
  auto weights = pagerank(g, p.pagerank_damping);
  return node_weighted_sample(g, weights, "RPN", p);
}

SampleGraph sample_re(const Graph& g, long long edge_budget, const SamplerParams& p) {
  if (edge_budget < 1 || edge_budget > static_cast<long long>(g.edge_count()))
    throw std::domain_error("edge budget out of range");
  Rng rng(p.rng_seed);
  auto idx = pick_uniform(static_cast<int>(g.edge_count()), edge_budget, rng);
  SampleGraph s;
  for (int i : idx) s.edges.push_back(g.edges()[static_cast<std::size_t>(i)]);
  std::sort(s.edges.begin(), s.edges.end());
  std::set<int> nodes;
  for (const auto& [u, v] : s.edges) {
    nodes.insert(u);
    nodes.insert(v);
  }
  s.nodes.assign(nodes.begin(), nodes.end());
  s.method = "RE";
  s.params = p;
  return s;
}

SampleGraph sample_rne(const Graph& g, long long edge_budget, const SamplerParams& p) {
  if (edge_budget < 1 || edge_budget > static_cast<long long>(g.edge_count()))
    throw std::domain_error("edge budget out of range");
  Rng rng(p.rng_seed);
  std::set<std::pair<int, int>> picked;
  while (static_cast<long long>(picked.size()) < edge_budget) {
    int v = static_cast<int>(rng.below(static_cast<std::size_t>(g.node_count())));
    if (g.degree(v) == 0) continue;
    int w = g.neighbors(v)[rng.below(g.neighbors(v).size())];
    picked.insert(std::minmax(v, w));
  }
  SampleGraph s;
  s.edges.assign(picked.begin(), picked.end());
  std::set<int> nodes;
  for (const auto& [u, v] : s.edges) {
    nodes.insert(u);
    nodes.insert(v);
  }
  s.nodes.assign(nodes.begin(), nodes.end());
  s.method = "RNE";
  s.params = p;
  return s;
}

namespace {

/// Exploration core shared by the public sampler and the community wrapper.
/// Returns the visited node set; traversed edges are appended to `traversed`.
std::vector<int> explore_nodes(const Graph& g, ExploreMethod method, long long budget,
                               const SamplerParams& p, Rng& rng,
                               std::set<std::pair<int, int>>& traversed, std::vector<std::string>& notes) {
  const int n = g.node_count();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  auto visit = [&](int v) {
    if (!visited[static_cast<std::size_t>(v)]) {
      visited[static_cast<std::size_t>(v)] = 1;
      order.push_back(v);
      return true;
    }
    return false;
  };
  auto fresh_unvisited = [&]() {
    // uniform over the unvisited nodes
    std::size_t k = rng.below(static_cast<std::size_t>(n) - order.size());
    for (int v = 0; v < n; ++v)
      if (!visited[static_cast<std::size_t>(v)] && k-- == 0) return v;
    return n - 1;  // unreachable
  };

  if (method == ExploreMethod::forest_fire) {
    std::vector<int> queue;
    std::vector<int> unburned;
    while (static_cast<long long>(order.size()) < budget) {
      int seed = fresh_unvisited();
      visit(seed);
      queue = {seed};
      std::size_t head = 0;
      while (head < queue.size() && static_cast<long long>(order.size()) < budget) {
        int u = queue[head++];
        int burn = rng.geometric(p.forward_burning_probability);
        if (burn == 0) continue;
        unburned.clear();
        for (int w : g.neighbors(u))
          if (!visited[static_cast<std::size_t>(w)]) unburned.push_back(w);
        int take = static_cast<int>(std::min<long long>({static_cast<long long>(burn),
                                                         static_cast<long long>(unburned.size()),
                                                         budget - static_cast<long long>(order.size())}));
        for (int i = 0; i < take; ++i) {
          std::size_t j = static_cast<std::size_t>(i) + rng.below(unburned.size() - static_cast<std::size_t>(i));
          std::swap(unburned[static_cast<std::size_t>(i)], unburned[j]);
          int w = unburned[static_cast<std::size_t>(i)];
          visit(w);
          traversed.insert(std::minmax(u, w));
          queue.push_back(w);
        }
      }
    }
    return order;
  }

  // random walk / random jump
  const long long stall_limit = 100 * budget;
  int seed = static_cast<int>(rng.below(static_cast<std::size_t>(n)));
  visit(seed);
  int current = seed;
  long long no_growth = 0;
  while (static_cast<long long>(order.size()) < budget) {
    if (no_growth >= stall_limit || g.degree(current) == 0) {
      seed = fresh_unvisited();
      visit(seed);
      current = seed;
      no_growth = 0;
      notes.push_back("stall-reseed");
      continue;
    }
    bool grew = false;
    if (rng.uniform01() < p.restart_probability) {
      if (method == ExploreMethod::random_walk) {
        current = seed;
      } else {
        current = static_cast<int>(rng.below(static_cast<std::size_t>(n)));
        grew = visit(current);
      }
    } else {
      int w = g.neighbors(current)[rng.below(g.neighbors(current).size())];
      traversed.insert(std::minmax(current, w));
      current = w;
      grew = visit(current);
    }
    no_growth = grew ? 0 : no_growth + 1;
  }
  return order;
}

const char* explore_tag(ExploreMethod m) {
  switch (m) {
    case ExploreMethod::random_walk: return "RW";
    case ExploreMethod::random_jump: return "RJ";
    case ExploreMethod::forest_fire: return "FF";
  }
  return "?";
}

}  // namespace

SampleGraph sample_exploration(const Graph& g, ExploreMethod method, const SamplerParams& p) {
  long long budget = checked_node_budget(g, p.fraction);
  Rng rng(p.rng_seed);
  std::set<std::pair<int, int>> traversed;
  std::vector<std::string> notes;
  auto nodes = explore_nodes(g, method, budget, p, rng, traversed, notes);
  std::sort(nodes.begin(), nodes.end());

  SampleGraph s;
  s.nodes = std::move(nodes);
  if (p.induced)
    s.edges = induced_edges(g, s.nodes);
  else
    s.edges.assign(traversed.begin(), traversed.end());
  s.method = std::string(explore_tag(method)) + (p.induced ? "(i)" : "");
  s.params = p;
  s.notes = std::move(notes);
  return s;
}

SampleGraph wrap_community_based(BaseMethod base, const Graph& g, const Partition& part,
                                 const SamplerParams& p, long long edge_budget) {
  SampleGraph s;
  s.params = p;

  std::vector<long long> sizes;
  for (const auto& c : part.communities) sizes.push_back(static_cast<long long>(c.size()));

  if (base == BaseMethod::re) {
    if (edge_budget < 0) edge_budget = default_edge_budget(g, p.fraction);
    std::vector<std::vector<std::pair<int, int>>> intra(part.communities.size());
    std::vector<long long> intra_counts;
    for (std::size_t k = 0; k < part.communities.size(); ++k) {
      intra[k] = induced_edges(g, part.communities[k]);
      intra_counts.push_back(static_cast<long long>(intra[k].size()));
    }
    auto budgets = detail::apportion(intra_counts, edge_budget);
    std::set<int> nodes;
    for (std::size_t k = 0; k < part.communities.size(); ++k) {
      long long b = budgets[k];
      if (b > intra_counts[k]) {
        s.notes.push_back("community " + std::to_string(k) + " short " + std::to_string(b - intra_counts[k]) + " edges");
        b = intra_counts[k];
      }
      if (b == 0) continue;
      Rng rng(mix_seed(p.rng_seed, 1000 + k));
      auto idx = pick_uniform(static_cast<int>(intra_counts[k]), b, rng);
      for (int i : idx) {
        s.edges.push_back(intra[k][static_cast<std::size_t>(i)]);
        nodes.insert(intra[k][static_cast<std::size_t>(i)].first);
        nodes.insert(intra[k][static_cast<std::size_t>(i)].second);
      }
    }
    std::sort(s.edges.begin(), s.edges.end());
    s.nodes.assign(nodes.begin(), nodes.end());
    s.method = "CBasedRE";
    return s;
  }

  long long total = checked_node_budget(g, p.fraction);
  auto budgets = detail::apportion(sizes, total);
  std::vector<int> selected;
  for (std::size_t k = 0; k < part.communities.size(); ++k) {
    const auto& community = part.communities[k];
    long long b = budgets[k];
    if (b == 0) continue;
    if (b >= static_cast<long long>(community.size())) {
      if (b > static_cast<long long>(community.size()))
        s.notes.push_back("community " + std::to_string(k) + " short " +
                          std::to_string(b - static_cast<long long>(community.size())) + " nodes");
      selected.insert(selected.end(), community.begin(), community.end());
      continue;
    }
    Rng rng(mix_seed(p.rng_seed, 1000 + k));
    Graph sub = induced_subgraph(g, community);
    std::vector<int> local;
    if (base == BaseMethod::rn) {
      local = pick_uniform(sub.node_count(), b, rng);
    } else if (base == BaseMethod::rdn) {
      std::vector<double> weights(static_cast<std::size_t>(sub.node_count()));
      for (int v = 0; v < sub.node_count(); ++v) weights[static_cast<std::size_t>(v)] = sub.degree(v);
      bool fell_back = false;
      local = pick_weighted(weights, b, rng, fell_back);
      if (fell_back) s.notes.push_back("community " + std::to_string(k) + " degree weights exhausted");
    } else {  // rw
      std::set<std::pair<int, int>> traversed;
      local = explore_nodes(sub, ExploreMethod::random_walk, b, p, rng, traversed, s.notes);
    }
    for (int v : local) selected.push_back(community[static_cast<std::size_t>(v)]);
  }
  std::sort(selected.begin(), selected.end());
  s.edges = induced_edges(g, selected);
  s.nodes = std::move(selected);
  switch (base) {
    case BaseMethod::rn: s.method = "CBasedRN"; break;
    case BaseMethod::rdn: s.method = "CBasedRDN"; break;
    case BaseMethod::rw: s.method = "CBasedRW"; break;
    case BaseMethod::re: break;  // handled above
  }
  return s;
}

SampleGraph wrap_dpl_based(BaseMethod base, const Graph& g, const SamplerParams& p, long long edge_budget) {
  SamplerParams base_params = p;
  base_params.rng_seed = mix_seed(p.rng_seed, 77);
  SampleGraph s;
  switch (base) {
    case BaseMethod::rn: s = sample_rn(g, base_params); break;
    case BaseMethod::rdn: s = sample_rdn(g, base_params); break;
    case BaseMethod::re:
      s = sample_re(g, edge_budget < 0 ? default_edge_budget(g, p.fraction) : edge_budget, base_params);
      break;
    case BaseMethod::rw: s = sample_exploration(g, ExploreMethod::random_walk, base_params); break;
  }
  s.method = "DBased" + s.method;
  s.params = p;

  if (g.node_count() < 2 || g.edge_count() < 1) {
    s.notes.push_back("whole-graph alpha undefined; sample unchanged");
    return s;
  }
  double alpha = densification_exponent(g.node_count(), static_cast<long long>(g.edge_count()));
  long long target = dpl_edge_target(static_cast<long long>(s.nodes.size()), alpha, 0.0);
  long long current = static_cast<long long>(s.edges.size());
  Rng rng(mix_seed(p.rng_seed, 78));

  if (current < target) {
    auto all = induced_edges(g, s.nodes);
    std::vector<std::pair<int, int>> candidates;
    std::set_difference(all.begin(), all.end(), s.edges.begin(), s.edges.end(), std::back_inserter(candidates));
    if (candidates.empty()) {
      s.notes.push_back("edge shortfall " + std::to_string(target - current) + ": no candidate edges");
      return s;
    }
    std::vector<double> weights;
    for (const auto& [u, v] : candidates)
      weights.push_back(static_cast<double>(g.degree(u) + g.degree(v)));
    WeightedPicker picker(weights);
    while (current < target && !picker.empty()) {
      s.edges.push_back(candidates[picker.draw(rng)]);
      ++current;
    }
    if (current < target)
      s.notes.push_back("edge shortfall " + std::to_string(target - current) + ": candidates exhausted");
    std::sort(s.edges.begin(), s.edges.end());
  } else if (current > target) {
    std::vector<double> weights;
    for (const auto& [u, v] : s.edges)
      weights.push_back(static_cast<double>(g.degree(u) + g.degree(v)));
    WeightedPicker picker(weights);
    std::vector<std::pair<int, int>> kept;
    for (long long i = 0; i < target && !picker.empty(); ++i)
      kept.push_back(s.edges[picker.draw(rng)]);
    std::sort(kept.begin(), kept.end());
    s.edges = std::move(kept);
  }
  return s;
}

Graph sample_to_graph(const SampleGraph& s) {
  std::vector<int> remap;
  int max_node = s.nodes.empty() ? -1 : s.nodes.back();
  remap.assign(static_cast<std::size_t>(max_node + 1), -1);
  for (std::size_t i = 0; i < s.nodes.size(); ++i) remap[static_cast<std::size_t>(s.nodes[i])] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : s.edges)
    edges.emplace_back(remap[static_cast<std::size_t>(u)], remap[static_cast<std::size_t>(v)]);
  return Graph::from_edges(static_cast<int>(s.nodes.size()), std::move(edges));
}

void write_sample(std::ostream& out, const SampleGraph& s, const NodeIdMap* ids) {
  out << "# method=" << s.method << " seed=" << s.params.rng_seed << " fraction=" << s.params.fraction << "\n";
  out << "# nodes: " << s.nodes.size() << " edges: " << s.edges.size() << "\n";
  std::vector<char> covered;
  int max_node = s.nodes.empty() ? -1 : s.nodes.back();
  covered.assign(static_cast<std::size_t>(max_node + 1), 0);
  for (const auto& [u, v] : s.edges) {
    covered[static_cast<std::size_t>(u)] = 1;
    covered[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> isolated;
  for (int v : s.nodes)
    if (!covered[static_cast<std::size_t>(v)]) isolated.push_back(v);
  if (!isolated.empty()) {
    out << "# isolated:";
    for (int v : isolated) out << " " << (ids ? ids->external_id(v) : static_cast<std::int64_t>(v));
    out << "\n";
  }
  for (const auto& [u, v] : s.edges) {
    if (ids)
      out << ids->external_id(u) << "\t" << ids->external_id(v) << "\n";
    else
      out << u << "\t" << v << "\n";
  }
}

}  // namespace cdsample
