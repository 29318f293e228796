#include "cdsample/budget.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cdsample {

double densification_exponent(long long n, long long e) {
  if (n < 2 || e < 1) throw std::domain_error("densification exponent undefined: need n >= 2 and e >= 1");
  return std::log(static_cast<double>(e)) / std::log(static_cast<double>(n));
}

long long dpl_edge_target(long long node_budget, double alpha, double d_alpha) {
  if (node_budget <= 1) return 0;
  double nb = static_cast<double>(node_budget);
  long long target = round_half_up(std::pow(nb, alpha + d_alpha));
  long long complete = node_budget * (node_budget - 1) / 2;
  return std::clamp(target, 0LL, complete);
}

BudgetTree allocate_budgets(const Dendrogram& dend, double fraction, double d_alpha) {
  if (!(fraction > 0.0 && fraction <= 1.0)) throw std::domain_error("fraction must be in (0, 1]");
  BudgetTree tree;
  tree.nodes.assign(dend.nodes.size(), {});
  tree.root = dend.root;

  const long long n_root = dend.nodes[static_cast<std::size_t>(dend.root)].node_count;
  const long long total = round_half_up(fraction * static_cast<double>(n_root));

  // largest-remainder apportionment over the leaves
  std::vector<long long> floors(dend.leaf_count());
  std::vector<std::pair<double, std::size_t>> remainders(dend.leaf_count());
  long long assigned = 0;
  for (std::size_t k = 0; k < dend.leaf_count(); ++k) {
    long long n_c = dend.nodes[static_cast<std::size_t>(dend.leaf_ids[k])].node_count;
    double quota = static_cast<double>(total) * static_cast<double>(n_c) / static_cast<double>(n_root);
    floors[k] = static_cast<long long>(std::floor(quota));
    remainders[k] = {quota - std::floor(quota), k};
    assigned += floors[k];
  }
  std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (long long i = 0; i < total - assigned; ++i) ++floors[remainders[static_cast<std::size_t>(i)].second];

  for (std::size_t k = 0; k < dend.leaf_count(); ++k)
    tree.nodes[static_cast<std::size_t>(dend.leaf_ids[k])].node_budget = floors[k];

  // internal node budgets bottom-up; dendrogram nodes are created children
  // before parents, so a forward pass suffices
  for (std::size_t id = 0; id < dend.nodes.size(); ++id) {
    const auto& dn = dend.nodes[id];
    auto& bn = tree.nodes[id];
    if (!dn.is_leaf())
      bn.node_budget = tree.nodes[static_cast<std::size_t>(dn.left)].node_budget +
                       tree.nodes[static_cast<std::size_t>(dn.right)].node_budget;
    bn.alpha = AlphaRecord::compute(dn.node_count, dn.edge_count);
    bn.edge_budget = bn.alpha.alpha ? dpl_edge_target(bn.node_budget, *bn.alpha.alpha, d_alpha) : 0;
  }
  for (std::size_t id = 0; id < dend.nodes.size(); ++id) {
    const auto& dn = dend.nodes[id];
    if (dn.is_leaf()) continue;
    auto& bn = tree.nodes[id];
    bn.inter_edge_budget = std::max(0LL, bn.edge_budget -
                                             tree.nodes[static_cast<std::size_t>(dn.left)].edge_budget -
                                             tree.nodes[static_cast<std::size_t>(dn.right)].edge_budget);
  }
  return tree;
}

void write_budget_tree(std::ostream& out, const Dendrogram& dend, const BudgetTree& tree) {
  for (std::size_t id = 0; id < dend.nodes.size(); ++id) {
    const auto& dn = dend.nodes[id];
    const auto& bn = tree.nodes[id];
    if (dn.is_leaf()) {
      out << "leaf " << id << " " << dn.node_count << " " << dn.edge_count << " :";
      for (int v : dend.leaf_members[id]) out << " " << v;
    } else {
      out << "merge " << id << " " << dn.left << " " << dn.right << " " << dn.merge_order;
    }
    out << " (" << bn.node_budget << ", " << bn.edge_budget << ", " << bn.inter_edge_budget << ", ";
    if (bn.alpha.alpha)
      out << *bn.alpha.alpha;
    else
      out << "undefined";
    out << ")\n";
  }
}

}  // namespace cdsample
