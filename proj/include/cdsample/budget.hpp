#ifndef CDSAMPLE_BUDGET_HPP
#define CDSAMPLE_BUDGET_HPP

#include <cmath>
#include <iosfwd>
#include <optional>
#include <vector>

#include "cdsample/community.hpp"

namespace cdsample {

inline long long round_half_up(double x) { return static_cast<long long>(std::floor(x + 0.5)); }

/// Two-point densification exponent alpha = ln(e)/ln(n). Undefined (nullopt)
/// when n < 2 or e < 1.
struct AlphaRecord {
  long long n = 0;
  long long e = 0;
  std::optional<double> alpha;

  static AlphaRecord compute(long long n, long long e) {
    AlphaRecord r{n, e, std::nullopt};
    if (n >= 2 && e >= 1) r.alpha = std::log(static_cast<double>(e)) / std::log(static_cast<double>(n));
    return r;
  }
};

/// Throwing variant for callers that have already checked the preconditions.
double densification_exponent(long long n, long long e);

/// round(node_budget^(alpha + d_alpha)), clamped to the complete-graph bound.
/// node_budget <= 1 yields 0.
long long dpl_edge_target(long long node_budget, double alpha, double d_alpha);

struct BudgetNode {
  long long node_budget = 0;
  long long edge_budget = 0;
  long long inter_edge_budget = 0;  // internal nodes only
  AlphaRecord alpha;
};

struct BudgetTree {
  std::vector<BudgetNode> nodes;  // aligned with Dendrogram::nodes
  int root = -1;
};

/// Apportions round(fraction * n_root) sample nodes across leaves by the
/// largest-remainder method (proportional to leaf node counts, residual ties
/// to the lower leaf id), then derives per-node edge budgets from each
/// dendrogram node's own densification exponent shifted by d_alpha.
/// Throws std::domain_error unless fraction is in (0, 1].
BudgetTree allocate_budgets(const Dendrogram& dend, double fraction, double d_alpha);

/// Mirrors the dendrogram text format with `(node_budget, edge_budget,
/// inter_edge_budget, alpha)` appended per line.
void write_budget_tree(std::ostream& out, const Dendrogram& dend, const BudgetTree& tree);

}  // namespace cdsample

#endif  // CDSAMPLE_BUDGET_HPP
