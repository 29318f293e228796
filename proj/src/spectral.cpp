#include "cdsample/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "cdsample/rng.hpp"

namespace cdsample {

namespace {

void adjacency_matvec(const Graph& g, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
  y.setZero();
  for (const auto& [u, v] : g.edges()) {
    y[u] += x[v];
    y[v] += x[u];
  }
}

struct RitzResult {
  std::vector<double> values;   // |theta|, descending, min(k, n) entries
  Eigen::VectorXd principal;    // Ritz vector of the largest |theta|
  double max_residual = 0.0;
};

RitzResult lanczos_topk(const Graph& g, int k, int steps) {
  const int n = g.node_count();
  const int m = std::min(steps, n);
  Eigen::MatrixXd basis(n, m);
  Eigen::VectorXd alpha_diag(m), beta_off(m);
  beta_off.setZero();

  Rng rng(0x5bd1e995u);  // fixed start vector seed: results must be reproducible
  auto random_unit = [&]() {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.uniform01() - 0.5;
    v.normalize();
    return v;
  };

  auto reorthogonalize = [&](Eigen::VectorXd& w, int upto) {
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j < upto; ++j) w -= basis.col(j).dot(w) * basis.col(j);
  };

  Eigen::VectorXd v = random_unit();
  Eigen::VectorXd w(n);
  int built = 0;
  double last_beta = 0.0;
  while (built < m) {
    basis.col(built) = v;
    adjacency_matvec(g, v, w);
    alpha_diag[built] = v.dot(w);
    reorthogonalize(w, built + 1);
    double beta = w.norm();
    ++built;
    if (built == m) {
      last_beta = built == n ? 0.0 : beta;
      break;
    }
    if (beta < 1e-12) {
      // invariant subspace exhausted: restart with a fresh direction
      Eigen::VectorXd r = random_unit();
      reorthogonalize(r, built);
      double norm = r.norm();
      if (norm < 1e-12) break;  // basis spans the whole space
      beta_off[built - 1] = 0.0;
      v = r / norm;
    } else {
      beta_off[built - 1] = beta;
      v = w / beta;
    }
  }

  const int dim = built;
  Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    tri(i, i) = alpha_diag[i];
    if (i + 1 < dim) tri(i, i + 1) = tri(i + 1, i) = beta_off[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri);
  if (solver.info() != Eigen::Success) throw SpectralError("tridiagonal eigensolve failed", -1.0);

  std::vector<int> order(static_cast<std::size_t>(dim));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(solver.eigenvalues()[a]) > std::abs(solver.eigenvalues()[b]);
  });

  RitzResult out;
  const int want = std::min(k, n);
  for (int i = 0; i < want && i < dim; ++i) {
    int idx = order[static_cast<std::size_t>(i)];
    out.values.push_back(std::abs(solver.eigenvalues()[idx]));
    out.max_residual = std::max(out.max_residual, std::abs(last_beta * solver.eigenvectors()(dim - 1, idx)));
  }
  while (static_cast<int>(out.values.size()) < want) out.values.push_back(0.0);
  out.principal = (basis.leftCols(dim) * solver.eigenvectors().col(order[0])).cwiseAbs();
  out.principal.normalize();
  return out;
}

RitzResult lanczos_converged(const Graph& g, int k) {
  const int n = g.node_count();
  int steps = std::min(n, 2 * k + 100);
  RitzResult r = lanczos_topk(g, k, steps);
  double scale = r.values.empty() ? 0.0 : r.values.front();
  if (scale > 0.0 && r.max_residual > 1e-2 * scale && steps < n) {
    r = lanczos_topk(g, k, std::min(n, 2 * steps));
    scale = r.values.empty() ? 0.0 : r.values.front();
    if (scale > 0.0 && r.max_residual > 1e-2 * scale)
      throw SpectralError("Lanczos did not converge", r.max_residual);
  }
  return r;
}

RitzResult dense_topk(const Graph& g, int k) {
  const int n = g.node_count();
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) adj(u, v) = adj(v, u) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj);
  if (solver.info() != Eigen::Success) throw SpectralError("dense eigensolve failed", -1.0);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(solver.eigenvalues()[a]) > std::abs(solver.eigenvalues()[b]);
  });
  RitzResult out;
  for (int i = 0; i < std::min(k, n); ++i)
    out.values.push_back(std::abs(solver.eigenvalues()[order[static_cast<std::size_t>(i)]]));
  out.principal = solver.eigenvectors().col(order[0]).cwiseAbs();
  return out;
}

RitzResult top_spectrum(const Graph& g, int k, SpectralMethod method) {
  const int n = g.node_count();
  bool dense = method == SpectralMethod::dense || (method == SpectralMethod::automatic && n <= 512);
  return dense ? dense_topk(g, k) : lanczos_converged(g, k);
}

}  // namespace

std::vector<double> top_singular_values(const Graph& g, int k, SpectralMethod method) {
  if (k < 1) throw std::domain_error("k must be >= 1");
  const int n = g.node_count();
  if (n == 0) return {};
  if (g.edge_count() == 0) return std::vector<double>(static_cast<std::size_t>(std::min(k, n)), 0.0);
  return top_spectrum(g, k, method).values;
}

std::vector<double> principal_singular_vector_abs(const Graph& g, SpectralMethod method) {
  if (g.edge_count() == 0) throw std::domain_error("singular vector needs at least one edge");
  Eigen::VectorXd p = top_spectrum(g, 1, method).principal;
  return std::vector<double>(p.data(), p.data() + p.size());
}

std::vector<double> pagerank(const Graph& g, double damping, double tol, int max_iter) {
  const int n = g.node_count();
  if (n == 0) return {};
  std::vector<double> rank(static_cast<std::size_t>(n), 1.0 / n);
  std::vector<double> next(static_cast<std::size_t>(n));
  for (int iter = 0; iter < max_iter; ++iter) {
    double dangling = 0.0;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == 0) dangling += rank[static_cast<std::size_t>(v)];
    double base = (1.0 - damping) / n + damping * dangling / n;
    std::fill(next.begin(), next.end(), base);
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) == 0) continue;
      double share = damping * rank[static_cast<std::size_t>(v)] / g.degree(v);
      for (int w : g.neighbors(v)) next[static_cast<std::size_t>(w)] += share;
    }
    double change = 0.0;
    for (int v = 0; v < n; ++v) change += std::abs(next[static_cast<std::size_t>(v)] - rank[static_cast<std::size_t>(v)]);
    rank.swap(next);
    if (change < tol) break;
  }
  return rank;
}

}  // namespace cdsample
