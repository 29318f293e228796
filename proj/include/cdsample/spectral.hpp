#ifndef CDSAMPLE_SPECTRAL_HPP
#define CDSAMPLE_SPECTRAL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "cdsample/graph.hpp"

namespace cdsample {

enum class SpectralMethod { automatic, lanczos, dense };

class SpectralError : public std::runtime_error {
 public:
  SpectralError(const std::string& msg, double residual)
      : std::runtime_error(msg + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Top min(k, n) singular values of the adjacency matrix (|eigenvalues| of
/// the symmetric adjacency), descending.
std::vector<double> top_singular_values(const Graph& g, int k, SpectralMethod method = SpectralMethod::automatic);

/// Absolute components of the unit left singular vector belonging to the
/// largest singular value. Requires at least one edge.
std::vector<double> principal_singular_vector_abs(const Graph& g, SpectralMethod method = SpectralMethod::automatic);

/// Uniform-teleport PageRank scores; power iteration to an L1 change below
/// tol or max_iter sweeps.
std::vector<double> pagerank(const Graph& g, double damping = 0.85, double tol = 1e-10, int max_iter = 200);

}  // namespace cdsample

#endif  // CDSAMPLE_SPECTRAL_HPP
