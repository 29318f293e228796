#ifndef CDSAMPLE_METRICS_HPP
#define CDSAMPLE_METRICS_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cdsample/graph.hpp"
#include "cdsample/spectral.hpp"

namespace cdsample {

enum class PropertyKind { degree, sval, svec, cc, hop };

const char* property_name(PropertyKind kind);

/// Discrete probability distribution over real support points, strictly
/// increasing support, masses summing to 1.
struct Distribution {
  PropertyKind kind;
  std::vector<double> support;
  std::vector<double> mass;
  bool degenerate_uniform = false;  // set when a zero-mass curve was replaced
                                    // by uniform-over-support

  std::vector<double> cumulative() const;
};

/// Sorts points, merges duplicate abscissae, normalizes mass to 1.
Distribution make_distribution(PropertyKind kind, std::vector<std::pair<double, double>> weighted_points);

Distribution degree_distribution(const Graph& g);
Distribution singular_value_distribution(const Graph& g, int k = 100,
                                         SpectralMethod method = SpectralMethod::automatic);
Distribution singular_vector_distribution(const Graph& g, SpectralMethod method = SpectralMethod::automatic);

/// Average clustering coefficient per degree (degrees >= 2), normalized to
/// unit mass over the degree support. An all-zero curve becomes uniform over
/// the support with the degenerate flag set.
Distribution cc_distribution(const Graph& g);

/// Local clustering coefficient of one node (0 for degree < 2).
double local_clustering(const Graph& g, int v);

enum class HopMode { exact, sampled };

/// mass(h) = (reachable pairs at exactly hop h) / (all reachable pairs).
/// Exact mode runs BFS from every node; sampled mode from `sources` uniform
/// sources. A graph with no reachable pair degenerates to a point at 0.
Distribution hop_distribution(const Graph& g, HopMode mode = HopMode::exact, int sources = 1000,
                              std::uint64_t seed = 0);

/// Two-sample K-S statistic between step CDFs: max |F(x) - F'(x)| over the
/// union of supports. Both distributions must have the same kind.
double ks_dstat(const Distribution& a, const Distribution& b);

/// (x - min)/(max - min) per column entry; a constant column maps to zeros.
std::vector<double> minmax_normalize(const std::vector<double>& column);

/// Sample standard deviation (n-1 denominator); needs >= 2 values.
double sample_stddev(const std::vector<double>& values);

/// alpha(sample) - alpha(original), signed. Throws std::domain_error when
/// either exponent is undefined.
double dpl_difference(const Graph& original, const Graph& sample);

/// CSV dump `x,mass,cdf` with a `# kind=<tag>` header line.
void write_distribution(std::ostream& out, const Distribution& d);

}  // namespace cdsample

#endif  // CDSAMPLE_METRICS_HPP
