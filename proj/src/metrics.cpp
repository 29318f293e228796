#include "cdsample/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <ostream>

#include "cdsample/budget.hpp"
#include "cdsample/rng.hpp"

namespace cdsample {

const char* property_name(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::degree: return "degree";
    case PropertyKind::sval: return "sval";
    case PropertyKind::svec: return "svec";
    case PropertyKind::cc: return "cc";
    case PropertyKind::hop: return "hop";
  }
  return "?";
}

std::vector<double> Distribution::cumulative() const {
  std::vector<double> cdf(mass.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    acc += mass[i];
    cdf[i] = acc;
  }
  return cdf;
}

Distribution make_distribution(PropertyKind kind, std::vector<std::pair<double, double>> points) {
  std::sort(points.begin(), points.end());
  Distribution d;
  d.kind = kind;
  double total = 0.0;
  for (const auto& [x, w] : points) {
    if (w < 0.0) throw std::invalid_argument("negative mass");
    total += w;
    if (!d.support.empty() && d.support.back() == x)
      d.mass.back() += w;
    else {
      d.support.push_back(x);
      d.mass.push_back(w);
    }
  }
  if (total <= 0.0) throw std::invalid_argument("distribution with zero total mass");
  for (double& w : d.mass) w /= total;
  return d;
}

Distribution degree_distribution(const Graph& g) {
  if (g.node_count() == 0) throw std::domain_error("degree distribution of empty graph");
  std::vector<std::pair<double, double>> points;
  for (int d : g.degree_sequence()) points.emplace_back(static_cast<double>(d), 1.0);
  return make_distribution(PropertyKind::degree, std::move(points));
}

Distribution singular_value_distribution(const Graph& g, int k, SpectralMethod method) {
  auto values = top_singular_values(g, k, method);
  std::vector<std::pair<double, double>> points;
  for (double s : values) points.emplace_back(s, 1.0);
  return make_distribution(PropertyKind::sval, std::move(points));
}

Distribution singular_vector_distribution(const Graph& g, SpectralMethod method) {
  auto components = principal_singular_vector_abs(g, method);
  std::vector<std::pair<double, double>> points;
  for (double c : components) points.emplace_back(c, 1.0);
  return make_distribution(PropertyKind::svec, std::move(points));
}

double local_clustering(const Graph& g, int v) {
  int d = g.degree(v);
  if (d < 2) return 0.0;
  const auto& nbrs = g.neighbors(v);
  long long among = 0;
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (g.has_edge(nbrs[i], nbrs[j])) ++among;
  return static_cast<double>(among) / (static_cast<double>(d) * (d - 1) / 2.0);
}

Distribution cc_distribution(const Graph& g) {
  if (g.node_count() == 0) throw std::domain_error("cc distribution of empty graph");
  const int n = g.node_count();

  // per-node triangle counts via per-edge sorted-neighbor intersections
  std::vector<long long> triangles(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : g.edges()) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j])
        ++i;
      else if (a[i] > b[j])
        ++j;
      else {
        ++triangles[static_cast<std::size_t>(u)];
        ++triangles[static_cast<std::size_t>(v)];
        ++triangles[static_cast<std::size_t>(a[i])];
        ++i;
        ++j;
      }
    }
  }
  // every triangle is found three times (once per edge) at each corner
  for (auto& t : triangles) t /= 3;

  std::vector<double> cc_sum;
  std::vector<long long> count;
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d < 2) continue;
    if (static_cast<std::size_t>(d) >= cc_sum.size()) {
      cc_sum.resize(static_cast<std::size_t>(d) + 1, 0.0);
      count.resize(static_cast<std::size_t>(d) + 1, 0);
    }
    cc_sum[static_cast<std::size_t>(d)] +=
        static_cast<double>(triangles[static_cast<std::size_t>(v)]) / (static_cast<double>(d) * (d - 1) / 2.0);
    ++count[static_cast<std::size_t>(d)];
  }

  std::vector<std::pair<double, double>> points;
  double total = 0.0;
  for (std::size_t d = 2; d < cc_sum.size(); ++d) {
    if (count[d] == 0) continue;
    double avg = cc_sum[d] / static_cast<double>(count[d]);
    points.emplace_back(static_cast<double>(d), avg);
    total += avg;
  }
  Distribution out;
  if (points.empty()) {
    // no node of degree >= 2: degenerate point distribution at 0
    out = make_distribution(PropertyKind::cc, {{0.0, 1.0}});
    out.degenerate_uniform = true;
    return out;
  }
  if (total <= 0.0) {
    for (auto& [x, w] : points) w = 1.0;
    out = make_distribution(PropertyKind::cc, std::move(points));
    out.degenerate_uniform = true;
    return out;
  }
  return make_distribution(PropertyKind::cc, std::move(points));
}

namespace {

// ordered reachable-node counts per hop from one source
void bfs_hop_counts(const Graph& g, int source, std::vector<double>& pairs_at_hop, std::vector<int>& dist,
                    std::vector<int>& frontier, std::vector<int>& next, double weight) {
  std::fill(dist.begin(), dist.end(), -1);
  dist[static_cast<std::size_t>(source)] = 0;
  frontier = {source};
  int hop = 0;
  while (!frontier.empty()) {
    ++hop;
    next.clear();
    for (int u : frontier)
      for (int w : g.neighbors(u))
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = hop;
          next.push_back(w);
        }
    if (!next.empty()) {
      if (static_cast<std::size_t>(hop) >= pairs_at_hop.size()) pairs_at_hop.resize(static_cast<std::size_t>(hop) + 1, 0.0);
      pairs_at_hop[static_cast<std::size_t>(hop)] += weight * static_cast<double>(next.size());
    }
    frontier.swap(next);
  }
}

}  // namespace

Distribution hop_distribution(const Graph& g, HopMode mode, int sources, std::uint64_t seed) {
  if (g.node_count() == 0) throw std::domain_error("hop distribution of empty graph");
  const int n = g.node_count();
  std::vector<double> pairs_at_hop;  // ordered counts, halved at the end
  std::vector<int> dist(static_cast<std::size_t>(n)), frontier, next;

  if (mode == HopMode::exact || sources >= n) {
    for (int v = 0; v < n; ++v) bfs_hop_counts(g, v, pairs_at_hop, dist, frontier, next, 1.0);
  } else {
    Rng rng(mix_seed(seed, 0x40f5u));
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    for (int i = 0; i < sources; ++i) {
      std::size_t j = i + rng.below(static_cast<std::size_t>(n - i));
      std::swap(all[static_cast<std::size_t>(i)], all[j]);
    }
    double scale = static_cast<double>(n) / static_cast<double>(sources);
    for (int i = 0; i < sources; ++i)
      bfs_hop_counts(g, all[static_cast<std::size_t>(i)], pairs_at_hop, dist, frontier, next, scale);
  }

  std::vector<std::pair<double, double>> points;
  for (std::size_t h = 1; h < pairs_at_hop.size(); ++h)
    if (pairs_at_hop[h] > 0.0) points.emplace_back(static_cast<double>(h), pairs_at_hop[h] / 2.0);
  if (points.empty()) {
    Distribution out = make_distribution(PropertyKind::hop, {{0.0, 1.0}});
    out.degenerate_uniform = true;
    return out;
  }
  return make_distribution(PropertyKind::hop, std::move(points));
}

double ks_dstat(const Distribution& a, const Distribution& b) {
  if (a.kind != b.kind) throw std::domain_error("K-S over distributions of different kinds");
  double fa = 0.0, fb = 0.0, d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.support.size() || j < b.support.size()) {
    double x;
    if (j == b.support.size() || (i < a.support.size() && a.support[i] <= b.support[j]))
      x = a.support[i];
    else
      x = b.support[j];
    while (i < a.support.size() && a.support[i] == x) fa += a.mass[i++];
    while (j < b.support.size() && b.support[j] == x) fb += b.mass[j++];
    d = std::max(d, std::abs(fa - fb));
  }
  return std::min(d, 1.0);
}

std::vector<double> minmax_normalize(const std::vector<double>& column) {
  if (column.size() < 2) throw std::domain_error("min-max normalization needs >= 2 values");
  auto [mn, mx] = std::minmax_element(column.begin(), column.end());
  std::vector<double> out(column.size(), 0.0);
  if (*mx > *mn)
    for (std::size_t i = 0; i < column.size(); ++i) out[i] = (column[i] - *mn) / (*mx - *mn);
  return out;
}

double sample_stddev(const std::vector<double>& values) {
  if (values.size() < 2) throw std::domain_error("standard deviation needs >= 2 values");
  double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

double dpl_difference(const Graph& original, const Graph& sample) {
  double a_orig = densification_exponent(original.node_count(), static_cast<long long>(original.edge_count()));
  double a_sample = densification_exponent(sample.node_count(), static_cast<long long>(sample.edge_count()));
  return a_sample - a_orig;
}

void write_distribution(std::ostream& out, const Distribution& d) {
  out << "# kind=" << property_name(d.kind);
  if (d.degenerate_uniform) out << " degenerate=1";
  out << "\n";
  auto cdf = d.cumulative();
  for (std::size_t i = 0; i < d.support.size(); ++i)
    out << d.support[i] << "," << d.mass[i] << "," << cdf[i] << "\n";
}

}  // namespace cdsample
