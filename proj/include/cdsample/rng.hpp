#ifndef CDSAMPLE_RNG_HPP
#define CDSAMPLE_RNG_HPP

#include <cassert>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace cdsample {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Derives a per-stream seed from a master seed. Used everywhere a run or a
/// sub-task (leaf community, repetition, ...) needs an independent generator.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t s = master ^ (stream * 0xd1b54a32d192ed03ull + 0x8bb84b93962eacc9ull);
  return splitmix64(s);
}

/// FNV-1a, used to hash method tags and dataset names into seed streams.
inline std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

/// Deterministic RNG. All draws go through hand-rolled transforms of the raw
/// mt19937_64 stream so that results do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform in [0, 1) with 53 bits of precision.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). n must be positive.
  std::size_t below(std::size_t n) {
    assert(n > 0);
    // rejection sampling to avoid modulo bias
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return static_cast<std::size_t>(x % n);
  }

  /// Number of failures before the first success when each trial succeeds
  /// with probability 1 - p_continue. Mean = p_continue / (1 - p_continue).
  int geometric(double p_continue) {
    assert(p_continue > 0.0 && p_continue < 1.0);
    double u = uniform01();
    if (u <= 0.0) u = 0x1.0p-53;
    return static_cast<int>(std::floor(std::log(u) / std::log(p_continue)));
  }

 private:
  std::mt19937_64 gen_;
};

/// Weighted sampling without replacement by successive renormalized draws,
/// backed by a Fenwick tree over the weights.
class WeightedPicker {
 public:
  explicit WeightedPicker(const std::vector<double>& weights)
      : n_(weights.size()), tree_(weights.size() + 1, 0.0), weight_(weights), remaining_(0) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (weight_[i] < 0.0) throw std::invalid_argument("negative weight");
      if (weight_[i] > 0.0) ++remaining_;
      add(i, weight_[i]);
    }
  }

  std::size_t remaining() const { return remaining_; }
  double total() const { return prefix(n_); }
  bool empty() const { return remaining_ == 0; }

  /// Draws one index with probability proportional to its current weight and
  /// removes it. Caller must check empty() first.
  std::size_t draw(Rng& rng) {
    if (empty()) throw std::logic_error("draw from empty WeightedPicker");
    double t = total();
    std::size_t idx;
    do {
      idx = locate(rng.uniform01() * t);
    } while (weight_[idx] <= 0.0);  // FP edge guard at bucket boundaries
    remove(idx);
    return idx;
  }

  void remove(std::size_t i) {
    if (weight_[i] > 0.0) {
      add(i, -weight_[i]);
      weight_[i] = 0.0;
      --remaining_;
    }
  }

 private:
  void add(std::size_t i, double delta) {
    for (std::size_t j = i + 1; j <= n_; j += j & (~j + 1)) tree_[j] += delta;
  }

  double prefix(std::size_t count) const {
    double s = 0.0;
    for (std::size_t j = count; j > 0; j -= j & (~j + 1)) s += tree_[j];
    return s;
  }

  // largest index whose prefix sum is <= target
  std::size_t locate(double target) const {
    std::size_t pos = 0;
    std::size_t mask = 1;
    while ((mask << 1) <= n_) mask <<= 1;
    for (; mask > 0; mask >>= 1) {
      std::size_t next = pos + mask;
      if (next <= n_ && tree_[next] < target) {
        pos = next;
        target -= tree_[next];
      }
    }
    return pos < n_ ? pos : n_ - 1;
  }

  std::size_t n_;
  std::vector<double> tree_;
  std::vector<double> weight_;
  std::size_t remaining_;
};

}  // namespace cdsample

#endif  // CDSAMPLE_RNG_HPP
