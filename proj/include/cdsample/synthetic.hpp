#ifndef CDSAMPLE_SYNTHETIC_HPP
#define CDSAMPLE_SYNTHETIC_HPP

#include <cstdint>

#include "cdsample/graph.hpp"

namespace cdsample {

/// Barabasi-Albert style preferential attachment: starts from a small seed
/// clique, then each new node attaches to `attachment` distinct existing
/// nodes with probability proportional to their degree. With
/// `triad_probability` > 0 (Holme-Kim variant), each link after the first is
/// made to a neighbor of the previous target with that probability instead,
/// closing a triangle; this gives the clustering and community structure of
/// social graphs while keeping the power-law degree tail.
Graph generate_preferential_attachment(int nodes, int attachment, std::uint64_t seed,
                                       double triad_probability = 0.0);

/// Preferential attachment with accelerating link counts chosen so the graph
/// obeys the densification power law by construction: the t-th node brings
/// about alpha * t^(alpha-1) links, giving e(t) ~ t^alpha. alpha must be in
/// (1, 2). Triad steps as in generate_preferential_attachment.
Graph generate_dpl_attachment(int nodes, double alpha, std::uint64_t seed,
                              double triad_probability = 0.0);

}  // namespace cdsample

#endif  // CDSAMPLE_SYNTHETIC_HPP
