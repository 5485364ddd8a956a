#ifndef KRON_EMPIRICAL_HPP_
#define KRON_EMPIRICAL_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kron/core_model.hpp"
#include "kron/patterns.hpp"
#include "kron/predict.hpp"

namespace kron {

// Compressed adjacency of a SampledGraph without loops; neighbour lists
// are sorted.
class Adjacency {
 public:
  explicit Adjacency(const SampledGraph& g);

  [[nodiscard]] std::size_t vertex_count() const noexcept {
    return offsets_.size() - 1;
  }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] std::uint32_t degree(Vertex v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const noexcept;

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<Vertex> targets_;
};

inline constexpr unsigned kMaxCountedPatternVertices = 5;
inline constexpr unsigned kMaxCountedHostDigits = 14;

// Number of injective maps V(G) -> V(host) realizing every pattern edge
// (automorphisms not divided out; loops ignored). Stars and triangles use
// closed-form shortcuts, everything else backtracking. Throws
// CapacityError for v(G) > 5 or n > 14.
[[nodiscard]] std::uint64_t count_labeled_copies(const SampledGraph& g,
                                                 const PatternGraph& pattern);

// Plain backtracking, no shortcuts.
[[nodiscard]] std::uint64_t count_labeled_copies_generic(
    const SampledGraph& g, const PatternGraph& pattern);

// sum_v d(v)(d(v)-1)...(d(v)-k+1), loops excluded.
[[nodiscard]] std::uint64_t count_star_copies(const SampledGraph& g,
                                              unsigned leaves);

// 6 x number of triangles.
[[nodiscard]] std::uint64_t count_triangle_copies(const SampledGraph& g);

// Neighbours of u at Hamming distance k, k = 0..n; a loop counts at k = 0.
[[nodiscard]] std::vector<std::uint64_t> neighbor_hamming_histogram(
    const SampledGraph& g, Vertex u);

struct ConcentrationReport {
  double predicted_degree = 0.0;  // (alpha+beta)^n
  std::uint32_t min_degree = 0;
  std::uint32_t max_degree = 0;
  double mean_degree = 0.0;
  // Largest |d(v) - predicted| / predicted over all vertices.
  double max_relative_deviation = 0.0;
  HammingWindow window;
  // Neighbour relations (each edge twice, each loop once) by distance.
  std::vector<std::uint64_t> distance_counts;
  std::uint64_t endpoints = 0;
  std::uint64_t endpoints_in_window = 0;
  double in_window_fraction = 0.0;
  double mean_neighbor_distance = 0.0;
  double predicted_mean_distance = 0.0;  // beta n / (alpha + beta)
};

// Requires alpha == gamma and alpha + beta > 1 (ParameterError).
[[nodiscard]] ConcentrationReport concentration_report(const SampledGraph& g);

struct ExtremalScan {
  double critical_fraction = 0.0;  // c with psi(c) = 1/2
  double threshold = 0.0;          // c n
  CriticalSide side = CriticalSide::kBelow;
  std::optional<unsigned> min_distance;  // over non-loop edges
  std::optional<unsigned> max_distance;
  // Edges with H < c n (side below) or H > c n (side above).
  std::vector<Edge> offending;
  // Converse band: distance round(c n + log^2 n) for side below,
  // round(c n - log^2 n) for side above, clamped to [1, n].
  unsigned band_distance = 0;
  std::uint64_t band_edges = 0;
};

// Loops are not neighbours and are ignored. Requires alpha == gamma,
// alpha + beta > 1 and min(alpha, beta) < 1/2 (ParameterError).
[[nodiscard]] ExtremalScan extremal_edge_scan(const SampledGraph& g);

}  // namespace kron

#endif  // KRON_EMPIRICAL_HPP_
