#include "kron/empirical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <string>

#include "kron/errors.hpp"
#include "kron/generator.hpp"

namespace kron {
namespace {

void check_counting_caps(const SampledGraph& g, const PatternGraph& pattern) {
  if (pattern.vertex_count() > kMaxCountedPatternVertices) {
    throw CapacityError("labeled-copy counting supports patterns with at most " +
                        std::to_string(kMaxCountedPatternVertices) +
                        " vertices");
  }
  if (g.params.n() > kMaxCountedHostDigits) {
    throw CapacityError("labeled-copy counting supports hosts with n <= " +
                        std::to_string(kMaxCountedHostDigits));
  }
}

// Falling factorial x (x-1) ... (x-k+1).
std::uint64_t falling(std::uint64_t x, unsigned k) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (x < i) return 0;
    out *= x - i;
  }
  return out;
}

// Backtracking over a pattern without isolated vertices.
std::uint64_t backtrack(const Adjacency& adj, const PatternGraph& pattern) {
  const unsigned v = pattern.vertex_count();
  const auto padj = pattern.adjacency();
  // Order vertices so that each one after a component root is adjacent to
  // an earlier vertex.
  std::vector<unsigned> order;
  std::vector<bool> placed(v, false);
  for (unsigned root = 0; root < v; ++root) {
    if (placed[root]) continue;
    placed[root] = true;
    order.push_back(root);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      for (unsigned w : padj[order[head]]) {
        if (!placed[w]) {
          placed[w] = true;
          order.push_back(w);
        }
      }
    }
  }
  std::vector<int> position(v);
  for (unsigned i = 0; i < v; ++i) position[order[i]] = static_cast<int>(i);
  // For each step: pattern neighbours already placed.
  std::vector<std::vector<unsigned>> back(v);
  for (unsigned i = 0; i < v; ++i) {
    for (unsigned w : padj[order[i]]) {
      if (position[w] < static_cast<int>(i)) {
        back[i].push_back(static_cast<unsigned>(position[w]));
      }
    }
  }

  const auto host_size = static_cast<Vertex>(adj.vertex_count());
  std::vector<Vertex> image(v);
  std::function<std::uint64_t(unsigned)> step = [&](unsigned i) {
    if (i == v) return std::uint64_t{1};
    auto accept = [&](Vertex x) {
      for (unsigned j = 0; j < i; ++j) {
        if (image[j] == x) return false;
      }
      for (std::size_t b = 1; b < back[i].size(); ++b) {
        if (!adj.adjacent(image[back[i][b]], x)) return false;
      }
      return true;
    };
    std::uint64_t total = 0;
    if (back[i].empty()) {
      for (Vertex x = 0; x < host_size; ++x) {
        if (!accept(x)) continue;
        image[i] = x;
        total += step(i + 1);
      }
    } else {
      for (Vertex x : adj.neighbors(image[back[i][0]])) {
        if (!accept(x)) continue;
        image[i] = x;
        total += step(i + 1);
      }
    }
    return total;
  };
  return step(0);
}

std::uint64_t count_without_isolated(const SampledGraph& g,
                                     const PatternGraph& pattern,
                                     bool shortcuts) {
  const auto deg = pattern.degrees();
  std::vector<unsigned> keep_map(pattern.vertex_count(), 0);
  unsigned kept = 0;
  for (unsigned i = 0; i < pattern.vertex_count(); ++i) {
    if (deg[i] > 0) keep_map[i] = kept++;
  }
  const unsigned isolated = pattern.vertex_count() - kept;
  std::vector<PatternGraph::PatternEdge> edges;
  for (auto [x, y] : pattern.edges()) {
    edges.emplace_back(keep_map[x], keep_map[y]);
  }
  const PatternGraph core(kept, std::move(edges));

  const auto core_deg = core.degrees();
  const bool is_star =
      kept >= 2 && core.edge_count() + 1 == kept &&
      *std::max_element(core_deg.begin(), core_deg.end()) == core.edge_count();
  std::uint64_t core_count = 0;
  if (kept == 0) {
    core_count = 1;
  } else if (shortcuts && is_star) {
    core_count = count_star_copies(g, core.edge_count());
  } else if (shortcuts && kept == 3 && core.edge_count() == 3) {
    core_count = count_triangle_copies(g);
  } else {
    core_count = backtrack(Adjacency(g), core);
  }
  return core_count * falling(g.vertex_count() - kept, isolated);
}

}  // namespace

Adjacency::Adjacency(const SampledGraph& g) {
  const std::uint64_t count = g.vertex_count();
  offsets_.assign(count + 1, 0);
  for (auto [u, v] : g.edges) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::uint64_t i = 0; i < count; ++i) offsets_[i + 1] += offsets_[i];
  targets_.resize(offsets_[count]);
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : g.edges) {
    targets_[cursor[u]++] = v;
    targets_[cursor[v]++] = u;
  }
  for (std::uint64_t i = 0; i < count; ++i) {
    std::sort(targets_.begin() + offsets_[i], targets_.begin() + offsets_[i + 1]);
  }
}

bool Adjacency::adjacent(Vertex u, Vertex v) const noexcept {
  const auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::uint64_t count_star_copies(const SampledGraph& g, unsigned leaves) {
  std::uint64_t total = 0;
  for (std::uint32_t d : degrees(g, false)) total += falling(d, leaves);
  return total;
}

std::uint64_t count_triangle_copies(const SampledGraph& g) {
  const Adjacency adj(g);
  std::uint64_t triangles = 0;
  for (auto [u, v] : g.edges) {
    const auto nu = adj.neighbors(u);
    const auto nv = adj.neighbors(v);
    auto a = std::upper_bound(nu.begin(), nu.end(), v);
    auto b = std::upper_bound(nv.begin(), nv.end(), v);
    while (a != nu.end() && b != nv.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++triangles;
        ++a;
        ++b;
      }
    }
  }
  return 6 * triangles;
}

std::uint64_t count_labeled_copies(const SampledGraph& g,
                                   const PatternGraph& pattern) {
  check_counting_caps(g, pattern);
  return count_without_isolated(g, pattern, true);
}

std::uint64_t count_labeled_copies_generic(const SampledGraph& g,
                                           const PatternGraph& pattern) {
  check_counting_caps(g, pattern);
  return count_without_isolated(g, pattern, false);
}

std::vector<std::uint64_t> neighbor_hamming_histogram(const SampledGraph& g,
                                                      Vertex u) {
  const unsigned n = g.params.n();
  if (u >= g.vertex_count()) {
    throw DimensionError("vertex outside the graph");
  }
  std::vector<std::uint64_t> hist(n + 1, 0);
  // Edges are sorted by first endpoint; edges with second == u are found by
  // a scan.
  for (auto [a, b] : g.edges) {
    if (a == u || b == u) ++hist[std::popcount(a ^ b)];
  }
  if (std::binary_search(g.loops.begin(), g.loops.end(), u)) ++hist[0];
  return hist;
}

ConcentrationReport concentration_report(const SampledGraph& g) {
  const KroneckerParams& p = g.params;
  require_symmetric(p, "concentration_report");
  if (!(p.alpha() + p.beta() > 1.0)) {
    throw ParameterError("concentration_report requires alpha + beta > 1");
  }
  const unsigned n = p.n();
  ConcentrationReport r;
  r.predicted_degree = std::pow(p.alpha() + p.beta(), n);
  r.window = hamming_window(p);
  r.predicted_mean_distance = r.window.center;

  const auto deg = degrees(g, true);
  r.min_degree = *std::min_element(deg.begin(), deg.end());
  r.max_degree = *std::max_element(deg.begin(), deg.end());
  double sum = 0.0;
  for (std::uint32_t d : deg) {
    sum += d;
    r.max_relative_deviation =
        std::max(r.max_relative_deviation,
                 std::abs(d - r.predicted_degree) / r.predicted_degree);
  }
  r.mean_degree = sum / static_cast<double>(deg.size());

  r.distance_counts.assign(n + 1, 0);
  for (auto [a, b] : g.edges) r.distance_counts[std::popcount(a ^ b)] += 2;
  r.distance_counts[0] += g.loops.size();
  double weighted = 0.0;
  for (unsigned k = 0; k <= n; ++k) {
    r.endpoints += r.distance_counts[k];
    weighted += static_cast<double>(k) * r.distance_counts[k];
    if (r.window.contains(k)) r.endpoints_in_window += r.distance_counts[k];
  }
  if (r.endpoints > 0) {
    r.in_window_fraction =
        static_cast<double>(r.endpoints_in_window) / r.endpoints;
    r.mean_neighbor_distance = weighted / r.endpoints;
  }
  return r;
}

ExtremalScan extremal_edge_scan(const SampledGraph& g) {
  const KroneckerParams& p = g.params;
  require_symmetric(p, "extremal_edge_scan");
  if (!(p.alpha() + p.beta() > 1.0)) {
    throw ParameterError("extremal_edge_scan requires alpha + beta > 1");
  }
  const CriticalFraction cf = critical_fraction(p);
  if (!cf.c) {
    throw ParameterError(
        "extremal_edge_scan requires min(alpha, beta) < 1/2");
  }
  const unsigned n = p.n();
  ExtremalScan scan;
  scan.critical_fraction = *cf.c;
  scan.threshold = *cf.c * n;
  scan.side = cf.side;
  const double log_n = std::log(static_cast<double>(n));
  const double band = cf.side == CriticalSide::kBelow
                          ? scan.threshold + log_n * log_n
                          : scan.threshold - log_n * log_n;
  scan.band_distance = static_cast<unsigned>(
      std::clamp(std::lround(band), 1L, static_cast<long>(n)));

  for (const Edge& e : g.edges) {
    const auto h = static_cast<unsigned>(std::popcount(e.first ^ e.second));
    if (!scan.min_distance || h < *scan.min_distance) scan.min_distance = h;
    if (!scan.max_distance || h > *scan.max_distance) scan.max_distance = h;
    const bool beyond = cf.side == CriticalSide::kBelow ? h < scan.threshold
                                                        : h > scan.threshold;
    if (beyond) scan.offending.push_back(e);
    if (h == scan.band_distance) ++scan.band_edges;
  }
  return scan;
}

}  // namespace kron
