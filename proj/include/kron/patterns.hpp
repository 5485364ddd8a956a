#ifndef KRON_PATTERNS_HPP_
#define KRON_PATTERNS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kron/core_model.hpp"

namespace kron {

// Small simple graph whose copies are counted. Vertices are 0..size-1;
// edges are stored sorted with first < second.
class PatternGraph {
 public:
  static constexpr unsigned kMaxVertices = 12;

  using PatternEdge = std::pair<unsigned, unsigned>;

  PatternGraph() = default;
  // Throws ParameterError on loops, duplicate edges, out-of-range
  // endpoints or more than kMaxVertices vertices.
  PatternGraph(unsigned vertex_count, std::vector<PatternEdge> edges);

  [[nodiscard]] unsigned vertex_count() const noexcept { return vertices_; }
  [[nodiscard]] unsigned edge_count() const noexcept {
    return static_cast<unsigned>(edges_.size());
  }
  [[nodiscard]] const std::vector<PatternEdge>& edges() const noexcept {
    return edges_;
  }
  [[nodiscard]] bool has_edge(unsigned u, unsigned v) const noexcept;
  [[nodiscard]] std::vector<unsigned> degrees() const;
  [[nodiscard]] std::vector<std::vector<unsigned>> adjacency() const;
  [[nodiscard]] bool is_connected() const;
  [[nodiscard]] bool is_tree() const;

  // Vertex i of this graph becomes vertex perm[i].
  [[nodiscard]] PatternGraph relabeled(
      const std::vector<unsigned>& perm) const;

  bool operator==(const PatternGraph&) const = default;

  // Builtins.
  static PatternGraph single_edge();
  static PatternGraph star(unsigned leaves);        // K_{1,k}, center 0
  static PatternGraph path(unsigned edge_count);    // P with k edges
  static PatternGraph cycle(unsigned length);       // C_k, k >= 3
  static PatternGraph complete(unsigned vertices);  // K_m
  // Two k-cycles sharing exactly l consecutive edges: two hubs joined by
  // internally disjoint paths of lengths l, k-l and k-l. Needs
  // 0 < l < k-1; sharing k-1 edges makes the cycles identical.
  static PatternGraph overlapping_cycles(unsigned k, unsigned l);

 private:
  unsigned vertices_ = 0;
  std::vector<PatternEdge> edges_;
};

// Parses either a builtin name (`star:k`, `cycle:k`, `path:k`, `edge`,
// `complete:m`) or the text format: first line `n_vertices`, then one
// `u v` line per edge with 0-based indices, or the one-line form
// `v:u-v,u-v,...`. Throws FormatError (ParameterError for out-of-range
// builtin sizes such as `cycle:2`).
[[nodiscard]] PatternGraph parse_pattern(const std::string& text);

// Canonical name if the pattern is isomorphic to a builtin, otherwise the
// text format on one line (`v:u-v,u-v,...`).
[[nodiscard]] std::string describe_pattern(const PatternGraph& g);

[[nodiscard]] PatternGraph disjoint_union(const PatternGraph& a,
                                          const PatternGraph& b);

// Canonical labelling by individualization/refinement. Two patterns are
// isomorphic iff their canonical forms are equal.
struct CanonicalForm {
  PatternGraph graph;               // canonically relabeled copy
  std::vector<unsigned> labeling;   // input vertex i -> canonical label
};
[[nodiscard]] CanonicalForm canonical_form(const PatternGraph& g);
[[nodiscard]] bool isomorphic(const PatternGraph& a, const PatternGraph& b);

// All pairwise non-isomorphic trees on exactly `vertices` vertices (>= 2).
[[nodiscard]] std::vector<PatternGraph> nonisomorphic_trees(unsigned vertices);

// All pairwise non-isomorphic simple graphs on `vertices` vertices
// (vertices <= 6).
[[nodiscard]] std::vector<PatternGraph> all_graphs(unsigned vertices);

// Limit for labeling enumeration in base_value.
inline constexpr unsigned kMaxBaseValueVertices = 10;

// B_G = sum over g: V(G) -> {0,1} of prod over edges of P[g(u)][g(v)].
// Throws CapacityError above kMaxBaseValueVertices vertices.
[[nodiscard]] double base_value(const KroneckerParams& p,
                                const PatternGraph& g);

// B_G^n, the labeled-copy asymptotic. `log_` variant avoids overflow.
[[nodiscard]] double expected_copies_asymptotic(const KroneckerParams& p,
                                                const PatternGraph& g);
[[nodiscard]] double log_expected_copies_asymptotic(const KroneckerParams& p,
                                                    const PatternGraph& g);

// Exact expected number of labeled copies: sum over injective maps
// V(G) -> Z_2^n of the product of edge probabilities. Throws CapacityError
// if (2^n)^v(G) exceeds 1e8.
[[nodiscard]] double expected_copies_exact(const KroneckerParams& p,
                                           const PatternGraph& g);

// (a+b)^k + (b+g)^k.
[[nodiscard]] double star_base_value(const KroneckerParams& p, unsigned k);
// 2 (a+b)^e; requires alpha == gamma.
[[nodiscard]] double tree_base_value(const KroneckerParams& p, unsigned e);
// (a+b)^k + (a-b)^k; requires alpha == gamma and k >= 3.
[[nodiscard]] double cycle_base_value(const KroneckerParams& p, unsigned k);
// Base value of overlapping_cycles(k, l); requires alpha == gamma and
// 0 < l < k.
[[nodiscard]] double overlap_cycle_base_value(const KroneckerParams& p,
                                              unsigned k, unsigned l);

// Bit i is the label of edge i (in PatternGraph::edges() order).
using EdgeLabeling = std::uint32_t;
// Bit i is the label of vertex i.
using VertexLabeling = std::uint32_t;

// Psi: edge {u,v} gets |g(u) - g(v)|.
[[nodiscard]] EdgeLabeling edge_labeling_of(const PatternGraph& g,
                                            VertexLabeling labels);

// Edge labelings realizable by some vertex labeling, decided by parity
// propagation along a spanning tree. Requires a connected pattern
// (UnsupportedError otherwise) with at most 20 edges (CapacityError).
[[nodiscard]] std::vector<EdgeLabeling> valid_edge_labelings(
    const PatternGraph& g);

// 2 * sum over valid edge labelings of alpha^#zeros beta^#ones. Equals
// base_value for connected patterns when alpha == gamma.
[[nodiscard]] double edge_labeling_base_value(const KroneckerParams& p,
                                              const PatternGraph& g);

// A graph formed by two edge-overlapping, non-identical copies of G.
// first_map[i] / second_map[i] is the image of G's vertex i in `graph`.
struct UnionPattern {
  PatternGraph graph;
  std::vector<unsigned> first_map;
  std::vector<unsigned> second_map;
};

inline constexpr unsigned kMaxUnionSourceVertices = 6;

// The family F_G, one representative per isomorphism class, ordered by
// (edge count, canonical form). Throws CapacityError if v(G) > 6.
[[nodiscard]] std::vector<UnionPattern> enumerate_pair_unions(
    const PatternGraph& g);

enum class CertificateVerdict { kPass, kFail, kBoundary };
[[nodiscard]] std::string to_string(CertificateVerdict verdict);

struct CertificateEntry {
  UnionPattern pattern;
  double base_value = 0.0;  // B_F
  double margin = 0.0;      // B_G^2 - B_F
  CertificateVerdict verdict = CertificateVerdict::kPass;
};

struct CertificateReport {
  PatternGraph pattern;
  double base_value = 0.0;          // B_G
  double squared_base_value = 0.0;  // B_G^2
  std::vector<CertificateEntry> entries;
  CertificateVerdict verdict = CertificateVerdict::kPass;

  [[nodiscard]] bool passed() const noexcept {
    return verdict == CertificateVerdict::kPass;
  }
};

// Margins below this are reported as boundary rather than pass or fail.
inline constexpr double kCertificateBoundary = 1e-9;

// Checks B_F < B_G^2 for every F in F_G.
[[nodiscard]] CertificateReport second_moment_certificate(
    const KroneckerParams& p, const PatternGraph& g);

// Identifies vertex `drop` into `keep`. Returns nullopt when the result is
// not simple with an injective edge map (the vertices are adjacent or share
// a neighbour).
[[nodiscard]] std::optional<PatternGraph> identify_vertices(
    const PatternGraph& h, unsigned keep, unsigned drop);

// True iff phi is a surjective homomorphism from `from` onto `to` whose
// induced edge map is injective.
[[nodiscard]] bool is_edge_injective_surjection(const PatternGraph& from,
                                                const PatternGraph& to,
                                                const std::vector<unsigned>& phi);

}  // namespace kron

#endif  // KRON_PATTERNS_HPP_
