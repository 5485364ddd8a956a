#ifndef KRON_CORE_MODEL_HPP_
#define KRON_CORE_MODEL_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace kron {

// Entries of the symmetric 2x2 initiator matrix
//
//     P = | alpha  beta  |   (row/column index 1)
//         | beta   gamma |   (row/column index 0)
//
// together with the number of digits n. The graph K(n,P) lives on the 2^n
// binary strings of length n; P[1][1] = alpha, P[0][0] = gamma.
class KroneckerParams {
 public:
  static constexpr unsigned kMaxDigits = 64;

  // Throws ParameterError unless 0 < alpha, beta, gamma < 1 and
  // 1 <= n <= kMaxDigits.
  KroneckerParams(double alpha, double beta, double gamma, unsigned n);

  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] double beta() const noexcept { return beta_; }
  [[nodiscard]] double gamma() const noexcept { return gamma_; }
  [[nodiscard]] unsigned n() const noexcept { return n_; }

  [[nodiscard]] double log_alpha() const noexcept { return log_alpha_; }
  [[nodiscard]] double log_beta() const noexcept { return log_beta_; }
  [[nodiscard]] double log_gamma() const noexcept { return log_gamma_; }

  // Matrix entry P[x][y] for digits x, y in {0,1}.
  [[nodiscard]] double entry(unsigned x, unsigned y) const noexcept;

  // Number of vertices, 2^n. Only meaningful for n < 64.
  [[nodiscard]] std::uint64_t vertex_count() const noexcept {
    return std::uint64_t{1} << n_;
  }

  // Same matrix, different digit count.
  [[nodiscard]] KroneckerParams with_digits(unsigned n) const {
    return {alpha_, beta_, gamma_, n};
  }

  bool operator==(const KroneckerParams& other) const noexcept {
    return alpha_ == other.alpha_ && beta_ == other.beta_ &&
           gamma_ == other.gamma_ && n_ == other.n_;
  }

 private:
  double alpha_;
  double beta_;
  double gamma_;
  unsigned n_;
  double log_alpha_;
  double log_beta_;
  double log_gamma_;
};

// A vertex of Z_2^n. Digit k of the binary string is bit k of `bits`
// (least significant bit = first digit).
class VertexId {
 public:
  // Throws DimensionError if n is 0, exceeds 64, or bits has set bits at
  // positions >= n.
  VertexId(std::uint64_t bits, unsigned n);

  [[nodiscard]] std::uint64_t bits() const noexcept { return bits_; }
  [[nodiscard]] unsigned n() const noexcept { return n_; }
  [[nodiscard]] bool digit(unsigned k) const noexcept {
    return ((bits_ >> k) & 1u) != 0;
  }

  auto operator<=>(const VertexId&) const = default;

 private:
  std::uint64_t bits_;
  unsigned n_;
};

// Digit-position counts of a vertex pair: a = both one, b = mixed,
// c = both zero. The edge probability is alpha^a beta^b gamma^c.
struct PairClass {
  unsigned both_one = 0;
  unsigned mixed = 0;
  unsigned both_zero = 0;

  [[nodiscard]] unsigned n() const noexcept {
    return both_one + mixed + both_zero;
  }
  auto operator<=>(const PairClass&) const = default;
};

[[nodiscard]] unsigned weight(VertexId v) noexcept;

// Throws DimensionError on mismatched digit counts.
[[nodiscard]] unsigned hamming(VertexId u, VertexId v);

[[nodiscard]] PairClass pair_class(VertexId u, VertexId v);

// Pair class of raw n-digit words; no validation.
[[nodiscard]] PairClass pair_class_bits(std::uint64_t u, std::uint64_t v,
                                        unsigned n) noexcept;

// alpha^a beta^b gamma^c, evaluated in log space.
[[nodiscard]] double class_probability(const KroneckerParams& p,
                                       PairClass cls) noexcept;
[[nodiscard]] double class_log_probability(const KroneckerParams& p,
                                           PairClass cls) noexcept;

// p_{u,v} = prod_k P[u_k][v_k]. Throws DimensionError unless u.n() and
// v.n() both equal p.n(). For u == v this is the loop probability.
[[nodiscard]] double edge_probability(const KroneckerParams& p, VertexId u,
                                      VertexId v);

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// A realization of K(n,P) (or of R-MAT). `edges` is sorted, duplicate
// free, and every pair satisfies first < second. `loops` is sorted and
// duplicate free. Vertices are stored as raw n-bit words.
struct SampledGraph {
  KroneckerParams params;
  bool include_loops = true;
  std::vector<Edge> edges;
  std::vector<Vertex> loops;

  [[nodiscard]] std::uint64_t vertex_count() const noexcept {
    return params.vertex_count();
  }
};

// Sorts and deduplicates edges and loops, orients every edge as
// (min, max) and moves u == v pairs into `loops`. Throws DimensionError for
// endpoints outside [0, 2^n).
void normalize(SampledGraph& g);

}  // namespace kron

#endif  // KRON_CORE_MODEL_HPP_
