#ifndef KRON_GENERATOR_HPP_
#define KRON_GENERATOR_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "kron/core_model.hpp"
#include "kron/rng.hpp"

namespace kron {

// Desk-scale guards. The defaults match the CLI; `allow_large` lifts them to
// the hard limits (naive 20 digits, stratified 30 digits).
struct GeneratorLimits {
  unsigned max_digits_naive = 14;
  unsigned max_digits_stratified = 22;
  double max_expected_edges = 5.0e7;
  bool allow_large = false;
};

struct GenerateOptions {
  bool include_loops = true;
  unsigned workers = 0;  // 0 = hardware concurrency
  GeneratorLimits limits{};
};

// Includes each unordered pair {u,v}, u != v, independently with
// probability p_{u,v}, and each loop with p_{v,v} when loops are on.
// Throws CapacityError when n exceeds the naive limit.
[[nodiscard]] SampledGraph generate_naive(const KroneckerParams& p,
                                          SeedSpec seed,
                                          const GenerateOptions& options = {});

// Same distribution as generate_naive. Per pair class (a,b,c) draws a
// binomial edge count and then that many distinct pairs of the class
// uniformly via index unranking.
[[nodiscard]] SampledGraph generate_stratified(
    const KroneckerParams& p, SeedSpec seed,
    const GenerateOptions& options = {});

// Counting and unranking over the unordered pairs of one class. Pairs with
// mixed > 0 are ranked by (positions of both-one digits, positions of
// both-zero digits among the rest, assignment of mixed digits with the
// lowest mixed digit fixed to u = 1). Pairs with mixed == 0 are loops.
class PairClassSpace {
 public:
  explicit PairClassSpace(unsigned n);

  [[nodiscard]] unsigned n() const noexcept { return n_; }

  // All classes with a + b + c = n, ordered by (a, c).
  [[nodiscard]] const std::vector<PairClass>& classes() const noexcept {
    return classes_;
  }

  // Number of unordered pairs in the class (loops when mixed == 0).
  [[nodiscard]] std::uint64_t cardinality(PairClass cls) const;

  // Pair with the given rank, returned as (u, v) with u <= v.
  [[nodiscard]] Edge unrank(PairClass cls, std::uint64_t rank) const;

 private:
  unsigned n_;
  std::vector<PairClass> classes_;
};

// Exact binomial coefficient; throws CapacityError on 64-bit overflow.
[[nodiscard]] std::uint64_t binomial_u64(unsigned n, unsigned k);

// R-MAT parameters. Throws ParameterError unless
// |alpha + 2 beta + gamma - 1| <= 1e-12 and m >= 1.
struct RmatParams {
  RmatParams(KroneckerParams base, std::uint64_t m);

  KroneckerParams base;
  std::uint64_t m;
};

// Digit outcome of one R-MAT draw: (u_k, v_k).
struct DigitPair {
  unsigned u = 0;
  unsigned v = 0;
};

// One digit: (1,1) w.p. alpha, (1,0) and (0,1) w.p. beta each, (0,0)
// w.p. gamma.
[[nodiscard]] DigitPair sample_rmat_digit(const KroneckerParams& p,
                                          CounterRng& rng) noexcept;

// The m ordered pairs of the R-MAT multigraph, before merging.
[[nodiscard]] std::vector<Edge> generate_rmat_pairs(const RmatParams& r,
                                                    SeedSpec seed,
                                                    unsigned workers = 0);

// Merged, symmetrized R-MAT graph. u = v draws are kept in `loops`.
[[nodiscard]] SampledGraph generate_rmat(const RmatParams& r, SeedSpec seed,
                                         unsigned workers = 0);

// Degree of every vertex. With count_loops a loop adds 1 to its vertex.
[[nodiscard]] std::vector<std::uint32_t> degrees(const SampledGraph& g,
                                                 bool count_loops);

// degree -> number of vertices with that degree; counts sum to 2^n.
[[nodiscard]] std::map<std::uint32_t, std::uint64_t> degree_histogram(
    const SampledGraph& g, bool count_loops);

}  // namespace kron

#endif  // KRON_GENERATOR_HPP_
