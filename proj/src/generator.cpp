#include "kron/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <unordered_set>

#include "kron/errors.hpp"
#include "kron/parallel.hpp"

namespace kron {
namespace {

constexpr unsigned kHardMaxDigitsNaive = 20;
constexpr unsigned kHardMaxDigitsStratified = 30;
constexpr unsigned kMaxDigitsRmat = 32;
constexpr std::uint64_t kRmatBlock = 4096;

// Substream tags keep the three generators' streams disjoint even when a
// caller reuses a SeedSpec.
constexpr std::uint64_t kNaiveTag = 0x6e61697665;
constexpr std::uint64_t kStratifiedTag = 0x7374726174;
constexpr std::uint64_t kRmatTag = 0x726d6174;

unsigned effective_limit(unsigned configured, unsigned hard, bool allow) {
  return allow ? hard : std::min(configured, hard);
}

// Probability table indexed by [a][c]; mixed = n - a - c.
std::vector<double> class_table(const KroneckerParams& p) {
  const unsigned n = p.n();
  std::vector<double> table((n + 1) * (n + 1), 0.0);
  for (unsigned a = 0; a <= n; ++a) {
    for (unsigned c = 0; a + c <= n; ++c) {
      table[a * (n + 1) + c] =
          class_probability(p, PairClass{a, n - a - c, c});
    }
  }
  return table;
}

// Lexicographic unranking of a k-subset of positions in `pool`.
std::uint64_t unrank_subset(const std::vector<unsigned>& pool, unsigned k,
                            std::uint64_t rank,
                            std::vector<unsigned>& rest) {
  std::uint64_t mask = 0;
  rest.clear();
  const auto size = static_cast<unsigned>(pool.size());
  for (unsigned i = 0; i < size; ++i) {
    if (k == 0) {
      rest.push_back(pool[i]);
      continue;
    }
    const std::uint64_t with_i = binomial_u64(size - i - 1, k - 1);
    if (rank < with_i) {
      mask |= std::uint64_t{1} << pool[i];
      --k;
    } else {
      rank -= with_i;
      rest.push_back(pool[i]);
    }
  }
  return mask;
}

// k distinct values from [0, range) by Floyd's algorithm, sorted.
std::vector<std::uint64_t> sample_distinct(std::uint64_t range,
                                           std::uint64_t k, CounterRng& rng) {
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(k);
  for (std::uint64_t j = range - k; j < range; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

void finish(SampledGraph& g, std::vector<std::vector<Edge>>& edge_parts,
            std::vector<std::vector<Vertex>>& loop_parts) {
  std::size_t edge_total = 0;
  std::size_t loop_total = 0;
  for (const auto& part : edge_parts) edge_total += part.size();
  for (const auto& part : loop_parts) loop_total += part.size();
  g.edges.reserve(edge_total);
  g.loops.reserve(loop_total);
  for (auto& part : edge_parts) {
    g.edges.insert(g.edges.end(), part.begin(), part.end());
  }
  for (auto& part : loop_parts) {
    g.loops.insert(g.loops.end(), part.begin(), part.end());
  }
  std::sort(g.edges.begin(), g.edges.end());
  std::sort(g.loops.begin(), g.loops.end());
}

}  // namespace

std::uint64_t binomial_u64(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw CapacityError("binomial coefficient overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

SampledGraph generate_naive(const KroneckerParams& p, SeedSpec seed,
                            const GenerateOptions& options) {
  const unsigned limit =
      effective_limit(options.limits.max_digits_naive, kHardMaxDigitsNaive,
                      options.limits.allow_large);
  if (p.n() > limit) {
    throw CapacityError("naive generation is limited to n <= " +
                        std::to_string(limit) + " (got n = " +
                        std::to_string(p.n()) +
                        "); use the stratified generator instead");
  }
  const unsigned n = p.n();
  const std::uint64_t count = p.vertex_count();
  const auto table = class_table(p);
  const SeedSpec base = seed.child(kNaiveTag);

  std::vector<std::vector<Edge>> edge_rows(count);
  std::vector<std::vector<Vertex>> loop_rows(count);
  parallel_for(count, options.workers, [&](std::size_t row) {
    const auto u = static_cast<std::uint64_t>(row);
    CounterRng rng(base.child(u));
    auto& out = edge_rows[row];
    if (options.include_loops) {
      const PairClass cls = pair_class_bits(u, u, n);
      if (rng.uniform() < table[cls.both_one * (n + 1) + cls.both_zero]) {
        loop_rows[row].push_back(static_cast<Vertex>(u));
      }
    }
    for (std::uint64_t v = u + 1; v < count; ++v) {
      const PairClass cls = pair_class_bits(u, v, n);
      if (rng.uniform() < table[cls.both_one * (n + 1) + cls.both_zero]) {
        out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  });

  SampledGraph g{p, options.include_loops, {}, {}};
  finish(g, edge_rows, loop_rows);
  return g;
}

PairClassSpace::PairClassSpace(unsigned n) : n_(n) {
  if (n < 1 || n > kHardMaxDigitsStratified + 2) {
    throw CapacityError("pair-class indexing supports 1 <= n <= 32");
  }
  for (unsigned a = 0; a <= n; ++a) {
    for (unsigned c = 0; a + c <= n; ++c) {
      classes_.push_back(PairClass{a, n - a - c, c});
    }
  }
}

std::uint64_t PairClassSpace::cardinality(PairClass cls) const {
  if (cls.n() != n_) throw DimensionError("pair class does not sum to n");
  const std::uint64_t base =
      binomial_u64(n_, cls.both_one) *
      binomial_u64(n_ - cls.both_one, cls.both_zero);
  if (cls.mixed == 0) return base;
  return base << (cls.mixed - 1);
}

Edge PairClassSpace::unrank(PairClass cls, std::uint64_t rank) const {
  if (rank >= cardinality(cls)) {
    throw DimensionError("pair rank outside its class");
  }
  const std::uint64_t patterns =
      cls.mixed == 0 ? 1 : std::uint64_t{1} << (cls.mixed - 1);
  const std::uint64_t pattern = rank % patterns;
  rank /= patterns;
  const std::uint64_t zero_subsets =
      binomial_u64(n_ - cls.both_one, cls.both_zero);
  const std::uint64_t zero_rank = rank % zero_subsets;
  const std::uint64_t one_rank = rank / zero_subsets;

  std::vector<unsigned> all(n_);
  for (unsigned k = 0; k < n_; ++k) all[k] = k;
  std::vector<unsigned> after_ones;
  std::vector<unsigned> mixed_positions;
  const std::uint64_t ones =
      unrank_subset(all, cls.both_one, one_rank, after_ones);
  unrank_subset(after_ones, cls.both_zero, zero_rank, mixed_positions);

  std::uint64_t u = ones;
  std::uint64_t v = ones;
  for (std::size_t j = 0; j < mixed_positions.size(); ++j) {
    const std::uint64_t bit = std::uint64_t{1} << mixed_positions[j];
    const bool u_has_one = j == 0 || ((pattern >> (j - 1)) & 1u) != 0;
    (u_has_one ? u : v) |= bit;
  }
  if (u > v) std::swap(u, v);
  return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

SampledGraph generate_stratified(const KroneckerParams& p, SeedSpec seed,
                                 const GenerateOptions& options) {
  const unsigned limit = effective_limit(
      options.limits.max_digits_stratified, kHardMaxDigitsStratified,
      options.limits.allow_large);
  if (p.n() > limit) {
    throw CapacityError("stratified generation is limited to n <= " +
                        std::to_string(limit) + " (got n = " +
                        std::to_string(p.n()) +
                        "); pass --allow-large to raise the guard");
  }
  const PairClassSpace space(p.n());
  const auto& classes = space.classes();

  double expected_edges = 0.0;
  for (const PairClass& cls : classes) {
    if (cls.mixed == 0 && !options.include_loops) continue;
    expected_edges += static_cast<double>(space.cardinality(cls)) *
                      class_probability(p, cls);
  }
  if (!options.limits.allow_large &&
      expected_edges > options.limits.max_expected_edges) {
    throw CapacityError("expected edge count " +
                        std::to_string(expected_edges) +
                        " exceeds the configured budget");
  }

  const SeedSpec base = seed.child(kStratifiedTag);
  std::vector<std::vector<Edge>> edge_parts(classes.size());
  std::vector<std::vector<Vertex>> loop_parts(classes.size());
  parallel_for(classes.size(), options.workers, [&](std::size_t i) {
    const PairClass cls = classes[i];
    if (cls.mixed == 0 && !options.include_loops) return;
    const std::uint64_t size = space.cardinality(cls);
    CounterRng rng(base.child(i));
    std::binomial_distribution<std::int64_t> draw(
        static_cast<std::int64_t>(size), class_probability(p, cls));
    const auto k = static_cast<std::uint64_t>(draw(rng));
    if (k == 0) return;

    std::vector<std::uint64_t> ranks;
    if (2 * k <= size) {
      ranks = sample_distinct(size, k, rng);
    } else {
      // Dense class: choose the excluded ranks instead.
      const auto excluded = sample_distinct(size, size - k, rng);
      ranks.reserve(k);
      std::size_t e = 0;
      for (std::uint64_t r = 0; r < size; ++r) {
        if (e < excluded.size() && excluded[e] == r) {
          ++e;
        } else {
          ranks.push_back(r);
        }
      }
    }
    for (std::uint64_t r : ranks) {
      const Edge pair = space.unrank(cls, r);
      if (cls.mixed == 0) {
        loop_parts[i].push_back(pair.first);
      } else {
        edge_parts[i].push_back(pair);
      }
    }
  });

  SampledGraph g{p, options.include_loops, {}, {}};
  finish(g, edge_parts, loop_parts);
  return g;
}

RmatParams::RmatParams(KroneckerParams base_params, std::uint64_t pairs)
    : base(base_params), m(pairs) {
  const double total = base.alpha() + 2.0 * base.beta() + base.gamma();
  if (std::abs(total - 1.0) > 1e-12) {
    throw ParameterError("R-MAT requires alpha + 2 beta + gamma = 1, got " +
                         std::to_string(total));
  }
  if (m < 1) throw ParameterError("R-MAT requires m >= 1");
  if (base.n() > kMaxDigitsRmat) {
    throw CapacityError("R-MAT generation supports n <= 32");
  }
}

DigitPair sample_rmat_digit(const KroneckerParams& p,
                            CounterRng& rng) noexcept {
  const double r = rng.uniform();
  if (r < p.alpha()) return {1, 1};
  if (r < p.alpha() + p.beta()) return {1, 0};
  if (r < p.alpha() + 2.0 * p.beta()) return {0, 1};
  return {0, 0};
}

std::vector<Edge> generate_rmat_pairs(const RmatParams& r, SeedSpec seed,
                                      unsigned workers) {
  const unsigned n = r.base.n();
  const std::uint64_t blocks = (r.m + kRmatBlock - 1) / kRmatBlock;
  const SeedSpec base = seed.child(kRmatTag);
  std::vector<Edge> pairs(r.m);
  parallel_for(blocks, workers, [&](std::size_t block) {
    CounterRng rng(base.child(block));
    const std::uint64_t begin = block * kRmatBlock;
    const std::uint64_t end = std::min(r.m, begin + kRmatBlock);
    for (std::uint64_t i = begin; i < end; ++i) {
      std::uint64_t u = 0;
      std::uint64_t v = 0;
      for (unsigned k = 0; k < n; ++k) {
        const DigitPair d = sample_rmat_digit(r.base, rng);
        u |= std::uint64_t{d.u} << k;
        v |= std::uint64_t{d.v} << k;
      }
      pairs[i] = {static_cast<Vertex>(u), static_cast<Vertex>(v)};
    }
  });
  return pairs;
}

SampledGraph generate_rmat(const RmatParams& r, SeedSpec seed,
                           unsigned workers) {
  SampledGraph g{r.base, true, generate_rmat_pairs(r, seed, workers), {}};
  normalize(g);
  return g;
}

std::vector<std::uint32_t> degrees(const SampledGraph& g, bool count_loops) {
  std::vector<std::uint32_t> deg(g.vertex_count(), 0);
  for (auto [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  if (count_loops) {
    for (Vertex x : g.loops) ++deg[x];
  }
  return deg;
}

std::map<std::uint32_t, std::uint64_t> degree_histogram(const SampledGraph& g,
                                                        bool count_loops) {
  std::map<std::uint32_t, std::uint64_t> hist;
  for (std::uint32_t d : degrees(g, count_loops)) ++hist[d];
  return hist;
}

}  // namespace kron
