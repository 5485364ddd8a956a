#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "kron/errors.hpp"
#include "kron/generator.hpp"
#include "kron/stats.hpp"

namespace kron {
namespace {

GenerateOptions opts(bool loops = true, unsigned workers = 1) {
  GenerateOptions o;
  o.include_loops = loops;
  o.workers = workers;
  return o;
}

// Independent oracle for pair probabilities: literal digit product.
double oracle_probability(const KroneckerParams& p, std::uint64_t u,
                          std::uint64_t v) {
  double prod = 1.0;
  for (unsigned k = 0; k < p.n(); ++k) {
    const unsigned x = (u >> k) & 1;
    const unsigned y = (v >> k) & 1;
    prod *= x && y ? p.alpha() : (!x && !y ? p.gamma() : p.beta());
  }
  return prod;
}

void expect_well_formed(const SampledGraph& g) {
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    ASSERT_LT(g.edges[i].first, g.edges[i].second);
    ASSERT_LT(g.edges[i].second, g.vertex_count());
    if (i > 0) ASSERT_LT(g.edges[i - 1], g.edges[i]);
  }
  for (std::size_t i = 0; i < g.loops.size(); ++i) {
    ASSERT_LT(g.loops[i], g.vertex_count());
    if (i > 0) ASSERT_LT(g.loops[i - 1], g.loops[i]);
  }
}

TEST(Naive, SinglePairIsBernoulli) {
  const KroneckerParams p(0.6, 0.4, 0.2, 1);
  const int trials = 20000;
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    const SampledGraph g = generate_naive(p, SeedSpec(3).child(t), opts(false));
    EXPECT_TRUE(g.loops.empty());
    ASSERT_LE(g.edges.size(), 1u);
    if (!g.edges.empty()) {
      EXPECT_EQ(g.edges[0], (Edge{0, 1}));
      ++hits;
    }
  }
  const double sigma = std::sqrt(0.4 * 0.6 / trials);
  EXPECT_NEAR(static_cast<double>(hits) / trials, 0.4, 4 * sigma);
}

TEST(Stratified, SinglePairIsBernoulli) {
  const KroneckerParams p(0.6, 0.4, 0.2, 1);
  const int trials = 20000;
  int hits = 0;
  int loops = 0;
  for (int t = 0; t < trials; ++t) {
    const SampledGraph g = generate_stratified(p, SeedSpec(4).child(t), opts());
    hits += static_cast<int>(g.edges.size());
    loops += static_cast<int>(g.loops.size());
  }
  EXPECT_NEAR(static_cast<double>(hits) / trials, 0.4,
              4 * std::sqrt(0.24 / trials));
  // Expected loops per graph: alpha + gamma = 0.8.
  EXPECT_NEAR(static_cast<double>(loops) / trials, 0.8,
              4 * std::sqrt((0.6 * 0.4 + 0.2 * 0.8) / trials));
}

TEST(Naive, UniformMatrixEdgeCountMatchesBinomialGraph) {
  const KroneckerParams p(0.7, 0.7, 0.7, 6);
  const double q = std::pow(0.7, 6);
  const double pairs = 64.0 * 63.0 / 2.0;
  const int trials = 300;
  RunningStats edges;
  for (int t = 0; t < trials; ++t) {
    edges.add(static_cast<double>(
        generate_naive(p, SeedSpec(8).child(t), opts(false)).edges.size()));
  }
  EXPECT_NEAR(edges.mean(), pairs * q, 4 * std::sqrt(pairs * q * (1 - q) / trials));
  EXPECT_NEAR(edges.variance(), pairs * q * (1 - q), 0.25 * pairs * q * (1 - q));
}

TEST(Naive, PerClassInclusionFrequenciesMatchProbabilities) {
  const KroneckerParams p(0.75, 0.45, 0.3, 8);
  const int trials = 200;
  std::map<PairClass, double> hits;
  for (int t = 0; t < trials; ++t) {
    const SampledGraph g = generate_naive(p, SeedSpec(21).child(t), opts());
    for (auto [u, v] : g.edges) hits[pair_class_bits(u, v, 8)] += 1;
    for (Vertex v : g.loops) hits[pair_class_bits(v, v, 8)] += 1;
  }
  // Class sizes and probabilities by brute force.
  std::map<PairClass, std::pair<double, double>> universe;
  for (std::uint64_t u = 0; u < 256; ++u) {
    for (std::uint64_t v = u; v < 256; ++v) {
      auto& [count, prob] = universe[pair_class_bits(u, v, 8)];
      count += 1;
      prob = oracle_probability(p, u, v);
    }
  }
  for (const auto& [cls, cp] : universe) {
    const auto [count, prob] = cp;
    const double n_obs = count * trials;
    const double sigma = std::sqrt(n_obs * prob * (1 - prob));
    EXPECT_LE(std::abs(hits[cls] - n_obs * prob), 3 * sigma + 1e-9)
        << "class " << cls.both_one << "," << cls.mixed << "," << cls.both_zero;
  }
}

TEST(PairClassSpace, CardinalitiesSumToPairCount) {
  for (unsigned n = 1; n <= 20; ++n) {
    const PairClassSpace space(n);
    std::uint64_t pairs = 0;
    std::uint64_t loops = 0;
    for (const PairClass& c : space.classes()) {
      (c.mixed > 0 ? pairs : loops) += space.cardinality(c);
    }
    const std::uint64_t v = std::uint64_t{1} << n;
    EXPECT_EQ(pairs, v / 2 * (v - 1)) << n;
    EXPECT_EQ(loops, v) << n;
  }
}

TEST(PairClassSpace, UnrankIsABijectionOntoEachClass) {
  for (unsigned n = 1; n <= 6; ++n) {
    const PairClassSpace space(n);
    std::set<Edge> seen;
    for (const PairClass& c : space.classes()) {
      for (std::uint64_t r = 0; r < space.cardinality(c); ++r) {
        const Edge e = space.unrank(c, r);
        ASSERT_LE(e.first, e.second);
        ASSERT_EQ(pair_class_bits(e.first, e.second, n), c);
        ASSERT_TRUE(seen.insert(e).second) << "duplicate pair";
      }
    }
    const std::uint64_t v = std::uint64_t{1} << n;
    EXPECT_EQ(seen.size(), v * (v + 1) / 2);
  }
}

TEST(Binomial, ExactAndOverflowChecked) {
  EXPECT_EQ(binomial_u64(10, 3), 120u);
  EXPECT_EQ(binomial_u64(62, 31), 465428353255261088ULL);
  EXPECT_EQ(binomial_u64(5, 7), 0u);
  EXPECT_THROW((void)binomial_u64(70, 35), CapacityError);
}

// Two-sample chi-square over per-class edge counts, combined over classes.
TEST(Stratified, PerClassCountsMatchNaive) {
  for (unsigned n : {4u, 6u}) {
    const KroneckerParams p(0.8, 0.5, 0.35, n);
    const int trials = 500;
    const PairClassSpace space(n);
    std::map<PairClass, std::vector<std::int64_t>> naive;
    std::map<PairClass, std::vector<std::int64_t>> strat;
    for (const PairClass& c : space.classes()) {
      naive[c].assign(trials, 0);
      strat[c].assign(trials, 0);
    }
    for (int t = 0; t < trials; ++t) {
      const SampledGraph a = generate_naive(p, SeedSpec(100).child(t), opts());
      const SampledGraph b =
          generate_stratified(p, SeedSpec(200).child(t), opts());
      for (auto [u, v] : a.edges) ++naive[pair_class_bits(u, v, n)][t];
      for (Vertex v : a.loops) ++naive[pair_class_bits(v, v, n)][t];
      for (auto [u, v] : b.edges) ++strat[pair_class_bits(u, v, n)][t];
      for (Vertex v : b.loops) ++strat[pair_class_bits(v, v, n)][t];
    }
    std::vector<ChiSquareResult> parts;
    for (const PairClass& c : space.classes()) {
      parts.push_back(two_sample_chi_square(naive[c], strat[c]));
    }
    const ChiSquareResult all = combine(parts);
    EXPECT_GT(all.p_value, 0.01) << "n=" << n << " chi2=" << all.statistic
                                 << " dof=" << all.dof;
  }
}

TEST(Generators, DeterministicAndWorkerIndependent) {
  const KroneckerParams p(0.8, 0.5, 0.35, 9);
  const SeedSpec s(77, 5);
  EXPECT_EQ(generate_naive(p, s, opts(true, 1)).edges,
            generate_naive(p, s, opts(true, 4)).edges);
  const SampledGraph s1 = generate_stratified(p, s, opts(true, 1));
  const SampledGraph s4 = generate_stratified(p, s, opts(true, 3));
  EXPECT_EQ(s1.edges, s4.edges);
  EXPECT_EQ(s1.loops, s4.loops);
  const RmatParams r(KroneckerParams(0.45, 0.2, 0.15, 9), 3000);
  EXPECT_EQ(generate_rmat(r, s, 1).edges, generate_rmat(r, s, 4).edges);
  EXPECT_NE(generate_stratified(p, SeedSpec(78, 5), opts()).edges, s1.edges);
}

TEST(Generators, OutputIsASetInRange) {
  const KroneckerParams p(0.9, 0.6, 0.4, 10);
  expect_well_formed(generate_naive(p, SeedSpec(1), opts()));
  expect_well_formed(generate_stratified(p, SeedSpec(1), opts()));
  expect_well_formed(
      generate_rmat(RmatParams(KroneckerParams(0.5, 0.15, 0.2, 10), 5000),
                    SeedSpec(1)));
}

TEST(Generators, LoopsFlagHonoured) {
  const KroneckerParams p(0.9, 0.6, 0.8, 6);
  EXPECT_FALSE(generate_naive(p, SeedSpec(2), opts(true)).loops.empty());
  EXPECT_TRUE(generate_naive(p, SeedSpec(2), opts(false)).loops.empty());
  EXPECT_FALSE(generate_stratified(p, SeedSpec(2), opts(true)).loops.empty());
  EXPECT_TRUE(generate_stratified(p, SeedSpec(2), opts(false)).loops.empty());
}

TEST(Generators, CapacityGuards) {
  const KroneckerParams big(0.5, 0.5, 0.5, 15);
  EXPECT_THROW((void)generate_naive(big, SeedSpec(1), opts()), CapacityError);
  GenerateOptions large = opts();
  large.limits.allow_large = true;
  EXPECT_THROW((void)generate_naive(big.with_digits(21), SeedSpec(1), large),
               CapacityError);
  EXPECT_THROW((void)generate_stratified(big.with_digits(23), SeedSpec(1), opts()),
               CapacityError);
  EXPECT_THROW((void)generate_stratified(big.with_digits(31), SeedSpec(1), large),
               CapacityError);
  GenerateOptions tight = opts();
  tight.limits.max_expected_edges = 10;
  EXPECT_THROW((void)generate_stratified(KroneckerParams(0.9, 0.9, 0.9, 8),
                                         SeedSpec(1), tight),
               CapacityError);
}

TEST(Rmat, RejectsNonStochasticParameters) {
  EXPECT_THROW(RmatParams(KroneckerParams(0.5, 0.3, 0.2, 4), 10),
               ParameterError);
  EXPECT_THROW(RmatParams(KroneckerParams(0.4, 0.2, 0.2, 4), 0),
               ParameterError);
  EXPECT_NO_THROW(RmatParams(KroneckerParams(0.4, 0.2, 0.2, 4), 1));
}

TEST(Rmat, SingleDigitUniformOutcomes) {
  const RmatParams r(KroneckerParams(0.25, 0.25, 0.25, 1), 1);
  const int trials = 40000;
  int edge = 0;
  int loop0 = 0;
  int loop1 = 0;
  for (int t = 0; t < trials; ++t) {
    const SampledGraph g = generate_rmat(r, SeedSpec(6).child(t), 1);
    edge += static_cast<int>(g.edges.size());
    for (Vertex v : g.loops) (v == 0 ? loop0 : loop1)++;
  }
  const double se_half = std::sqrt(0.25 / trials);
  const double se_quarter = std::sqrt(0.1875 / trials);
  EXPECT_NEAR(edge / double(trials), 0.5, 4 * se_half);
  EXPECT_NEAR(loop0 / double(trials), 0.25, 4 * se_quarter);
  EXPECT_NEAR(loop1 / double(trials), 0.25, 4 * se_quarter);
}

TEST(Rmat, DigitFrequencies) {
  const KroneckerParams p(0.45, 0.2, 0.15, 1);
  CounterRng rng(SeedSpec(12));
  const int draws = 100000;
  double counts[2][2] = {{0, 0}, {0, 0}};
  for (int i = 0; i < draws; ++i) {
    const DigitPair d = sample_rmat_digit(p, rng);
    counts[d.u][d.v] += 1;
  }
  const double expect[2][2] = {{0.15, 0.2}, {0.2, 0.45}};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const double q = expect[x][y];
      EXPECT_NEAR(counts[x][y], draws * q, 3 * std::sqrt(draws * q * (1 - q)));
    }
  }
}

TEST(Rmat, DigitsAreIndependent) {
  const unsigned n = 4;
  const RmatParams r(KroneckerParams(0.45, 0.2, 0.15, n), 20000);
  const auto pairs = generate_rmat_pairs(r, SeedSpec(13), 1);
  const double count = static_cast<double>(pairs.size());
  // 2n indicator variables: u digits then v digits.
  std::vector<std::vector<double>> x(2 * n, std::vector<double>(pairs.size()));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (unsigned k = 0; k < n; ++k) {
      x[k][i] = (pairs[i].first >> k) & 1;
      x[n + k][i] = (pairs[i].second >> k) & 1;
    }
  }
  auto mean = [&](const std::vector<double>& v) {
    double s = 0;
    for (double e : v) s += e;
    return s / count;
  };
  for (unsigned a = 0; a < 2 * n; ++a) {
    for (unsigned b = a + 1; b < 2 * n; ++b) {
      if (b == a + n) continue;  // u_k and v_k of the same digit are coupled
      const double ma = mean(x[a]);
      const double mb = mean(x[b]);
      double cov = 0, va = 0, vb = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        cov += (x[a][i] - ma) * (x[b][i] - mb);
        va += (x[a][i] - ma) * (x[a][i] - ma);
        vb += (x[b][i] - mb) * (x[b][i] - mb);
      }
      EXPECT_LT(std::abs(cov / std::sqrt(va * vb)), 4 / std::sqrt(count));
    }
  }
}

TEST(Rmat, CollisionsShrinkTheMergedGraph) {
  const unsigned n = 12;
  const std::uint64_t m = std::uint64_t{1} << n;
  const RmatParams r(KroneckerParams(0.57, 0.19, 0.05, n), m);
  const auto pairs = generate_rmat_pairs(r, SeedSpec(14));
  std::set<Edge> distinct;
  for (auto [u, v] : pairs) distinct.insert({std::min(u, v), std::max(u, v)});
  ASSERT_LT(distinct.size(), m);
  const SampledGraph g = generate_rmat(r, SeedSpec(14));
  EXPECT_EQ(g.edges.size() + g.loops.size(), distinct.size());
  EXPECT_LT(g.edges.size() + g.loops.size(), m);
}

TEST(DegreeHistogram, Examples) {
  SampledGraph g{KroneckerParams(0.5, 0.5, 0.5, 4)};
  EXPECT_EQ(degree_histogram(g, true),
            (std::map<std::uint32_t, std::uint64_t>{{0, 16}}));
  g.edges = {{3, 9}};
  EXPECT_EQ(degree_histogram(g, false),
            (std::map<std::uint32_t, std::uint64_t>{{0, 14}, {1, 2}}));
  g.loops = {3};
  EXPECT_EQ(degree_histogram(g, true),
            (std::map<std::uint32_t, std::uint64_t>{{0, 14}, {1, 1}, {2, 1}}));
}

TEST(DegreeHistogram, HandshakeIdentity) {
  const SampledGraph g = generate_stratified(KroneckerParams(0.9, 0.6, 0.4, 10),
                                             SeedSpec(31), opts());
  std::uint64_t total = 0;
  std::uint64_t vertices = 0;
  for (auto [d, c] : degree_histogram(g, true)) {
    total += d * c;
    vertices += c;
  }
  EXPECT_EQ(vertices, g.vertex_count());
  EXPECT_EQ(total, 2 * g.edges.size() + g.loops.size());
}

}  // namespace
}  // namespace kron
