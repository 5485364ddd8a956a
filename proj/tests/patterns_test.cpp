#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "kron/errors.hpp"
#include "kron/patterns.hpp"

namespace kron {
namespace {

// Test-side enumeration over all 2^v vertex labelings.
double oracle_base(double a, double b, double g, const PatternGraph& G) {
  const double m[2][2] = {{g, b}, {b, a}};
  double total = 0.0;
  for (unsigned mask = 0; mask < (1u << G.vertex_count()); ++mask) {
    double prod = 1.0;
    for (auto [u, v] : G.edges()) prod *= m[(mask >> u) & 1][(mask >> v) & 1];
    total += prod;
  }
  return total;
}

// Edge set as sorted pairs, for brute-force isomorphism.
using EdgeSet = std::set<std::pair<unsigned, unsigned>>;
EdgeSet edge_set(const PatternGraph& G, const std::vector<unsigned>& perm) {
  EdgeSet out;
  for (auto [u, v] : G.edges()) {
    out.insert({std::min(perm[u], perm[v]), std::max(perm[u], perm[v])});
  }
  return out;
}

// Minimum edge set over all vertex permutations.
EdgeSet brute_canonical(const PatternGraph& G) {
  std::vector<unsigned> perm(G.vertex_count());
  std::iota(perm.begin(), perm.end(), 0u);
  EdgeSet best = edge_set(G, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    best = std::min(best, edge_set(G, perm));
  }
  return best;
}

const double kGrid[][3] = {{0.5, 0.3, 0.2}, {0.9, 0.4, 0.1}, {0.35, 0.8, 0.6},
                           {0.6, 0.6, 0.6}, {0.15, 0.45, 0.95}};
const double kSymGrid[][2] = {{0.4, 0.3}, {0.7, 0.5}, {0.3, 0.8}, {0.9, 0.2},
                              {0.55, 0.55}};

TEST(PatternGraph, ValidatesInput) {
  EXPECT_THROW(PatternGraph(3, {{0, 0}}), ParameterError);
  EXPECT_THROW(PatternGraph(3, {{0, 1}, {1, 0}}), ParameterError);
  EXPECT_THROW(PatternGraph(3, {{0, 3}}), ParameterError);
  EXPECT_THROW(PatternGraph(13, {}), ParameterError);
  const PatternGraph g(3, {{2, 0}, {1, 2}});
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.is_tree());
  EXPECT_FALSE(PatternGraph(4, {{0, 1}, {2, 3}}).is_connected());
}

TEST(ParsePattern, BuiltinsAndText) {
  EXPECT_TRUE(isomorphic(parse_pattern("star:3"), PatternGraph::star(3)));
  EXPECT_EQ(parse_pattern("cycle:5").edge_count(), 5u);
  EXPECT_EQ(parse_pattern("path:4").vertex_count(), 5u);
  EXPECT_EQ(parse_pattern("edge").edge_count(), 1u);
  EXPECT_EQ(parse_pattern("complete:4").edge_count(), 6u);
  const PatternGraph t = parse_pattern("4\n0 1\n1 2\n2 3\n3 0\n");
  EXPECT_TRUE(isomorphic(t, PatternGraph::cycle(4)));
  EXPECT_THROW((void)parse_pattern(""), FormatError);
  EXPECT_THROW((void)parse_pattern("wheel:5"), FormatError);
  EXPECT_THROW((void)parse_pattern("3\n0 1\n1"), FormatError);
  EXPECT_THROW((void)parse_pattern("3\n0 5\n"), FormatError);
  EXPECT_THROW((void)parse_pattern("3\n0 x\n"), FormatError);
}

TEST(ParsePattern, DescribeRoundTrips) {
  const PatternGraph odd(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
  EXPECT_TRUE(isomorphic(parse_pattern(describe_pattern(odd)), odd));
  EXPECT_EQ(describe_pattern(PatternGraph::cycle(6)), "cycle:6");
  EXPECT_EQ(describe_pattern(PatternGraph::star(4)), "star:4");
  EXPECT_EQ(describe_pattern(PatternGraph::path(3)), "path:3");
  EXPECT_EQ(describe_pattern(PatternGraph::single_edge()), "edge");
}

TEST(Canonical, CountsOfNonIsomorphicGraphs) {
  // OEIS A000088 and A000055.
  EXPECT_EQ(all_graphs(3).size(), 4u);
  EXPECT_EQ(all_graphs(4).size(), 11u);
  EXPECT_EQ(all_graphs(5).size(), 34u);
  EXPECT_EQ(all_graphs(6).size(), 156u);
  const unsigned trees[] = {1, 1, 2, 3, 6, 11, 23};
  for (unsigned v = 2; v <= 8; ++v) {
    EXPECT_EQ(nonisomorphic_trees(v).size(), trees[v - 2]) << v;
  }
}

TEST(Canonical, AgreesWithBruteForceIsomorphism) {
  const auto graphs = all_graphs(5);
  std::mt19937 rng(4);
  for (const auto& g : graphs) {
    std::vector<unsigned> perm(5);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    const PatternGraph h = g.relabeled(perm);
    EXPECT_EQ(canonical_form(g).graph, canonical_form(h).graph);
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      EXPECT_NE(brute_canonical(graphs[i]), brute_canonical(graphs[j]));
      EXPECT_FALSE(isomorphic(graphs[i], graphs[j]));
    }
  }
}

TEST(BaseValue, Examples) {
  const KroneckerParams p(0.5, 0.3, 0.2, 4);
  EXPECT_NEAR(base_value(p, PatternGraph::single_edge()), 0.5 + 0.6 + 0.2, 1e-15);
  EXPECT_NEAR(base_value(p, PatternGraph::star(3)), 0.637, 1e-12);
  const KroneckerParams s(0.4, 0.3, 0.4, 3);
  EXPECT_NEAR(base_value(s, PatternGraph::cycle(3)), 0.344, 1e-12);
  EXPECT_THROW((void)base_value(p, PatternGraph(11, {{0, 1}})), CapacityError);
}

TEST(BaseValue, MatchesOracleAndSymmetries) {
  std::mt19937 rng(9);
  for (const auto& abc : kGrid) {
    const KroneckerParams p(abc[0], abc[1], abc[2], 5);
    const KroneckerParams flipped(abc[2], abc[1], abc[0], 5);
    for (const auto& g : all_graphs(5)) {
      const double b = base_value(p, g);
      EXPECT_NEAR(b, oracle_base(abc[0], abc[1], abc[2], g), 1e-12);
      EXPECT_NEAR(b, base_value(flipped, g), 1e-12);
      std::vector<unsigned> perm(5);
      std::iota(perm.begin(), perm.end(), 0u);
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_NEAR(b, base_value(p, g.relabeled(perm)), 1e-12);
    }
    const PatternGraph c3 = PatternGraph::cycle(3);
    const PatternGraph s2 = PatternGraph::star(2);
    EXPECT_NEAR(base_value(p, disjoint_union(c3, s2)),
                base_value(p, c3) * base_value(p, s2), 1e-12);
  }
}

TEST(ExpectedCopies, Asymptotic) {
  const KroneckerParams q(0.3, 0.3, 0.3, 6);
  EXPECT_NEAR(expected_copies_asymptotic(q, PatternGraph::single_edge()),
              std::pow(1.2, 6), 1e-12);
  const KroneckerParams one(0.8, 0.35, 0.25, 1);
  EXPECT_NEAR(expected_copies_asymptotic(one, PatternGraph::cycle(4)),
              base_value(one, PatternGraph::cycle(4)), 1e-14);
  const KroneckerParams s(0.4, 0.3, 0.4, 3);
  EXPECT_NEAR(expected_copies_asymptotic(s, PatternGraph::cycle(3)),
              std::pow(0.344, 3), 1e-14);
  EXPECT_NEAR(log_expected_copies_asymptotic(s, PatternGraph::cycle(3)),
              3 * std::log(0.344), 1e-12);
}

double pair_prob(const KroneckerParams& p, unsigned u, unsigned v) {
  double prod = 1.0;
  for (unsigned k = 0; k < p.n(); ++k) {
    prod *= p.entry((u >> k) & 1, (v >> k) & 1);
  }
  return prod;
}

TEST(ExpectedCopies, ExactMatchesNestedLoops) {
  const KroneckerParams p(0.8, 0.45, 0.3, 3);
  EXPECT_NEAR(expected_copies_exact(p.with_digits(1), PatternGraph::single_edge()),
              2 * 0.45, 1e-15);
  // Path with 2 edges: center c, ends x, y.
  double want = 0.0;
  for (unsigned c = 0; c < 8; ++c) {
    for (unsigned x = 0; x < 8; ++x) {
      for (unsigned y = 0; y < 8; ++y) {
        if (x == c || y == c || x == y) continue;
        want += pair_prob(p, c, x) * pair_prob(p, c, y);
      }
    }
  }
  EXPECT_NEAR(expected_copies_exact(p, PatternGraph::star(2)), want, 1e-12);
  EXPECT_THROW((void)expected_copies_exact(p.with_digits(10), PatternGraph::cycle(3)),
               CapacityError);
}

TEST(ExpectedCopies, ExactBelowAsymptoticAndRatioIncreases) {
  const KroneckerParams p(0.75, 0.5, 0.4, 2);
  const PatternGraph path = PatternGraph::path(2);
  double prev = 0.0;
  for (unsigned n = 2; n <= 6; ++n) {
    const double exact = expected_copies_exact(p.with_digits(n), path);
    const double asym = expected_copies_asymptotic(p.with_digits(n), path);
    EXPECT_LT(exact, asym);
    EXPECT_GT(exact / asym, prev) << n;
    prev = exact / asym;
  }
}

TEST(ClosedForms, StarsMatchEnumeration) {
  for (const auto& abc : kGrid) {
    const KroneckerParams p(abc[0], abc[1], abc[2], 4);
    EXPECT_NEAR(star_base_value(p, 1), base_value(p, PatternGraph::single_edge()),
                1e-15);
    for (unsigned k = 1; k <= 8; ++k) {
      EXPECT_NEAR(star_base_value(p, k),
                  oracle_base(abc[0], abc[1], abc[2], PatternGraph::star(k)), 1e-12);
    }
  }
}

TEST(ClosedForms, TreesMatchEnumeration) {
  for (const auto& ab : kSymGrid) {
    const KroneckerParams p(ab[0], ab[1], ab[0], 4);
    EXPECT_NEAR(tree_base_value(p, 1), base_value(p, PatternGraph::single_edge()),
                1e-15);
    EXPECT_NEAR(base_value(p, PatternGraph::path(2)),
                base_value(p, PatternGraph::star(2)), 1e-15);
    for (unsigned v = 2; v <= 6; ++v) {
      for (const auto& t : nonisomorphic_trees(v)) {
        EXPECT_NEAR(tree_base_value(p, t.edge_count()),
                    oracle_base(ab[0], ab[1], ab[0], t), 1e-12);
      }
    }
  }
  EXPECT_THROW((void)tree_base_value(KroneckerParams(0.5, 0.3, 0.2, 3), 2),
               ParameterError);
}

TEST(ClosedForms, CyclesMatchEnumeration) {
  for (const auto& ab : kSymGrid) {
    const KroneckerParams p(ab[0], ab[1], ab[0], 4);
    for (unsigned k = 3; k <= 8; ++k) {
      EXPECT_NEAR(cycle_base_value(p, k),
                  oracle_base(ab[0], ab[1], ab[0], PatternGraph::cycle(k)), 1e-12);
    }
  }
  const KroneckerParams eq(0.4, 0.4, 0.4, 3);
  EXPECT_NEAR(cycle_base_value(eq, 5), std::pow(0.8, 5), 1e-15);
  const KroneckerParams wide(0.3, 0.6, 0.3, 3);
  EXPECT_LT(cycle_base_value(wide, 5), std::pow(0.9, 5));
  EXPECT_THROW((void)cycle_base_value(KroneckerParams(0.5, 0.3, 0.2, 3), 4),
               ParameterError);
  EXPECT_THROW((void)cycle_base_value(eq, 2), ParameterError);
}

TEST(ClosedForms, OverlappingCyclesMatchEnumeration) {
  for (const auto& ab : kSymGrid) {
    const double a = ab[0];
    const double b = ab[1];
    const KroneckerParams p(a, b, a, 4);
    for (unsigned k = 3; k <= 6; ++k) {
      for (unsigned l = 1; l + 1 < k; ++l) {
        const PatternGraph f = PatternGraph::overlapping_cycles(k, l);
        EXPECT_EQ(f.edge_count(), 2 * k - l);
        EXPECT_NEAR(overlap_cycle_base_value(p, k, l), oracle_base(a, b, a, f),
                    1e-12)
            << k << "," << l;
      }
    }
  }
  const KroneckerParams eq(0.45, 0.45, 0.45, 3);
  EXPECT_NEAR(overlap_cycle_base_value(eq, 5, 2), 0.5 * std::pow(0.9, 8), 1e-15);
  EXPECT_THROW((void)overlap_cycle_base_value(eq, 4, 4), ParameterError);
  EXPECT_THROW((void)PatternGraph::overlapping_cycles(4, 3), ParameterError);
}

TEST(ClosedForms, OverlapBelowSquaredCycleAboveThreshold) {
  for (double a = 0.1; a < 0.95; a += 0.1) {
    for (double b = 0.1; b < 0.95; b += 0.1) {
      const KroneckerParams p(a, b, a, 4);
      for (unsigned k = 3; k <= 6; ++k) {
        const double bc = cycle_base_value(p, k);
        if (bc <= 1.0) continue;
        for (unsigned l = 1; l < k; ++l) {
          EXPECT_LT(overlap_cycle_base_value(p, k, l), bc * bc);
        }
      }
    }
  }
}

// Realizable edge labelings straight from all vertex labelings.
std::set<EdgeLabeling> oracle_valid(const PatternGraph& g) {
  std::set<EdgeLabeling> out;
  for (VertexLabeling m = 0; m < (1u << g.vertex_count()); ++m) {
    out.insert(edge_labeling_of(g, m));
  }
  return out;
}

TEST(EdgeLabelings, CycleParityAndTrees) {
  const auto c3 = valid_edge_labelings(PatternGraph::cycle(3));
  EXPECT_EQ(c3.size(), 4u);
  for (EdgeLabeling l : c3) EXPECT_EQ(std::popcount(l) % 2, 0);
  for (unsigned v = 2; v <= 6; ++v) {
    for (const auto& t : nonisomorphic_trees(v)) {
      EXPECT_EQ(valid_edge_labelings(t).size(), 1u << t.edge_count());
    }
  }
  EXPECT_THROW((void)valid_edge_labelings(PatternGraph(4, {{0, 1}, {2, 3}})),
               UnsupportedError);
}

TEST(EdgeLabelings, MatchOracleAndTwoPreimages) {
  for (const auto& g : all_graphs(5)) {
    if (!g.is_connected()) continue;
    const auto got = valid_edge_labelings(g);
    const std::set<EdgeLabeling> want = oracle_valid(g);
    EXPECT_EQ(std::set<EdgeLabeling>(got.begin(), got.end()), want);
    EXPECT_EQ(want.size() * 2, 1u << g.vertex_count());
  }
}

TEST(EdgeLabelings, BaseValueIdentity) {
  for (const auto& ab : kSymGrid) {
    const KroneckerParams p(ab[0], ab[1], ab[0], 4);
    for (unsigned k = 3; k <= 6; ++k) {
      EXPECT_NEAR(edge_labeling_base_value(p, PatternGraph::cycle(k)),
                  base_value(p, PatternGraph::cycle(k)), 1e-12);
    }
    for (unsigned v = 2; v <= 6; ++v) {
      for (const auto& t : nonisomorphic_trees(v)) {
        EXPECT_NEAR(edge_labeling_base_value(p, t), base_value(p, t), 1e-12);
      }
    }
  }
}

// F_G by brute force: every second copy placed on 2v vertices, deduplicated
// with brute_canonical.
std::set<std::pair<unsigned, EdgeSet>> oracle_unions(const PatternGraph& g) {
  const unsigned v = g.vertex_count();
  const unsigned total = 2 * v;
  std::set<std::pair<unsigned, EdgeSet>> out;
  std::vector<unsigned> image(v, 0);
  std::vector<unsigned> id(v);
  std::iota(id.begin(), id.end(), 0u);
  const EdgeSet first = edge_set(g, id);
  // Enumerate all injective maps into 0..2v-1.
  std::vector<unsigned> choice(v, 0);
  for (;;) {
    std::set<unsigned> used(choice.begin(), choice.end());
    if (used.size() == v) {
      const EdgeSet second = edge_set(g, choice);
      std::vector<std::pair<unsigned, unsigned>> shared;
      std::set_intersection(first.begin(), first.end(), second.begin(),
                            second.end(), std::back_inserter(shared));
      if (!shared.empty() && second != first) {
        EdgeSet all = first;
        all.insert(second.begin(), second.end());
        std::set<unsigned> verts(id.begin(), id.end());
        verts.insert(choice.begin(), choice.end());
        // Compact the vertex labels.
        std::vector<unsigned> relabel(total, 0);
        unsigned next = 0;
        for (unsigned x : verts) relabel[x] = next++;
        std::vector<PatternGraph::PatternEdge> edges;
        for (auto [a, b] : all) edges.emplace_back(relabel[a], relabel[b]);
        const PatternGraph f(next, edges);
        out.insert({next, brute_canonical(f)});
      }
    }
    unsigned i = 0;
    while (i < v && ++choice[i] == total) choice[i++] = 0;
    if (i == v) break;
  }
  return out;
}

TEST(PairUnions, EdgeHasNone) {
  EXPECT_TRUE(enumerate_pair_unions(PatternGraph::single_edge()).empty());
}

TEST(PairUnions, MatchBruteForceFamily) {
  const PatternGraph cases[] = {PatternGraph::star(2), PatternGraph::path(3),
                                PatternGraph::star(3), PatternGraph::cycle(3),
                                PatternGraph::cycle(4)};
  for (const auto& g : cases) {
    const auto unions = enumerate_pair_unions(g);
    std::set<std::pair<unsigned, EdgeSet>> got;
    for (const auto& u : unions) {
      EXPECT_GT(u.graph.edge_count(), g.edge_count());
      EXPECT_LT(u.graph.edge_count(), 2 * g.edge_count());
      EXPECT_TRUE(got.insert({u.graph.vertex_count(), brute_canonical(u.graph)})
                      .second)
          << "isomorphic duplicate";
      // Both maps must embed G.
      for (const auto* map : {&u.first_map, &u.second_map}) {
        for (auto [a, b] : g.edges()) {
          EXPECT_TRUE(u.graph.has_edge((*map)[a], (*map)[b]));
        }
      }
    }
    EXPECT_EQ(got, oracle_unions(g)) << describe_pattern(g);
  }
}

TEST(PairUnions, StarOfTwoContainsExpectedShapes) {
  const auto unions = enumerate_pair_unions(PatternGraph::star(2));
  auto contains = [&](const PatternGraph& h) {
    return std::any_of(unions.begin(), unions.end(), [&](const UnionPattern& u) {
      return isomorphic(u.graph, h);
    });
  };
  EXPECT_TRUE(contains(PatternGraph::star(3)));
  EXPECT_TRUE(contains(PatternGraph::path(3)));
  EXPECT_TRUE(contains(PatternGraph::cycle(3)));
}

TEST(Certificate, StarsAndCyclesAboveThresholdPass) {
  for (double a = 0.15; a < 0.96; a += 0.2) {
    for (double b = 0.15; b < 0.96; b += 0.2) {
      for (double g = 0.15; g < 0.96; g += 0.2) {
        const KroneckerParams p(a, b, g, 8);
        for (unsigned k = 1; k <= 4; ++k) {
          if (star_base_value(p, k) <= 1.0) continue;
          const auto cert = second_moment_certificate(p, PatternGraph::star(k));
          EXPECT_TRUE(cert.passed()) << a << " " << b << " " << g << " k=" << k;
        }
      }
      const KroneckerParams s(a, b, a, 8);
      for (unsigned k = 3; k <= 5; ++k) {
        if (cycle_base_value(s, k) <= 1.0) continue;
        const auto cert = second_moment_certificate(s, PatternGraph::cycle(k));
        EXPECT_TRUE(cert.passed()) << a << " " << b << " k=" << k;
      }
    }
  }
}

TEST(Certificate, FailsBelowThresholdAndReportsEntries) {
  const KroneckerParams p(0.3, 0.3, 0.3, 8);
  const auto cert = second_moment_certificate(p, PatternGraph::cycle(4));
  EXPECT_FALSE(cert.passed());
  EXPECT_EQ(cert.verdict, CertificateVerdict::kFail);
  EXPECT_FALSE(cert.entries.empty());
  for (const auto& e : cert.entries) {
    EXPECT_NEAR(e.margin, cert.squared_base_value - e.base_value, 1e-15);
  }
}

TEST(Monotonicity, IdentifyingVerticesNeverRaisesBaseValue) {
  for (const auto& abc : kGrid) {
    const KroneckerParams p(abc[0], abc[1], abc[2], 4);
    for (const auto& h : all_graphs(6)) {
      const double bh = base_value(p, h);
      for (unsigned x = 0; x < 6; ++x) {
        for (unsigned y = x + 1; y < 6; ++y) {
          const auto merged = identify_vertices(h, x, y);
          if (!merged) continue;
          EXPECT_LE(base_value(p, *merged), bh + 1e-12);
        }
      }
    }
  }
}

TEST(Monotonicity, IdentifyVerticesRules) {
  const PatternGraph p3 = PatternGraph::path(3);  // 0-1-2-3
  EXPECT_FALSE(identify_vertices(p3, 0, 1).has_value());  // adjacent
  EXPECT_FALSE(identify_vertices(p3, 0, 2).has_value());  // shared neighbour
  const auto c = identify_vertices(p3, 0, 3);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(isomorphic(*c, PatternGraph::cycle(3)));
  std::vector<unsigned> phi = {0, 1, 2, 0};
  EXPECT_TRUE(is_edge_injective_surjection(p3, PatternGraph::cycle(3), phi));
  phi = {0, 1, 0, 1};
  EXPECT_FALSE(is_edge_injective_surjection(p3, PatternGraph::single_edge(), phi));
}

}  // namespace
}  // namespace kron
