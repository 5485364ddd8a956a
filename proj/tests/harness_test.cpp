#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kron/edge_list.hpp"
#include "kron/errors.hpp"
#include "kron/harness.hpp"

namespace kron {
namespace {

ExperimentConfig base_config() {
  ExperimentConfig c;
  c.alpha = 0.7;
  c.beta = 0.4;
  c.gamma = 0.7;
  c.n = 8;
  c.trials = 4;
  c.seed = 123;
  c.workers = 2;
  return c;
}

const AnalyticValue* find_analytic(const ValidationReport& r,
                                   const std::string& name) {
  for (const auto& a : r.analytic) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

TEST(Names, RoundTripAndRejectUnknown) {
  for (auto k : {GeneratorKind::kNaive, GeneratorKind::kStratified,
                 GeneratorKind::kRmat}) {
    EXPECT_EQ(parse_generator_kind(to_string(k)), k);
  }
  for (auto k : {ExperimentKind::kDegrees, ExperimentKind::kSubgraph,
                 ExperimentKind::kHamming, ExperimentKind::kRegime,
                 ExperimentKind::kThresholds}) {
    EXPECT_EQ(parse_experiment_kind(to_string(k)), k);
  }
  EXPECT_THROW((void)parse_generator_kind("fast"), ParameterError);
  EXPECT_THROW((void)parse_experiment_kind("motifs"), ParameterError);
}

TEST(Config, ValidationHappensBeforeGeneration) {
  ExperimentConfig c = base_config();
  c.trials = 0;
  EXPECT_THROW((void)run(c), ParameterError);

  c = base_config();
  c.kind = ExperimentKind::kHamming;
  c.gamma = 0.6;
  EXPECT_THROW((void)run(c), ParameterError);

  c = base_config();
  c.generator = GeneratorKind::kNaive;
  c.n = 15;
  EXPECT_THROW((void)run(c), CapacityError);
  c.limits.allow_large = true;
  EXPECT_NO_THROW(c.validate());

  c = base_config();
  c.generator = GeneratorKind::kRmat;
  EXPECT_THROW((void)run(c), ParameterError);

  c = base_config();
  c.kind = ExperimentKind::kSubgraph;
  c.pattern = "path:5";
  EXPECT_THROW((void)run(c), CapacityError);
  c.pattern = "nonsense:3";
  EXPECT_THROW((void)run(c), FormatError);

  c = base_config();
  c.kind = ExperimentKind::kThresholds;
  c.sweep_min = 0.9;
  c.sweep_max = 0.2;
  EXPECT_THROW((void)run(c), ParameterError);

  c = base_config();
  c.alpha = 1.2;
  EXPECT_THROW((void)run(c), ParameterError);
}

TEST(Run, DeterministicAcrossRunsAndWorkers) {
  ExperimentConfig c = base_config();
  const std::string first = to_json(run(c)).dump();
  EXPECT_EQ(first, to_json(run(c)).dump());
  c.workers = 1;
  EXPECT_EQ(first, to_json(run(c)).dump());
  c.seed = 124;
  EXPECT_NE(first, to_json(run(c)).dump());
}

TEST(Run, DegreeReportShape) {
  const ValidationReport r = run(base_config());
  EXPECT_EQ(r.table.columns,
            (std::vector<std::string>{"d", "empirical_mean_count",
                                      "predicted_count", "z_score"}));
  ASSERT_FALSE(r.criteria.empty());
  for (const auto& c : r.criteria) {
    EXPECT_FALSE(c.comparison.empty());
    EXPECT_TRUE(std::isfinite(c.tolerance));
  }
  for (const auto& a : r.analytic) EXPECT_FALSE(a.provenance.empty()) << a.name;
  const nlohmann::json j = to_json(r);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["version"], kVersion);
  EXPECT_EQ(j["config"]["seed"], 123);
  EXPECT_EQ(j["config"]["include_loops"], true);
  EXPECT_EQ(j["passed"], r.all_passed());
  EXPECT_EQ(to_csv(r.table).substr(0, 42),
            "d,empirical_mean_count,predicted_count,z_s");
}

TEST(Run, CaseSixAddsPoissonCriterion) {
  ExperimentConfig c = base_config();
  c.alpha = c.beta = c.gamma = 0.5;
  c.n = 12;
  c.trials = 10;
  const ValidationReport r = run(c);
  ASSERT_EQ(r.criteria.size(), 2u);
  EXPECT_NE(r.criteria[1].name.find("Poisson(1)"), std::string::npos);
  EXPECT_TRUE(r.all_passed());
  EXPECT_NE(r.summary.find("not a power law"), std::string::npos);
}

TEST(Run, HammingReportShape) {
  ExperimentConfig c = base_config();
  c.kind = ExperimentKind::kHamming;
  c.alpha = c.gamma = 0.4;
  c.beta = 0.7;
  c.n = 10;
  const ValidationReport r = run(c);
  EXPECT_EQ(r.table.columns,
            (std::vector<std::string>{"k", "empirical_mean", "predicted"}));
  EXPECT_EQ(r.table.rows.size(), 11u);
  EXPECT_NE(find_analytic(r, "critical_fraction"), nullptr);
  EXPECT_EQ(r.criteria.size(), 4u);
}

TEST(Run, RegimeNeedsNoTrials) {
  ExperimentConfig c = base_config();
  c.kind = ExperimentKind::kRegime;
  c.alpha = 0.7;
  c.beta = 0.3;
  c.gamma = 0.3;
  c.n = 40;  // far beyond any generator limit; nothing is sampled
  const ValidationReport r = run(c);
  EXPECT_TRUE(r.criteria.empty());
  EXPECT_EQ(r.empirical["verdicts"][2]["case"], 1);
  EXPECT_NEAR(r.table.rows[2][3], 1.0 + 0.36, 1e-12);
}

TEST(Run, SubgraphUsesExactExpectationWhenFeasible) {
  ExperimentConfig c = base_config();
  c.kind = ExperimentKind::kSubgraph;
  c.pattern = "cycle:3";
  c.n = 4;
  c.trials = 50;
  const ValidationReport r = run(c);
  EXPECT_NE(find_analytic(r, "expected_copies_exact"), nullptr);
  EXPECT_NE(find_analytic(r, "cycle_base_value"), nullptr);
  ASSERT_EQ(r.criteria.size(), 1u);
  EXPECT_TRUE(r.all_passed());

  // alpha != gamma: no symmetric-only closed forms.
  c.gamma = 0.5;
  const ValidationReport asym = run(c);
  EXPECT_EQ(find_analytic(asym, "cycle_base_value"), nullptr);
  EXPECT_EQ(find_analytic(asym, "tree_base_value"), nullptr);
}

TEST(Run, ThresholdRootMatchesCycleClosedForm) {
  ExperimentConfig c = base_config();
  c.kind = ExperimentKind::kThresholds;
  c.pattern = "cycle:4";
  c.beta = 0.3;
  c.n = 8;
  c.trials = 5;
  c.sweep_min = 0.3;
  c.sweep_max = 0.9;
  c.sweep_points = 4;
  const ValidationReport r = run(c);
  const AnalyticValue* root = find_analytic(r, "threshold_alpha");
  ASSERT_NE(root, nullptr);
  // Independent bisection on (a+b)^4 + (a-b)^4 = 1.
  double lo = 0.3;
  double hi = 0.9;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f = std::pow(mid + 0.3, 4) + std::pow(mid - 0.3, 4) - 1.0;
    (f < 0 ? lo : hi) = mid;
  }
  EXPECT_NEAR(root->value, 0.5 * (lo + hi), 1e-12);
  EXPECT_EQ(r.table.rows.size(), 4u);
  EXPECT_TRUE(r.all_passed());
}

TEST(Emit, DumpsAndFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "kron_harness_test";
  std::filesystem::remove_all(dir);
  ExperimentConfig c = base_config();
  c.trials = 2;
  c.dump_dir = dir / "dumps";
  const ValidationReport r = run(c);
  for (unsigned t = 0; t < 2; ++t) {
    std::ifstream in(dir / "dumps" / ("trial_" + std::to_string(t) + ".edges"));
    ASSERT_TRUE(in.good());
    const SampledGraph g = read_edge_list(in);
    EXPECT_EQ(g.edges, generate_trial(c, t, 1).edges);
  }
  emit(r, ReportFormat::kJson, dir / "r.json");
  emit(r, ReportFormat::kCsv, dir / "r.csv");
  std::ifstream js(dir / "r.json");
  const nlohmann::json parsed = nlohmann::json::parse(js);
  EXPECT_EQ(parsed, to_json(r));
  EXPECT_THROW(emit(r, ReportFormat::kJson, dir / "missing" / "x" / "r.json"),
               std::runtime_error);
  std::filesystem::remove_all(dir);
}

TEST(Round12, TwelveSignificantDigits) {
  EXPECT_EQ(round12(0.1234567890123456), 0.123456789012);
  EXPECT_EQ(round12(123456.78901234567), 123456.789012);
  EXPECT_EQ(round12(0.0), 0.0);
  EXPECT_EQ(round12(-2.5e-20), -2.5e-20);
}

}  // namespace
}  // namespace kron
