#include "kron/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "kron/edge_list.hpp"
#include "kron/empirical.hpp"
#include "kron/errors.hpp"
#include "kron/parallel.hpp"
#include "kron/predict.hpp"
#include "kron/stats.hpp"

namespace kron {
namespace {

constexpr double kZLimit = 4.0;
constexpr double kPoissonTvLimit = 0.02;
constexpr double kDegreeRelTolerance = 0.10;
constexpr double kInWindowMinimum = 0.99;
constexpr double kDistanceRelTolerance = 0.02;

using nlohmann::json;

double num(double x) { return round12(x); }

Criterion make_criterion(std::string name, double statistic,
                         std::string comparison, double tolerance,
                         std::string detail = {}) {
  Criterion c;
  c.name = std::move(name);
  c.statistic = statistic;
  c.comparison = comparison;
  c.tolerance = tolerance;
  c.passed = comparison == "<=" ? statistic <= tolerance
                                : statistic >= tolerance;
  c.detail = std::move(detail);
  return c;
}

// z-score of a Monte-Carlo mean against a prediction. With no observed
// spread the Poisson-style floor sqrt(prediction / trials) is used.
double z_score(const RunningStats& stats, double predicted) {
  double se = stats.standard_error();
  if (se == 0.0) {
    se = std::sqrt(std::max(predicted, 0.0) /
                   static_cast<double>(std::max<std::uint64_t>(stats.count(), 1)));
  }
  const double diff = stats.mean() - predicted;
  if (se == 0.0) return diff == 0.0 ? 0.0 : INFINITY;
  return diff / se;
}

void maybe_dump(const ExperimentConfig& config, const SampledGraph& g,
                std::uint64_t label) {
  if (!config.dump_dir) return;
  std::filesystem::create_directories(*config.dump_dir);
  const auto path =
      *config.dump_dir / ("trial_" + std::to_string(label) + ".edges");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_edge_list(out, g);
}

SampledGraph generate_with(const ExperimentConfig& config,
                           const KroneckerParams& p, std::uint64_t label,
                           unsigned workers) {
  const SeedSpec seed = SeedSpec(config.seed).child(label);
  GenerateOptions options;
  options.include_loops = config.include_loops;
  options.workers = workers;
  options.limits = config.limits;
  switch (config.generator) {
    case GeneratorKind::kNaive:
      return generate_naive(p, seed, options);
    case GeneratorKind::kStratified:
      return generate_stratified(p, seed, options);
    case GeneratorKind::kRmat: {
      const std::uint64_t m =
          config.rmat_pairs != 0 ? config.rmat_pairs : p.vertex_count();
      SampledGraph g = generate_rmat(RmatParams(p, m), seed, workers);
      if (!config.include_loops) {
        g.loops.clear();
        g.include_loops = false;
      }
      return g;
    }
  }
  throw ParameterError("unknown generator");
}

// Runs body(trial, graph) for every trial; results go to per-trial slots.
template <typename Result, typename Body>
std::vector<Result> run_trials(const ExperimentConfig& config,
                               const KroneckerParams& p,
                               std::uint64_t label_offset, Body body) {
  std::vector<Result> results(config.trials);
  const unsigned inner = config.trials > 1 ? 1u : config.workers;
  parallel_for(config.trials, config.trials > 1 ? config.workers : 1u,
               [&](std::size_t t) {
                 const std::uint64_t label = label_offset + t;
                 SampledGraph g = generate_with(config, p, label, inner);
                 maybe_dump(config, g, label);
                 results[t] = body(g);
               });
  return results;
}

std::string degree_count_tag() {
  return "degree-count/poisson-mixture";
}

void run_degrees(const ExperimentConfig& config, ValidationReport& report) {
  const KroneckerParams p = config.params();
  using Hist = std::map<std::uint32_t, std::uint64_t>;
  const auto hists = run_trials<Hist>(config, p, 0, [&](const SampledGraph& g) {
    return degree_histogram(g, config.include_loops);
  });

  std::uint32_t max_degree = config.checked_degrees;
  Hist pooled;
  for (const Hist& h : hists) {
    for (auto [d, c] : h) {
      pooled[d] += c;
      max_degree = std::max(max_degree, d);
    }
  }

  const RegimeVerdict verdict = classify_regime(p, 1);
  report.analytic.push_back(
      {"regime_case", static_cast<double>(verdict.case_id), "degree-regime/six-case"});
  report.analytic.push_back({"power_law_possible",
                             verdict.power_law_possible ? 1.0 : 0.0,
                             "degree-regime/no-power-law"});
  report.table.columns = {"d", "empirical_mean_count", "predicted_count",
                          "z_score"};
  double worst_z = 0.0;
  json per_degree = json::array();
  for (std::uint32_t d = 0; d <= max_degree; ++d) {
    RunningStats stats;
    for (const Hist& h : hists) {
      const auto it = h.find(d);
      stats.add(it == h.end() ? 0.0 : static_cast<double>(it->second));
    }
    const double predicted = expected_degree_count(p, d);
    const double z = z_score(stats, predicted);
    if (d <= config.checked_degrees) {
      worst_z = std::max(worst_z, std::abs(z));
      report.analytic.push_back({"expected_degree_count[" + std::to_string(d) + "]",
                                 predicted, degree_count_tag()});
    }
    report.table.rows.push_back({static_cast<double>(d), stats.mean(),
                                 predicted, z});
    per_degree.push_back({{"d", d},
                          {"mean", num(stats.mean())},
                          {"standard_error", num(stats.standard_error())},
                          {"predicted", num(predicted)},
                          {"z", num(z)}});
  }
  report.empirical["per_degree"] = per_degree;
  json pooled_json = json::object();
  for (auto [d, c] : pooled) pooled_json[std::to_string(d)] = c;
  report.empirical["pooled_histogram"] = pooled_json;

  report.criteria.push_back(make_criterion(
      "max |z| of degree counts, d <= " + std::to_string(config.checked_degrees),
      worst_z, "<=", kZLimit,
      "Monte-Carlo mean over trials vs the Poisson-mixture prediction"));

  if (verdict.power_law_possible) {
    std::vector<double> pmf(max_degree + 32);
    for (std::size_t d = 0; d < pmf.size(); ++d) {
      pmf[d] = poisson_pmf(1.0, static_cast<unsigned>(d));
    }
    const double tv = total_variation(pooled, pmf);
    report.analytic.push_back(
        {"poisson_parameter", 1.0, "degree-regime/case6-poisson"});
    report.empirical["total_variation_vs_poisson1"] = num(tv);
    report.criteria.push_back(make_criterion(
        "total variation to Poisson(1)", tv, "<=", kPoissonTvLimit,
        "pooled degree distribution, loops counted"));
  }
  report.summary = verdict.summary;
}


std::optional<double> exact_if_feasible(const KroneckerParams& p,
                                        const PatternGraph& g) {
  try {
    return expected_copies_exact(p, g);
  } catch (const CapacityError&) {
    return std::nullopt;
  }
}

void add_closed_forms(const KroneckerParams& p, const PatternGraph& g,
                      std::vector<AnalyticValue>& out) {
  const std::string name = describe_pattern(g);
  const bool symmetric = nearly_equal(p.alpha(), p.gamma());
  if (name == "edge" || name.rfind("star:", 0) == 0 ||
      (name == "path:2")) {
    out.push_back({"star_base_value", star_base_value(p, g.edge_count()),
                   "subgraph/star-closed-form"});
  }
  if (symmetric && g.is_tree()) {
    out.push_back({"tree_base_value", tree_base_value(p, g.edge_count()),
                   "subgraph/tree-closed-form"});
  }
  if (symmetric && name.rfind("cycle:", 0) == 0) {
    out.push_back({"cycle_base_value", cycle_base_value(p, g.vertex_count()),
                   "subgraph/cycle-closed-form"});
  }
}

void run_subgraph(const ExperimentConfig& config, ValidationReport& report) {
  const KroneckerParams p = config.params();
  const PatternGraph pattern = parse_pattern(config.pattern);
  const auto samples =
      run_trials<double>(config, p, 0, [&](const SampledGraph& g) {
        return static_cast<double>(count_labeled_copies(g, pattern));
      });
  RunningStats stats;
  for (double x : samples) stats.add(x);

  const double base = base_value(p, pattern);
  report.analytic.push_back({"base_value", base, "subgraph/base-value"});
  report.analytic.push_back(
      {"expected_copies_asymptotic", expected_copies_asymptotic(p, pattern),
       "subgraph/base-value"});
  add_closed_forms(p, pattern, report.analytic);
  report.empirical["pattern"] = describe_pattern(pattern);
  report.empirical["mean_copies"] = num(stats.mean());
  report.empirical["standard_error"] = num(stats.standard_error());
  json per_trial = json::array();
  for (double x : samples) per_trial.push_back(x);
  report.empirical["per_trial"] = per_trial;

  report.table.columns = {"trial", "labeled_copies"};
  for (std::size_t t = 0; t < samples.size(); ++t) {
    report.table.rows.push_back({static_cast<double>(t), samples[t]});
  }

  if (const auto exact = exact_if_feasible(p, pattern)) {
    report.analytic.push_back(
        {"expected_copies_exact", *exact, "subgraph/exact-injective-sum"});
    const double z = z_score(stats, *exact);
    report.criteria.push_back(make_criterion(
        "|z| of mean labeled copies vs exact expectation", std::abs(z), "<=",
        kZLimit));
  }
  report.summary = "pattern " + describe_pattern(pattern) +
                   ": base value " + std::to_string(base) +
                   (base > 1.0 ? " > 1 (copies expected to appear)"
                               : " <= 1 (copies expected to vanish)");
}

struct HammingSample {
  ConcentrationReport concentration;
  std::optional<ExtremalScan> extremal;
};

void run_hamming(const ExperimentConfig& config, ValidationReport& report) {
  const KroneckerParams p = config.params();
  const bool extremal = std::min(p.alpha(), p.beta()) < 0.5;
  const auto samples =
      run_trials<HammingSample>(config, p, 0, [&](const SampledGraph& g) {
        HammingSample s;
        s.concentration = concentration_report(g);
        if (extremal) s.extremal = extremal_edge_scan(g);
        return s;
      });

  const unsigned n = p.n();
  const double vertices = static_cast<double>(p.vertex_count());
  const double predicted_degree = std::pow(p.alpha() + p.beta(), n);
  const HammingWindow window = hamming_window(p);
  report.analytic.push_back(
      {"expected_degree", predicted_degree, "degree/expectation"});
  report.analytic.push_back(
      {"window_center", window.center, "hamming/window"});
  report.analytic.push_back(
      {"window_half_width", window.half_width, "hamming/window"});

  RunningStats mean_degree;
  std::uint64_t endpoints = 0;
  std::uint64_t in_window = 0;
  double weighted = 0.0;
  std::uint32_t min_degree = UINT32_MAX;
  std::uint32_t max_degree = 0;
  std::vector<double> per_k(n + 1, 0.0);
  for (const auto& s : samples) {
    const auto& c = s.concentration;
    mean_degree.add(c.mean_degree);
    endpoints += c.endpoints;
    in_window += c.endpoints_in_window;
    weighted += c.mean_neighbor_distance * static_cast<double>(c.endpoints);
    min_degree = std::min(min_degree, c.min_degree);
    max_degree = std::max(max_degree, c.max_degree);
    for (unsigned k = 0; k <= n; ++k) {
      per_k[k] += static_cast<double>(c.distance_counts[k]) / vertices;
    }
  }
  const double trials = static_cast<double>(samples.size());
  report.table.columns = {"k", "empirical_mean", "predicted"};
  for (unsigned k = 0; k <= n; ++k) {
    const double predicted = hamming_profile_prediction(p, k);
    report.table.rows.push_back({static_cast<double>(k), per_k[k] / trials,
                                 predicted});
  }
  const double fraction =
      endpoints == 0 ? 0.0 : static_cast<double>(in_window) / endpoints;
  const double mean_distance = endpoints == 0 ? 0.0 : weighted / endpoints;
  report.empirical["mean_degree"] = num(mean_degree.mean());
  report.empirical["min_degree"] = min_degree;
  report.empirical["max_degree"] = max_degree;
  report.empirical["in_window_fraction"] = num(fraction);
  report.empirical["mean_neighbor_distance"] = num(mean_distance);

  const double degree_err =
      std::abs(mean_degree.mean() - predicted_degree) / predicted_degree;
  report.criteria.push_back(make_criterion(
      "relative error of mean degree vs (alpha+beta)^n", degree_err, "<=",
      kDegreeRelTolerance));
  report.criteria.push_back(make_criterion(
      "fraction of edge endpoints inside the distance window", fraction, ">=",
      kInWindowMinimum));
  report.criteria.push_back(make_criterion(
      "relative error of mean neighbour distance vs beta n/(alpha+beta)",
      std::abs(mean_distance - window.center) / window.center, "<=",
      kDistanceRelTolerance));

  if (extremal) {
    const ExtremalScan& first = *samples.front().extremal;
    std::uint64_t offending = 0;
    std::uint64_t band = 0;
    std::optional<unsigned> lo;
    std::optional<unsigned> hi;
    for (const auto& s : samples) {
      offending += s.extremal->offending.size();
      band += s.extremal->band_edges;
      if (s.extremal->min_distance) {
        lo = std::min(lo.value_or(n), *s.extremal->min_distance);
      }
      if (s.extremal->max_distance) {
        hi = std::max(hi.value_or(0), *s.extremal->max_distance);
      }
    }
    const bool below = first.side == CriticalSide::kBelow;
    const double expected_violations =
        expected_edges_beyond(p, first.threshold, first.side);
    report.analytic.push_back(
        {"critical_fraction", first.critical_fraction, "hamming/critical-fraction"});
    report.analytic.push_back(
        {"expected_edges_beyond_threshold", expected_violations,
         "hamming/first-moment"});
    report.empirical["extremal_side"] = below ? "below" : "above";
    report.empirical["threshold"] = num(first.threshold);
    report.empirical["offending_edges"] = offending;
    report.empirical["band_distance"] = first.band_distance;
    report.empirical["band_edges_mean"] =
        num(static_cast<double>(band) / trials);
    if (lo) report.empirical["min_edge_distance"] = *lo;
    if (hi) report.empirical["max_edge_distance"] = *hi;
    report.criteria.push_back(make_criterion(
        std::string("edges with Hamming distance ") + (below ? "<" : ">") +
            " c n",
        static_cast<double>(offending), "<=", 0.0,
        "summed over all trials, loops excluded"));
  }
  report.summary = "neighbour distances concentrate around " +
                   std::to_string(window.center) + " +/- " +
                   std::to_string(window.half_width);
}

void run_regime(const ExperimentConfig& config, ValidationReport& report) {
  const KroneckerParams p = config.params();
  report.table.columns = {"d", "case", "theta_order", "theta_base",
                          "predicted_count"};
  json verdicts = json::array();
  for (unsigned d = 0; d <= config.checked_degrees; ++d) {
    const RegimeVerdict v = classify_regime(p, d);
    const double predicted = expected_degree_count(p, d);
    report.table.rows.push_back(
        {static_cast<double>(d), static_cast<double>(v.case_id),
         v.order == GrowthOrder::kTheta ? 1.0 : 0.0, v.theta_base, predicted});
    report.analytic.push_back({"expected_degree_count[" + std::to_string(d) + "]",
                               predicted, degree_count_tag()});
    json entry = {{"d", d},
                  {"case", v.case_id},
                  {"order", to_string(v.order)},
                  {"theta_base", num(v.theta_base)},
                  {"boundary", v.boundary},
                  {"swapped", v.swapped},
                  {"condition", v.condition},
                  {"summary", v.summary}};
    if (v.case_id == 3) {
      entry["split"] = to_string(v.split);
      entry["c1"] = num(v.c1);
      entry["c2"] = num(v.c2);
    }
    verdicts.push_back(entry);
  }
  report.empirical["verdicts"] = verdicts;
  const RegimeVerdict first = classify_regime(p, 1);
  report.analytic.push_back(
      {"regime_case", static_cast<double>(first.case_id), "degree-regime/six-case"});
  report.summary = first.summary;
}

double sweep_alpha(const ExperimentConfig& config, unsigned i) {
  if (config.sweep_points == 1) return config.sweep_min;
  return config.sweep_min + (config.sweep_max - config.sweep_min) * i /
                                (config.sweep_points - 1);
}

std::optional<double> base_value_root(const ExperimentConfig& config,
                                      const PatternGraph& pattern) {
  auto f = [&](double a) {
    return base_value(KroneckerParams(a, config.beta, a, config.n), pattern) -
           1.0;
  };
  double lo = config.sweep_min;
  double hi = config.sweep_max;
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0) == (fhi < 0)) return std::nullopt;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void run_thresholds(const ExperimentConfig& config, ValidationReport& report) {
  const PatternGraph pattern = parse_pattern(config.pattern);
  const std::string name = describe_pattern(pattern);
  report.table.columns = {"alpha", "base_value", "predicted_log_count",
                          "empirical_mean_copies", "presence_fraction"};
  const auto root = base_value_root(config, pattern);
  if (root) {
    report.analytic.push_back(
        {"threshold_alpha", *root, "subgraph/threshold"});
  }
  json points = json::array();
  RunningStats presence_below;
  RunningStats presence_above;
  for (unsigned i = 0; i < config.sweep_points; ++i) {
    const double a = sweep_alpha(config, i);
    const KroneckerParams p(a, config.beta, a, config.n);
    const auto copies = run_trials<double>(
        config, p, static_cast<std::uint64_t>(i) * config.trials,
        [&](const SampledGraph& g) {
          return static_cast<double>(count_labeled_copies(g, pattern));
        });
    RunningStats stats;
    double present = 0.0;
    for (double c : copies) {
      stats.add(c);
      if (c > 0) present += 1.0;
    }
    present /= static_cast<double>(copies.size());
    const double base = base_value(p, pattern);
    const double log_count = log_expected_copies_asymptotic(p, pattern);
    report.table.rows.push_back({a, base, log_count, stats.mean(), present});
    json entry = {{"alpha", num(a)},
                  {"base_value", num(base)},
                  {"log_expected_copies", num(log_count)},
                  {"mean_copies", num(stats.mean())},
                  {"presence_fraction", num(present)}};
    if (name.rfind("cycle:", 0) == 0) {
      entry["cycle_closed_form"] =
          num(cycle_base_value(p, pattern.vertex_count()));
    } else if (pattern.is_tree()) {
      entry["tree_closed_form"] = num(tree_base_value(p, pattern.edge_count()));
    }
    points.push_back(entry);
    if (root) {
      (a < *root ? presence_below : presence_above).add(present);
    }
  }
  report.empirical["pattern"] = name;
  report.empirical["points"] = points;
  if (root && presence_below.count() > 0 && presence_above.count() > 0) {
    const double gap = presence_above.mean() - presence_below.mean();
    report.criteria.push_back(make_criterion(
        "presence above threshold minus presence below threshold", gap, ">=",
        0.0, "mean presence fraction on each side of B_G = 1"));
    report.summary = name + " threshold at alpha = gamma = " +
                     std::to_string(*root);
  } else {
    report.summary = name + ": no threshold crossing inside the sweep";
  }
}

void check_generator_capacity(const ExperimentConfig& c,
                              const KroneckerParams& p) {
  if (c.limits.allow_large) return;
  if (c.generator == GeneratorKind::kNaive &&
      c.n > c.limits.max_digits_naive) {
    throw CapacityError("n = " + std::to_string(c.n) +
                        " exceeds the naive generator limit " +
                        std::to_string(c.limits.max_digits_naive) +
                        " (use --allow-large)");
  }
  if (c.generator == GeneratorKind::kStratified &&
      c.n > c.limits.max_digits_stratified) {
    throw CapacityError("n = " + std::to_string(c.n) +
                        " exceeds the stratified generator limit " +
                        std::to_string(c.limits.max_digits_stratified) +
                        " (use --allow-large)");
  }
  if (c.generator == GeneratorKind::kRmat) {
    (void)RmatParams(p, c.rmat_pairs != 0 ? c.rmat_pairs : p.vertex_count());
  }
}

}  // namespace

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kNaive: return "naive";
    case GeneratorKind::kStratified: return "stratified";
    case GeneratorKind::kRmat: return "rmat";
  }
  return "?";
}

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kDegrees: return "degrees";
    case ExperimentKind::kSubgraph: return "subgraph";
    case ExperimentKind::kHamming: return "hamming";
    case ExperimentKind::kRegime: return "regime";
    case ExperimentKind::kThresholds: return "thresholds";
  }
  return "?";
}

GeneratorKind parse_generator_kind(const std::string& name) {
  for (auto k : {GeneratorKind::kNaive, GeneratorKind::kStratified,
                 GeneratorKind::kRmat}) {
    if (to_string(k) == name) return k;
  }
  throw ParameterError("unknown generator '" + name + "'");
}

ExperimentKind parse_experiment_kind(const std::string& name) {
  for (auto k : {ExperimentKind::kDegrees, ExperimentKind::kSubgraph,
                 ExperimentKind::kHamming, ExperimentKind::kRegime,
                 ExperimentKind::kThresholds}) {
    if (to_string(k) == name) return k;
  }
  throw ParameterError("unknown experiment '" + name + "'");
}

void ExperimentConfig::validate() const {
  if (trials == 0) throw ParameterError("trials must be at least 1");
  if (kind == ExperimentKind::kThresholds) {
    if (!(sweep_min > 0.0 && sweep_max < 1.0 && sweep_min <= sweep_max)) {
      throw ParameterError("sweep range must satisfy 0 < min <= max < 1");
    }
    if (sweep_points == 0) throw ParameterError("sweep_points must be >= 1");
    const KroneckerParams p(sweep_min, beta, sweep_min, n);
    (void)KroneckerParams(sweep_max, beta, sweep_max, n);
    check_generator_capacity(*this, p);
  } else {
    const KroneckerParams p = params();
    if (kind != ExperimentKind::kRegime) check_generator_capacity(*this, p);
    if (kind == ExperimentKind::kHamming) {
      require_symmetric(p, "hamming experiment");
      if (!(alpha + beta > 1.0)) {
        throw ParameterError("hamming experiment requires alpha + beta > 1");
      }
    }
  }
  if (kind == ExperimentKind::kSubgraph || kind == ExperimentKind::kThresholds) {
    const PatternGraph g = parse_pattern(pattern);
    if (g.vertex_count() > kMaxCountedPatternVertices) {
      throw CapacityError("pattern has more than " +
                          std::to_string(kMaxCountedPatternVertices) +
                          " vertices");
    }
    if (n > kMaxCountedHostDigits) {
      throw CapacityError("copy counting supports n <= " +
                          std::to_string(kMaxCountedHostDigits));
    }
  }
}

bool ValidationReport::all_passed() const noexcept {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const Criterion& c) { return c.passed; });
}

SampledGraph generate_trial(const ExperimentConfig& config, unsigned trial,
                            unsigned workers) {
  return generate_with(config, config.params(), trial, workers);
}

ValidationReport run(const ExperimentConfig& config) {
  config.validate();
  ValidationReport report;
  report.config = config;
  switch (config.kind) {
    case ExperimentKind::kDegrees: run_degrees(config, report); break;
    case ExperimentKind::kSubgraph: run_subgraph(config, report); break;
    case ExperimentKind::kHamming: run_hamming(config, report); break;
    case ExperimentKind::kRegime: run_regime(config, report); break;
    case ExperimentKind::kThresholds: run_thresholds(config, report); break;
  }
  return report;
}

double round12(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return std::strtod(buf, nullptr);
}

json to_json(const ValidationReport& report) {
  const ExperimentConfig& c = report.config;
  json config = {{"alpha", num(c.alpha)},
                 {"beta", num(c.beta)},
                 {"gamma", num(c.gamma)},
                 {"n", c.n},
                 {"generator", to_string(c.generator)},
                 {"include_loops", c.include_loops},
                 {"trials", c.trials},
                 {"seed", c.seed},
                 {"experiment", to_string(c.kind)}};
  if (c.generator == GeneratorKind::kRmat) {
    config["rmat_pairs"] = c.rmat_pairs != 0 ? c.rmat_pairs
                                             : (std::uint64_t{1} << c.n);
  }
  if (c.kind == ExperimentKind::kSubgraph ||
      c.kind == ExperimentKind::kThresholds) {
    config["pattern"] = c.pattern;
  }
  if (c.kind == ExperimentKind::kDegrees || c.kind == ExperimentKind::kRegime) {
    config["checked_degrees"] = c.checked_degrees;
  }
  if (c.kind == ExperimentKind::kThresholds) {
    config["sweep"] = {{"min", num(c.sweep_min)},
                       {"max", num(c.sweep_max)},
                       {"points", c.sweep_points}};
  }
  json analytic = json::array();
  for (const auto& a : report.analytic) {
    analytic.push_back({{"name", a.name},
                        {"value", num(a.value)},
                        {"provenance", a.provenance}});
  }
  json criteria = json::array();
  for (const auto& cr : report.criteria) {
    json entry = {{"name", cr.name},
                  {"statistic", num(cr.statistic)},
                  {"comparison", cr.comparison},
                  {"tolerance", num(cr.tolerance)},
                  {"passed", cr.passed}};
    if (!cr.detail.empty()) entry["detail"] = cr.detail;
    criteria.push_back(entry);
  }
  return {{"schema", kReportSchema},
          {"version", kVersion},
          {"config", config},
          {"analytic", analytic},
          {"empirical", report.empirical},
          {"criteria", criteria},
          {"summary", report.summary},
          {"passed", report.all_passed()}};
}

std::string to_csv(const Table& table) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  char buf[40];
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.12g", row[i]);
      out << (i ? "," : "") << buf;
    }
    out << '\n';
  }
  return out.str();
}

void emit(const ValidationReport& report, ReportFormat format,
          const std::filesystem::path& path) {
  const std::string text = format == ReportFormat::kJson
                               ? to_json(report).dump(2) + "\n"
                               : to_csv(report.table);
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace kron
