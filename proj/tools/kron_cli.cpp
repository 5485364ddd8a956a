// Command-line front end: generate, predict, measure, validate, certify.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kron/edge_list.hpp"
#include "kron/empirical.hpp"
#include "kron/errors.hpp"
#include "kron/generator.hpp"
#include "kron/harness.hpp"
#include "kron/patterns.hpp"
#include "kron/predict.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

using nlohmann::json;

struct Options {
  kron::ExperimentConfig config;
  std::string generator = "stratified";
  std::string experiment = "degrees";
  std::string format = "json";
  std::string out = "-";
  std::string in;
  std::string dump_dir;
  bool no_loops = false;
};

void add_model_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--alpha", o.config.alpha, "P[1][1]")->required();
  cmd->add_option("--beta", o.config.beta, "off-diagonal entry")->required();
  cmd->add_option("--gamma", o.config.gamma, "P[0][0]")->required();
  cmd->add_option("-n,--digits", o.config.n, "number of binary digits")
      ->required();
}

void add_generator_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--generator", o.generator, "naive | stratified | rmat")
      ->capture_default_str();
  cmd->add_option("--rmat-pairs", o.config.rmat_pairs,
                  "R-MAT draws m (default 2^n)");
  cmd->add_flag("--no-loops", o.no_loops, "exclude self-loops");
  cmd->add_flag("--allow-large", o.config.limits.allow_large,
                "lift the desk-scale size guards");
  cmd->add_option("--workers", o.config.workers, "threads (0 = all cores)");
}

void finish(Options& o) {
  o.config.generator = kron::parse_generator_kind(o.generator);
  o.config.include_loops = !o.no_loops;
  if (!o.dump_dir.empty()) o.config.dump_dir = o.dump_dir;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

// A pattern argument naming an existing file is replaced by its contents.
std::string load_pattern(const std::string& arg) {
  std::error_code ec;
  if (arg.empty() || !std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

kron::ReportFormat parse_format(const std::string& name) {
  if (name == "json") return kron::ReportFormat::kJson;
  if (name == "csv") return kron::ReportFormat::kCsv;
  throw kron::ParameterError("unknown format '" + name + "'");
}

void parse_experiment(Options& o) {
  const std::string prefix = "subgraph:";
  if (o.experiment.rfind(prefix, 0) == 0) {
    o.config.kind = kron::ExperimentKind::kSubgraph;
    o.config.pattern = o.experiment.substr(prefix.size());
  } else {
    o.config.kind = kron::parse_experiment_kind(o.experiment);
  }
  o.config.pattern = load_pattern(o.config.pattern);
}

int cmd_generate(Options& o) {
  finish(o);
  o.config.kind = kron::ExperimentKind::kDegrees;
  o.config.validate();
  const kron::SampledGraph g = kron::generate_trial(o.config, 0, o.config.workers);
  std::ostringstream text;
  kron::write_edge_list(text, g);
  write_text(o.out, text.str());
  return kExitPass;
}

int cmd_predict(Options& o) {
  o.config.kind = kron::ExperimentKind::kRegime;
  o.config.trials = 1;
  const kron::ValidationReport report = kron::run(o.config);
  json j = kron::to_json(report);
  const kron::KroneckerParams p = o.config.params();
  if (kron::nearly_equal(p.alpha(), p.gamma()) && p.alpha() + p.beta() > 1.0) {
    const kron::HammingWindow w = kron::hamming_window(p);
    j["hamming"] = {{"window_center", kron::round12(w.center)},
                    {"window_half_width", kron::round12(w.half_width)}};
    const kron::CriticalFraction cf = kron::critical_fraction(p);
    if (cf.c) {
      j["hamming"]["critical_fraction"] = kron::round12(*cf.c);
      j["hamming"]["critical_side"] =
          cf.side == kron::CriticalSide::kBelow ? "below" : "above";
    }
  }
  const auto format = parse_format(o.format);
  write_text(o.out, format == kron::ReportFormat::kJson
                        ? j.dump(2) + "\n"
                        : kron::to_csv(report.table));
  return kExitPass;
}

int cmd_measure(Options& o, const std::string& pattern_text) {
  std::ifstream in(o.in);
  if (!in) throw std::runtime_error("cannot open " + o.in);
  const kron::SampledGraph g = kron::read_edge_list(in);
  const kron::KroneckerParams& p = g.params;
  json j = {{"n", p.n()},
            {"vertices", p.vertex_count()},
            {"edges", g.edges.size()},
            {"loops", g.loops.size()},
            {"include_loops", g.include_loops}};
  json hist = json::object();
  for (auto [d, c] : kron::degree_histogram(g, g.include_loops)) {
    hist[std::to_string(d)] = c;
  }
  j["degree_histogram"] = hist;
  if (kron::nearly_equal(p.alpha(), p.gamma()) && p.alpha() + p.beta() > 1.0) {
    const kron::ConcentrationReport c = kron::concentration_report(g);
    j["concentration"] = {
        {"mean_degree", kron::round12(c.mean_degree)},
        {"min_degree", c.min_degree},
        {"max_degree", c.max_degree},
        {"in_window_fraction", kron::round12(c.in_window_fraction)},
        {"mean_neighbor_distance", kron::round12(c.mean_neighbor_distance)},
        {"distance_counts", c.distance_counts}};
  }
  if (!pattern_text.empty()) {
    const kron::PatternGraph pattern =
        kron::parse_pattern(load_pattern(pattern_text));
    j["pattern"] = kron::describe_pattern(pattern);
    j["labeled_copies"] = kron::count_labeled_copies(g, pattern);
  }
  write_text(o.out, j.dump(2) + "\n");
  return kExitPass;
}

int cmd_validate(Options& o) {
  finish(o);
  parse_experiment(o);
  const auto format = parse_format(o.format);
  const kron::ValidationReport report = kron::run(o.config);
  kron::emit(report, format, o.out);
  for (const auto& c : report.criteria) {
    std::fprintf(stderr, "%s: %s (%.6g %s %.6g)\n", c.passed ? "PASS" : "FAIL",
                 c.name.c_str(), c.statistic, c.comparison.c_str(),
                 c.tolerance);
  }
  return report.all_passed() ? kExitPass : kExitFail;
}

int cmd_certify(Options& o, const std::string& pattern_text) {
  const kron::PatternGraph pattern =
      kron::parse_pattern(load_pattern(pattern_text));
  const kron::CertificateReport cert =
      kron::second_moment_certificate(o.config.params(), pattern);
  json entries = json::array();
  for (const auto& e : cert.entries) {
    entries.push_back({{"union", kron::describe_pattern(e.pattern.graph)},
                       {"base_value", kron::round12(e.base_value)},
                       {"margin", kron::round12(e.margin)},
                       {"verdict", kron::to_string(e.verdict)}});
  }
  const json j = {{"schema", kron::kReportSchema},
                  {"version", kron::kVersion},
                  {"pattern", kron::describe_pattern(pattern)},
                  {"alpha", kron::round12(o.config.alpha)},
                  {"beta", kron::round12(o.config.beta)},
                  {"gamma", kron::round12(o.config.gamma)},
                  {"base_value", kron::round12(cert.base_value)},
                  {"squared_base_value", kron::round12(cert.squared_base_value)},
                  {"unions", entries},
                  {"verdict", kron::to_string(cert.verdict)}};
  write_text(o.out, j.dump(2) + "\n");
  return cert.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic Kronecker graph generator and validator"};
  app.set_version_flag("--version", kron::kVersion);
  app.require_subcommand(1);
  Options o;
  std::string pattern_text;

  auto* gen = app.add_subcommand("generate", "sample one graph as an edge list");
  add_model_flags(gen, o);
  add_generator_flags(gen, o);
  gen->add_option("--seed", o.config.seed, "root seed")->capture_default_str();
  gen->add_option("-o,--out", o.out, "output file ('-' = stdout)");

  auto* pred = app.add_subcommand("predict", "analytic predictions only");
  add_model_flags(pred, o);
  pred->add_option("--max-degree", o.config.checked_degrees,
                   "report degrees 0..d")
      ->capture_default_str();
  pred->add_option("--format", o.format, "json | csv")->capture_default_str();
  pred->add_option("-o,--out", o.out, "output file ('-' = stdout)");

  auto* meas = app.add_subcommand("measure", "measure an edge-list file");
  meas->add_option("-i,--in", o.in, "edge-list file")->required();
  meas->add_option("--pattern", pattern_text, "count labeled copies");
  meas->add_option("-o,--out", o.out, "output file ('-' = stdout)");

  auto* val = app.add_subcommand("validate", "run an experiment and compare");
  add_model_flags(val, o);
  add_generator_flags(val, o);
  val->add_option("--seed", o.config.seed, "root seed")->required();
  val->add_option("--experiment", o.experiment,
                  "degrees | subgraph[:pattern] | hamming | regime | thresholds")
      ->capture_default_str();
  val->add_option("--pattern", o.config.pattern, "pattern for subgraph/thresholds")
      ->capture_default_str();
  val->add_option("--trials", o.config.trials, "independent trials")
      ->capture_default_str();
  val->add_option("--checked-degrees", o.config.checked_degrees,
                  "z-test degrees 0..d")
      ->capture_default_str();
  val->add_option("--sweep-min", o.config.sweep_min)->capture_default_str();
  val->add_option("--sweep-max", o.config.sweep_max)->capture_default_str();
  val->add_option("--sweep-points", o.config.sweep_points)
      ->capture_default_str();
  val->add_option("--format", o.format, "json | csv")->capture_default_str();
  val->add_option("-o,--out", o.out, "report file ('-' = stdout)");
  val->add_option("--dump-dir", o.dump_dir, "write each trial's edge list here");

  auto* cert = app.add_subcommand("certify", "second-moment certificate");
  add_model_flags(cert, o);
  cert->add_option("--pattern", pattern_text, "pattern")->required();
  cert->add_option("-o,--out", o.out, "output file ('-' = stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(o);
    if (*pred) return cmd_predict(o);
    if (*meas) return cmd_measure(o, pattern_text);
    if (*val) return cmd_validate(o);
    if (*cert) return cmd_certify(o, pattern_text);
  } catch (const std::logic_error& e) {  // parameter/capacity/unsupported
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const kron::FormatError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFail;
  }
  return kExitUsage;
}
