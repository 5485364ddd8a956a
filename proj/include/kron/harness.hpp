#ifndef KRON_HARNESS_HPP_
#define KRON_HARNESS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kron/core_model.hpp"
#include "kron/generator.hpp"
#include "kron/patterns.hpp"

namespace kron {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kReportSchema = 1;

enum class GeneratorKind { kNaive, kStratified, kRmat };
enum class ExperimentKind { kDegrees, kSubgraph, kHamming, kRegime, kThresholds };

[[nodiscard]] std::string to_string(GeneratorKind kind);
[[nodiscard]] std::string to_string(ExperimentKind kind);
// Throw ParameterError on unknown names.
[[nodiscard]] GeneratorKind parse_generator_kind(const std::string& name);
[[nodiscard]] ExperimentKind parse_experiment_kind(const std::string& name);

struct ExperimentConfig {
  double alpha = 0.5;
  double beta = 0.5;
  double gamma = 0.5;
  unsigned n = 10;
  GeneratorKind generator = GeneratorKind::kStratified;
  std::uint64_t rmat_pairs = 0;  // R-MAT m; 0 = 2^n
  bool include_loops = true;
  unsigned trials = 1;
  std::uint64_t seed = 0;
  ExperimentKind kind = ExperimentKind::kDegrees;
  std::string pattern = "cycle:4";  // subgraph / thresholds
  unsigned checked_degrees = 6;     // degrees: z-test for d = 0..this
  // thresholds: alpha = gamma swept over [sweep_min, sweep_max].
  double sweep_min = 0.3;
  double sweep_max = 0.8;
  unsigned sweep_points = 6;
  unsigned workers = 0;
  GeneratorLimits limits{};
  std::optional<std::filesystem::path> dump_dir;  // per-trial edge lists

  // Throws ParameterError with a message naming the offending field;
  // called by run() before any generation.
  void validate() const;
  [[nodiscard]] KroneckerParams params() const {
    return {alpha, beta, gamma, n};
  }
};

// One analytic number with the result it comes from.
struct AnalyticValue {
  std::string name;
  double value = 0.0;
  std::string provenance;
};

struct Criterion {
  std::string name;
  double statistic = 0.0;
  std::string comparison;  // "<=" or ">="
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

// Flat table for CSV output.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct ValidationReport {
  ExperimentConfig config;
  std::vector<AnalyticValue> analytic;
  nlohmann::json empirical = nlohmann::json::object();
  std::vector<Criterion> criteria;
  Table table;
  std::string summary;

  [[nodiscard]] bool all_passed() const noexcept;
};

// Generates one trial with the configured generator on substream
// seed.child(trial).
[[nodiscard]] SampledGraph generate_trial(const ExperimentConfig& config,
                                          unsigned trial, unsigned workers);

// Validates the config, runs all trials and compares with predictions.
[[nodiscard]] ValidationReport run(const ExperimentConfig& config);

[[nodiscard]] nlohmann::json to_json(const ValidationReport& report);
[[nodiscard]] std::string to_csv(const Table& table);

enum class ReportFormat { kJson, kCsv };

// Writes the report; throws std::runtime_error on I/O failure.
void emit(const ValidationReport& report, ReportFormat format,
          const std::filesystem::path& path);

// Rounds to 12 significant digits (the serialization precision).
[[nodiscard]] double round12(double x);

}  // namespace kron

#endif  // KRON_HARNESS_HPP_
