#ifndef KRON_STATS_HPP_
#define KRON_STATS_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace kron {

// Running mean / sample variance (Welford).
class RunningStats {
 public:
  void add(double x) noexcept;
  void merge(const RunningStats& other) noexcept;

  [[nodiscard]] std::uint64_t count() const noexcept { return count_; }
  [[nodiscard]] double mean() const noexcept { return mean_; }
  // Unbiased sample variance; 0 for fewer than two samples.
  [[nodiscard]] double variance() const noexcept;
  [[nodiscard]] double standard_error() const noexcept;

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// Upper tail probability of a chi-square variable.
[[nodiscard]] double chi_square_survival(double statistic, double dof);

struct ChiSquareResult {
  double statistic = 0.0;
  double dof = 0.0;
  double p_value = 1.0;
};

// Two-sample homogeneity test on integer-valued samples. Values are binned
// and adjacent bins are merged until every bin holds at least
// `min_expected` pooled observations per sample on average.
[[nodiscard]] ChiSquareResult two_sample_chi_square(
    std::span<const std::int64_t> first, std::span<const std::int64_t> second,
    double min_expected = 5.0);

// Sums independent chi-square tests (statistics and degrees of freedom).
[[nodiscard]] ChiSquareResult combine(std::span<const ChiSquareResult> parts);

// Total variation distance between an empirical histogram (counts) and a
// probability mass function given on 0..(pmf.size()-1); pmf mass beyond the
// vector is treated as belonging to no observed value.
[[nodiscard]] double total_variation(
    const std::map<std::uint32_t, std::uint64_t>& counts,
    std::span<const double> pmf);

}  // namespace kron

#endif  // KRON_STATS_HPP_
