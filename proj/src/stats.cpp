#include "kron/stats.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>

namespace kron {

void RunningStats::add(double x) noexcept {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

void RunningStats::merge(const RunningStats& other) noexcept {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const double total = static_cast<double>(count_ + other.count_);
  const double delta = other.mean_ - mean_;
  mean_ += delta * static_cast<double>(other.count_) / total;
  m2_ += other.m2_ + delta * delta * static_cast<double>(count_) *
                         static_cast<double>(other.count_) / total;
  count_ += other.count_;
}

double RunningStats::variance() const noexcept {
  return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1);
}

double RunningStats::standard_error() const noexcept {
  return count_ == 0 ? 0.0 : std::sqrt(variance() / static_cast<double>(count_));
}

double chi_square_survival(double statistic, double dof) {
  if (dof <= 0.0) return 1.0;
  const boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, std::max(statistic, 0.0)));
}

ChiSquareResult two_sample_chi_square(std::span<const std::int64_t> first,
                                      std::span<const std::int64_t> second,
                                      double min_expected) {
  std::map<std::int64_t, std::pair<double, double>> bins;
  for (std::int64_t x : first) bins[x].first += 1.0;
  for (std::int64_t x : second) bins[x].second += 1.0;

  // Merge neighbouring values left to right until each bin is large enough;
  // a small remainder joins the last bin.
  std::vector<std::pair<double, double>> merged;
  std::pair<double, double> acc{0.0, 0.0};
  for (const auto& [value, counts] : bins) {
    acc.first += counts.first;
    acc.second += counts.second;
    if ((acc.first + acc.second) / 2.0 >= min_expected) {
      merged.push_back(acc);
      acc = {0.0, 0.0};
    }
  }
  if (acc.first + acc.second > 0.0) {
    if (merged.empty()) {
      merged.push_back(acc);
    } else {
      merged.back().first += acc.first;
      merged.back().second += acc.second;
    }
  }

  ChiSquareResult result;
  const double n1 = static_cast<double>(first.size());
  const double n2 = static_cast<double>(second.size());
  if (merged.size() < 2 || n1 == 0.0 || n2 == 0.0) return result;
  const double total = n1 + n2;
  for (const auto& [a, b] : merged) {
    const double row = a + b;
    const double e1 = row * n1 / total;
    const double e2 = row * n2 / total;
    result.statistic += (a - e1) * (a - e1) / e1 + (b - e2) * (b - e2) / e2;
  }
  result.dof = static_cast<double>(merged.size() - 1);
  result.p_value = chi_square_survival(result.statistic, result.dof);
  return result;
}

ChiSquareResult combine(std::span<const ChiSquareResult> parts) {
  ChiSquareResult out;
  for (const auto& part : parts) {
    out.statistic += part.statistic;
    out.dof += part.dof;
  }
  out.p_value = chi_square_survival(out.statistic, out.dof);
  return out;
}

double total_variation(const std::map<std::uint32_t, std::uint64_t>& counts,
                       std::span<const double> pmf) {
  double total = 0.0;
  for (const auto& [d, c] : counts) total += static_cast<double>(c);
  if (total == 0.0) return 0.0;
  double distance = 0.0;
  double covered = 0.0;
  for (std::size_t d = 0; d < pmf.size(); ++d) {
    const auto it = counts.find(static_cast<std::uint32_t>(d));
    const double empirical =
        it == counts.end() ? 0.0 : static_cast<double>(it->second) / total;
    distance += std::abs(empirical - pmf[d]);
    covered += pmf[d];
  }
  for (const auto& [d, c] : counts) {
    if (d >= pmf.size()) distance += static_cast<double>(c) / total;
  }
  distance += std::max(0.0, 1.0 - covered);
  return 0.5 * distance;
}

}  // namespace kron
