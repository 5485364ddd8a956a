#include "kron/predict.hpp"

#include <cmath>
#include <string>

#include "kron/errors.hpp"

namespace kron {
namespace {

// Root of a monotone function on (lo, hi) given the sign convention of the
// endpoints. Stops when the bracket is below `tol`.
template <typename F>
double bisect(F f, double lo, double hi, bool increasing, double tol) {
  for (int iter = 0; iter < 400 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const bool above = f(mid) > 0.0;
    if (above == increasing) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double log_psi(const KroneckerParams& p, double c) {
  return c * std::log(p.beta() / c) +
         (1.0 - c) * std::log(p.alpha() / (1.0 - c));
}

double log_binomial_exact(unsigned n, unsigned k) {
  // Multiplicative evaluation is exact in double for n <= 60 or so and
  // more accurate than lgamma differences for small n.
  if (k > n) return -INFINITY;
  k = std::min(k, n - k);
  double value = 1.0;
  for (unsigned i = 1; i <= k; ++i) {
    value = value * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return std::log(value);
}

}  // namespace

bool nearly_equal(double x, double y, double tol) noexcept {
  return std::abs(x - y) <= tol;
}

void require_symmetric(const KroneckerParams& p, const char* what) {
  if (!nearly_equal(p.alpha(), p.gamma())) {
    throw ParameterError(std::string(what) + " requires alpha == gamma");
  }
}

double log_binomial(unsigned n, unsigned k) {
  if (k > n) return -INFINITY;
  if (n <= 60) return log_binomial_exact(n, k);
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
         std::lgamma(n - k + 1.0);
}

DegreeMoments degree_moments(const KroneckerParams& p, unsigned w) {
  if (w > p.n()) {
    throw ParameterError("weight " + std::to_string(w) + " exceeds n = " +
                         std::to_string(p.n()));
  }
  const double a = p.alpha();
  const double b = p.beta();
  const double g = p.gamma();
  const unsigned rest = p.n() - w;
  DegreeMoments m;
  m.weight = w;
  m.mean = std::exp(w * std::log(a + b) + rest * std::log(b + g));
  m.sum_sq_probs =
      std::exp(w * std::log(a * a + b * b) + rest * std::log(b * b + g * g));
  m.variance = m.mean - m.sum_sq_probs;
  return m;
}

double poisson_pmf(double lambda, unsigned d) {
  return std::exp(d * std::log(lambda) - lambda - std::lgamma(d + 1.0));
}

double expected_degree_count(const KroneckerParams& p, unsigned d) {
  const unsigned n = p.n();
  const double log_s = std::log(p.alpha() + p.beta());
  const double log_t = std::log(p.beta() + p.gamma());
  const double log_fact = std::lgamma(d + 1.0);
  double total = 0.0;
  for (unsigned w = 0; w <= n; ++w) {
    const double log_lambda = w * log_s + (n - w) * log_t;
    total += std::exp(log_binomial(n, w) + d * log_lambda -
                      std::exp(log_lambda) - log_fact);
  }
  return total;
}

std::string to_string(GrowthOrder order) {
  return order == GrowthOrder::kTheta ? "Theta(((a+b)^d+(b+g)^d)^n)"
                                      : "o(2^n)";
}

std::string to_string(Case3Split split) {
  switch (split) {
    case Case3Split::kC1BelowC2:
      return "c1 < c2";
    case Case3Split::kC1EqualsC2:
      return "c1 = c2";
    case Case3Split::kC1AboveC2:
      return "c1 > c2";
    case Case3Split::kNone:
      break;
  }
  return "none";
}

RegimeVerdict classify_regime(const KroneckerParams& p, unsigned d) {
  double s = p.alpha() + p.beta();
  double t = p.beta() + p.gamma();
  RegimeVerdict v;
  if (t > s && !nearly_equal(s, t)) {
    std::swap(s, t);
    v.swapped = true;
  }
  const double sd = std::pow(s, d);
  const double td = std::pow(t, d);
  const bool s_is_one = nearly_equal(s, 1.0);
  const bool t_is_one = nearly_equal(t, 1.0);
  auto theta = [&] {
    v.order = GrowthOrder::kTheta;
    v.theta_base = sd + td;
  };

  // Labels use the oriented sums: S >= T after the swap.
  if (s_is_one && t_is_one) {
    v.case_id = 6;
    v.condition = "a+b = b+g = 1";
    v.boundary = true;
    v.power_law_possible = true;
    theta();
  } else if (s_is_one) {
    v.case_id = 1;
    v.condition = "T < S = 1";
    v.boundary = true;
    theta();
  } else if (s > 1.0) {
    if (t_is_one) {
      v.case_id = 2;
      v.condition = "1 = T < S";
      v.boundary = true;
      v.order = GrowthOrder::kLittleOTwoN;
    } else if (t < 1.0) {
      v.case_id = 3;
      v.condition = "T < 1 < S";
      v.c1 = sd / (sd + td);
      const double log_s = std::log(s);
      const double log_t = std::log(t);
      v.c2 = bisect([&](double c) { return c * log_s + (1.0 - c) * log_t; },
                    0.0, 1.0, true, 1e-16);
      if (nearly_equal(v.c1, v.c2)) {
        v.split = Case3Split::kC1EqualsC2;
        v.boundary = true;
        theta();
      } else if (v.c1 < v.c2) {
        v.split = Case3Split::kC1BelowC2;
        theta();
      } else {
        v.split = Case3Split::kC1AboveC2;
        v.order = GrowthOrder::kLittleOTwoN;
      }
    } else {
      v.case_id = 5;
      v.condition = "1 < T <= S";
      v.order = GrowthOrder::kLittleOTwoN;
    }
  } else {
    v.case_id = 4;
    v.condition = "T <= S < 1";
    theta();
  }

  std::string text = "case " + std::to_string(v.case_id);
  if (v.split != Case3Split::kNone) text += " (" + to_string(v.split) + ")";
  text += " [" + v.condition + "], S = " + std::to_string(s) +
          ", T = " + std::to_string(t) + ": ";
  if (v.order == GrowthOrder::kTheta) {
    text += "degree-" + std::to_string(d) + " count is Theta(" +
            std::to_string(v.theta_base) + "^n)";
  } else {
    text += "degree-" + std::to_string(d) + " count is o(2^n)";
  }
  text += v.power_law_possible
              ? "; Poisson(1) degree law with 2^n/(e d!) vertices of degree d,"
                " not a power law"
              : "; no power law";
  if (v.boundary) text += " (boundary)";
  v.summary = std::move(text);
  return v;
}

double psi(const KroneckerParams& p, double c) {
  if (!(c > 0.0 && c < 1.0)) {
    throw ParameterError("psi is defined for c in (0,1)");
  }
  return std::exp(log_psi(p, c));
}

CriticalFraction critical_fraction(const KroneckerParams& p) {
  require_symmetric(p, "critical_fraction");
  const double a = p.alpha();
  const double b = p.beta();
  if (!(a + b > 1.0)) {
    throw ParameterError("critical_fraction requires alpha + beta > 1");
  }
  const double peak = b / (a + b);
  const double log_half = std::log(0.5);
  auto f = [&](double c) { return log_psi(p, c) - log_half; };
  CriticalFraction out;
  if (a < 0.5) {
    out.c = bisect(f, 0.0, peak, true, 1e-15);
    out.side = CriticalSide::kBelow;
  } else if (b < 0.5) {
    out.c = bisect(f, peak, 1.0, false, 1e-15);
    out.side = CriticalSide::kAbove;
  }
  return out;
}

double hamming_profile_prediction(const KroneckerParams& p, unsigned k) {
  require_symmetric(p, "hamming_profile_prediction");
  if (k > p.n()) {
    throw ParameterError("distance " + std::to_string(k) + " exceeds n");
  }
  return std::exp(log_binomial(p.n(), k) + (p.n() - k) * p.log_alpha() +
                  k * p.log_beta());
}

HammingWindow hamming_window(const KroneckerParams& p) {
  const double frac = p.beta() / (p.alpha() + p.beta());
  const double n = p.n();
  return {frac * n, std::sqrt(2.0 * frac) * std::log(n) * std::sqrt(n)};
}

double expected_edges_at_distance(const KroneckerParams& p, unsigned k) {
  require_symmetric(p, "expected_edges_at_distance");
  if (k == 0 || k > p.n()) return 0.0;
  return std::exp((p.n() - 1) * std::log(2.0) + log_binomial(p.n(), k) +
                  (p.n() - k) * p.log_alpha() + k * p.log_beta());
}

double expected_edges_beyond(const KroneckerParams& p, double distance,
                             CriticalSide side) {
  double total = 0.0;
  for (unsigned k = 1; k <= p.n(); ++k) {
    const bool beyond = side == CriticalSide::kBelow ? k < distance
                                                     : k > distance;
    if (beyond) total += expected_edges_at_distance(p, k);
  }
  return total;
}

}  // namespace kron
