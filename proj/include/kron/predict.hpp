#ifndef KRON_PREDICT_HPP_
#define KRON_PREDICT_HPP_

#include <optional>
#include <string>

#include "kron/core_model.hpp"

namespace kron {

// Tolerance for regime boundaries such as alpha + beta = 1.
inline constexpr double kBoundaryTolerance = 1e-12;

// Degree statistics of a vertex of weight w (loops included).
struct DegreeMoments {
  unsigned weight = 0;
  double mean = 0.0;          // (a+b)^w (b+g)^(n-w)
  double sum_sq_probs = 0.0;  // (a^2+b^2)^w (b^2+g^2)^(n-w)
  double variance = 0.0;      // mean - sum_sq_probs
};

// Throws ParameterError unless w <= n.
[[nodiscard]] DegreeMoments degree_moments(const KroneckerParams& p,
                                           unsigned w);

// Poisson-mixture prediction of the number of degree-d vertices:
// sum_w C(n,w) lambda_w^d e^{-lambda_w} / d!, lambda_w = mean degree at
// weight w. Evaluated term by term in log space.
[[nodiscard]] double expected_degree_count(const KroneckerParams& p,
                                           unsigned d);

[[nodiscard]] double poisson_pmf(double lambda, unsigned d);

// Which of the two growth statements holds for the number of degree-d
// vertices.
enum class GrowthOrder {
  kTheta,       // Theta(((a+b)^d + (b+g)^d)^n)
  kLittleOTwoN  // o(2^n)
};

// Sub-case of case 3 (b+g < 1 < a+b), comparing c1 and c2.
enum class Case3Split { kNone, kC1BelowC2, kC1EqualsC2, kC1AboveC2 };

struct RegimeVerdict {
  int case_id = 0;  // 1..6
  Case3Split split = Case3Split::kNone;
  GrowthOrder order = GrowthOrder::kTheta;
  double theta_base = 0.0;  // (a+b)^d + (b+g)^d when order == kTheta
  bool power_law_possible = false;
  bool boundary = false;  // the case rests on an equality (1e-12 test)
  bool swapped = false;   // b+g > a+b, roles exchanged
  double c1 = 0.0;        // case 3 only
  double c2 = 0.0;        // case 3 only
  std::string condition;  // e.g. "b+g < a+b = 1"
  std::string summary;    // human-readable verdict
};

[[nodiscard]] RegimeVerdict classify_regime(const KroneckerParams& p,
                                            unsigned d);

[[nodiscard]] std::string to_string(GrowthOrder order);
[[nodiscard]] std::string to_string(Case3Split split);

// psi(c) = (beta/c)^c (alpha/(1-c))^(1-c). Throws ParameterError unless
// 0 < c < 1.
[[nodiscard]] double psi(const KroneckerParams& p, double c);

enum class CriticalSide { kBelow, kAbove };

struct CriticalFraction {
  std::optional<double> c;  // root of psi(c) = 1/2, when one exists
  CriticalSide side = CriticalSide::kBelow;  // relative to beta/(alpha+beta)
};

// Requires alpha == gamma (within tolerance) and alpha + beta > 1; throws
// ParameterError otherwise.
[[nodiscard]] CriticalFraction critical_fraction(const KroneckerParams& p);

// Expected number of neighbours of any vertex at Hamming distance k:
// C(n,k) alpha^(n-k) beta^k. Requires alpha == gamma and k <= n.
[[nodiscard]] double hamming_profile_prediction(const KroneckerParams& p,
                                                unsigned k);

// Concentration window for neighbour distances: center beta n/(alpha+beta),
// half-width sqrt(2 beta/(alpha+beta)) log(n) sqrt(n).
struct HammingWindow {
  double center = 0.0;
  double half_width = 0.0;
  [[nodiscard]] bool contains(double k) const noexcept {
    return k >= center - half_width && k <= center + half_width;
  }
};
[[nodiscard]] HammingWindow hamming_window(const KroneckerParams& p);

// Exact expected number of non-loop edges {u,w} whose Hamming distance is
// strictly below (kBelow) or strictly above (kAbove) `distance`, i.e.
// sum over qualifying i >= 1 of 2^(n-1) C(n,i) alpha^(n-i) beta^i.
// Requires alpha == gamma.
[[nodiscard]] double expected_edges_beyond(const KroneckerParams& p,
                                           double distance, CriticalSide side);

// Exact expected number of non-loop edges at Hamming distance exactly k.
[[nodiscard]] double expected_edges_at_distance(const KroneckerParams& p,
                                                unsigned k);

// Log of the binomial coefficient via lgamma.
[[nodiscard]] double log_binomial(unsigned n, unsigned k);

[[nodiscard]] bool nearly_equal(double x, double y,
                                double tol = kBoundaryTolerance) noexcept;

// Requires alpha == gamma within kBoundaryTolerance; throws ParameterError
// naming `what` otherwise.
void require_symmetric(const KroneckerParams& p, const char* what);

}  // namespace kron

#endif  // KRON_PREDICT_HPP_
