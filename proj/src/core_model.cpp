#include "kron/core_model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "kron/errors.hpp"

namespace kron {
namespace {

bool is_open_unit(double x) { return x > 0.0 && x < 1.0; }

std::uint64_t digit_mask(unsigned n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void require_same_digits(VertexId u, VertexId v) {
  if (u.n() != v.n()) {
    throw DimensionError("vertices have different digit counts: " +
                         std::to_string(u.n()) + " vs " +
                         std::to_string(v.n()));
  }
}

}  // namespace

KroneckerParams::KroneckerParams(double alpha, double beta, double gamma,
                                 unsigned n)
    : alpha_(alpha), beta_(beta), gamma_(gamma), n_(n) {
  if (!is_open_unit(alpha) || !is_open_unit(beta) || !is_open_unit(gamma)) {
    throw ParameterError("alpha, beta, gamma must lie strictly in (0,1)");
  }
  if (n < 1 || n > kMaxDigits) {
    throw ParameterError("digit count n must be in [1, 64], got " +
                         std::to_string(n));
  }
  log_alpha_ = std::log(alpha);
  log_beta_ = std::log(beta);
  log_gamma_ = std::log(gamma);
}

double KroneckerParams::entry(unsigned x, unsigned y) const noexcept {
  if (x != y) return beta_;
  return x != 0 ? alpha_ : gamma_;
}

VertexId::VertexId(std::uint64_t bits, unsigned n) : bits_(bits), n_(n) {
  if (n < 1 || n > 64) {
    throw DimensionError("vertex digit count must be in [1, 64]");
  }
  if ((bits & ~digit_mask(n)) != 0) {
    throw DimensionError("vertex has set bits above digit " +
                         std::to_string(n - 1));
  }
}

unsigned weight(VertexId v) noexcept {
  return static_cast<unsigned>(std::popcount(v.bits()));
}

unsigned hamming(VertexId u, VertexId v) {
  require_same_digits(u, v);
  return static_cast<unsigned>(std::popcount(u.bits() ^ v.bits()));
}

PairClass pair_class_bits(std::uint64_t u, std::uint64_t v,
                          unsigned n) noexcept {
  PairClass cls;
  cls.both_one = static_cast<unsigned>(std::popcount(u & v));
  cls.both_zero = n - static_cast<unsigned>(std::popcount(u | v));
  cls.mixed = n - cls.both_one - cls.both_zero;
  return cls;
}

PairClass pair_class(VertexId u, VertexId v) {
  require_same_digits(u, v);
  return pair_class_bits(u.bits(), v.bits(), u.n());
}

double class_log_probability(const KroneckerParams& p,
                             PairClass cls) noexcept {
  return cls.both_one * p.log_alpha() + cls.mixed * p.log_beta() +
         cls.both_zero * p.log_gamma();
}

double class_probability(const KroneckerParams& p, PairClass cls) noexcept {
  return std::exp(class_log_probability(p, cls));
}

double edge_probability(const KroneckerParams& p, VertexId u, VertexId v) {
  if (u.n() != p.n() || v.n() != p.n()) {
    throw DimensionError("vertex digit count does not match n = " +
                         std::to_string(p.n()));
  }
  return class_probability(p, pair_class_bits(u.bits(), v.bits(), p.n()));
}

void normalize(SampledGraph& g) {
  const std::uint64_t limit = g.params.n() >= 32
                                  ? std::uint64_t{1} << 32
                                  : g.params.vertex_count();
  auto check = [&](Vertex x) {
    if (x >= limit) {
      throw DimensionError("vertex " + std::to_string(x) +
                           " outside the vertex universe");
    }
  };
  std::vector<Edge> kept;
  kept.reserve(g.edges.size());
  for (auto [u, v] : g.edges) {
    check(u);
    check(v);
    if (u == v) {
      g.loops.push_back(u);
    } else {
      kept.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  for (Vertex x : g.loops) check(x);
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  g.edges = std::move(kept);
  std::sort(g.loops.begin(), g.loops.end());
  g.loops.erase(std::unique(g.loops.begin(), g.loops.end()), g.loops.end());
}

}  // namespace kron
