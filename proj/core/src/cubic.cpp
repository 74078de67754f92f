#include "pisot/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "pisot/field.hpp"

namespace pisot {

namespace {

double linf(const Eigen::Vector3d& v) { return v.cwiseAbs().maxCoeff(); }

bool nondegenerate(const Eigen::Vector3d& b1, const Eigen::Vector3d& b2) {
  const double tiny = 1e-12 * std::max(linf(b1), linf(b2));
  for (const auto& b : {b1, b2}) {
    if (std::abs(b[0]) <= tiny || std::abs(b[1]) <= tiny || std::abs(b[0] + b[1]) <= tiny) return false;
  }
  return true;
}

// Integer k minimising ||b2 - k b1||. The norm is convex in k, so walking
// downhill from the nearest integer to the Euclidean optimum finds it.
std::int64_t best_shift(const Eigen::Vector3d& b1, const Eigen::Vector3d& b2) {
  auto cost = [&](std::int64_t k) { return linf(b2 - static_cast<double>(k) * b1); };
  std::int64_t k = std::llround(b1.dot(b2) / b1.squaredNorm());
  for (int dir : {-1, 1}) {
    while (cost(k + dir) < cost(k)) k += dir;
  }
  if (cost(0) <= cost(k)) return 0;
  return k;
}

}  // namespace

Rank2Basis reduce_basis_linf_rank2(const Eigen::Vector3d& in1, const Eigen::Vector3d& in2) {
  const double scale = std::max(linf(in1), linf(in2));
  if (!(scale > 0.0) || !in1.allFinite() || !in2.allFinite()) throw ValidationError("reduce_basis_linf_rank2: zero or non-finite vector");
  if (std::abs(in1.sum()) > 1e-9 * scale || std::abs(in2.sum()) > 1e-9 * scale) {
    throw ValidationError("reduce_basis_linf_rank2: vectors must have zero coordinate sum");
  }
  if (in1.cross(in2).norm() <= 1e-12 * in1.norm() * in2.norm()) {
    throw ValidationError("reduce_basis_linf_rank2: vectors are linearly dependent");
  }

  Rank2Basis out;
  out.b1 = in1;
  out.b2 = in2;
  for (int guard = 0; guard < 10'000; ++guard) {
    if (linf(out.b2) < linf(out.b1)) {
      std::swap(out.b1, out.b2);
      out.transform.col(0).swap(out.transform.col(1));
    }
    const std::int64_t k = best_shift(out.b1, out.b2);
    if (k == 0) break;
    out.b2 -= static_cast<double>(k) * out.b1;
    out.transform.col(1) -= static_cast<int>(k) * out.transform.col(0);
  }
  // Sign normalisation keeps the output deterministic for inputs differing by sign.
  if (out.b1[0] < 0.0) {
    out.b1 = -out.b1;
    out.transform.col(0) = -out.transform.col(0);
  }
  if (out.b2[0] < 0.0) {
    out.b2 = -out.b2;
    out.transform.col(1) = -out.transform.col(1);
  }
  out.lambda_inf = linf(out.b1);
  out.nondegenerate = nondegenerate(out.b1, out.b2);
  return out;
}

bool satisfies_reduction_inequality(const Rank2Basis& basis) {
  const double n1 = linf(basis.b1);
  const double n2 = linf(basis.b2);
  const double slack = 1e-12 * n2;
  return n1 <= n2 + slack && n2 <= linf(basis.b1 + basis.b2) + slack && n2 <= linf(basis.b1 - basis.b2) + slack;
}

bool in_exceptional_set(std::int64_t x, std::int64_t y) {
  x = std::abs(x);
  y = std::abs(y);
  return (x <= 1 && y <= 1) || (x == 2 && y == 1) || (x == 1 && y == 2);
}

std::vector<std::pair<int, int>> lemma6_scan(const Rank2Basis& basis, int bound) {
  std::vector<std::pair<int, int>> out;
  const double limit = 2.0 * basis.lambda_inf * (1.0 - 1e-12);
  for (int x = -bound; x <= bound; ++x) {
    for (int y = -bound; y <= bound; ++y) {
      if (in_exceptional_set(x, y)) continue;
      if (linf(x * basis.b1 + y * basis.b2) < limit) out.emplace_back(x, y);
    }
  }
  return out;
}

double lemma6_min_ratio(const Rank2Basis& basis, int bound) {
  double best = std::numeric_limits<double>::infinity();
  for (int x = -bound; x <= bound; ++x) {
    for (int y = -bound; y <= bound; ++y) {
      if (!in_exceptional_set(x, y)) best = std::min(best, linf(x * basis.b1 + y * basis.b2) / basis.lambda_inf);
    }
  }
  return best;
}

double cubic_t_bound(double u_modulus) {
  if (!(u_modulus > 1.0) || !std::isfinite(u_modulus)) throw ValidationError("cubic_t_bound: modulus must exceed 1");
  const double d = u_modulus * u_modulus - 1.0;
  return std::sqrt(1.0 + d * d);
}

CubicFacetCandidates cubic_facet_candidates(const Rank2Basis& basis, double lambda_inf) {
  if (!(lambda_inf > 0.0)) throw ValidationError("cubic_facet_candidates: lambda must be positive");
  CubicFacetCandidates out;
  const double e = std::expm1(2.0 * lambda_inf);
  out.threshold = 0.5 * std::log1p(e * e);
  out.contained_in_exceptional_set = true;
  for (int x = -10; x <= 10; ++x) {
    for (int y = -10; y <= 10; ++y) {
      if (x == 0 && y == 0) continue;
      if (linf(x * basis.b1 + y * basis.b2) <= out.threshold * (1.0 + 1e-12)) {
        out.solutions.emplace_back(x, y);
        out.contained_in_exceptional_set = out.contained_in_exceptional_set && in_exceptional_set(x, y);
      }
    }
  }
  return out;
}

Lemma6Survey lemma6_survey(int samples, std::uint64_t seed, int bound) {
  if (samples < 0 || bound < 1) throw ValidationError("lemma6_survey: samples must be >= 0 and bound >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  auto draw = [&] {
    const double x = unif(rng);
    const double y = unif(rng);
    return Eigen::Vector3d(x, y, -x - y);
  };

  Lemma6Survey out;
  out.min_ratio = std::numeric_limits<double>::infinity();
  out.min_lambda = std::numeric_limits<double>::infinity();
  while (out.samples < samples) {
    const Eigen::Vector3d b1 = draw();
    const Eigen::Vector3d b2 = draw();
    if (b1.cross(b2).norm() < 1e-9) {
      ++out.rejected;
      continue;
    }
    const Rank2Basis basis = reduce_basis_linf_rank2(b1, b2);
    if (!basis.nondegenerate) {
      ++out.rejected;
      continue;
    }
    ++out.samples;
    const auto found = lemma6_scan(basis, bound);
    out.violations += static_cast<int>(found.size());
    out.bases_with_violations += found.empty() ? 0 : 1;
    out.min_ratio = std::min(out.min_ratio, lemma6_min_ratio(basis, bound));
    out.min_lambda = std::min(out.min_lambda, basis.lambda_inf);
    out.max_lambda = std::max(out.max_lambda, basis.lambda_inf);
  }
  if (out.samples == 0) out.min_ratio = out.min_lambda = 0.0;
  return out;
}

}  // namespace pisot
