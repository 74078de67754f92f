#pragma once

// Rank-2 lattices in the trace-zero plane of R^3 (log-unit lattices of cubic
// fields): l-infinity basis reduction and the short-vector lemma behind the
// cubic facet count.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace pisot {

struct Rank2Basis {
  Eigen::Vector3d b1;
  Eigen::Vector3d b2;
  double lambda_inf = 0.0;  ///< ||b1||_inf, the first l-infinity minimum
  /// Columns give the output vectors in terms of the input ones: [b1 b2] = [in1 in2] * transform.
  Eigen::Matrix2i transform = Eigen::Matrix2i::Identity();
  /// |alpha|, |beta|, |alpha+beta|, |gamma|, |delta|, |gamma+delta| all nonzero.
  bool nondegenerate = false;
};

/// Greedy reduction to ||b1|| <= ||b2|| <= ||b1 +- b2|| (l-infinity).
/// Throws ValidationError for dependent vectors or vectors off the plane sum x = 0.
Rank2Basis reduce_basis_linf_rank2(const Eigen::Vector3d& b1, const Eigen::Vector3d& b2);

/// Checks ||b1|| <= ||b2|| <= min(||b1 + b2||, ||b1 - b2||) up to a relative 1e-12.
bool satisfies_reduction_inequality(const Rank2Basis& basis);

/// (|x|, |y|) pairs exempt from the 2 lambda lower bound.
bool in_exceptional_set(std::int64_t x, std::int64_t y);

/// Every (x, y) with |x|, |y| <= bound, (|x|,|y|) outside the exceptional set
/// and ||x b1 + y b2||_inf < 2 lambda.
std::vector<std::pair<int, int>> lemma6_scan(const Rank2Basis& basis, int bound);

/// Smallest ||x b1 + y b2||_inf / lambda over the pairs lemma6_scan examines.
double lemma6_min_ratio(const Rank2Basis& basis, int bound);

/// sqrt(1 + (u^2 - 1)^2), for a cubic Pisot unit of modulus u > 1.
double cubic_t_bound(double u_modulus);

struct CubicFacetCandidates {
  double threshold = 0.0;  ///< (1/2) log(1 + (exp(2 lambda) - 1)^2)
  std::vector<std::pair<int, int>> solutions;
  bool contained_in_exceptional_set = false;
};

/// Nonzero (x, y), |x|, |y| <= 10, with ||x b1 + y b2||_inf <= threshold.
CubicFacetCandidates cubic_facet_candidates(const Rank2Basis& basis, double lambda_inf);

struct Lemma6Survey {
  int samples = 0;
  int rejected = 0;            ///< degenerate draws discarded before reduction
  int violations = 0;
  int bases_with_violations = 0;
  double min_ratio = 0.0;      ///< smallest ||v|| / lambda outside the exceptional set
  double min_lambda = 0.0;
  double max_lambda = 0.0;
};

/// Draws `samples` bases with entries uniform in [-1, 1] (third coordinate
/// fixed by the trace-zero condition), rejecting degenerate ones, reduces
/// them and runs lemma6_scan on each.
Lemma6Survey lemma6_survey(int samples, std::uint64_t seed, int bound);

}  // namespace pisot
