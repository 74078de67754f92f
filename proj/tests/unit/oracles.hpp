#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share no code with the routines they check beyond the field data.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pisot/field.hpp"
#include "pisot/unit_lattice.hpp"

namespace oracle {

using pisot::Complex;

struct BoxMinimum {
  double mu = std::numeric_limits<double>::infinity();
  std::vector<std::int64_t> argmin;
  int box = 0;
};

/// Tr(a x x*) summed over all n embeddings of x = sum c_j omega_j.
inline double form_value(const pisot::FieldData& field, const pisot::TotallyPositiveElement& a,
                         const std::vector<std::int64_t>& c) {
  const auto& sig = field.signature();
  const auto& E = field.basis_embeddings();
  double total = 0.0;
  for (int i = 0; i < field.degree(); ++i) {
    Complex z(0.0, 0.0);
    for (int j = 0; j < field.degree(); ++j) z += E(i, j) * static_cast<double>(c[static_cast<std::size_t>(j)]);
    const int place = i < sig.archimedean() ? i : i - sig.s;
    total += a[place] * std::norm(z);
  }
  return total;
}

/// Coefficient box that must contain every x with Tr(a x x*) <= bound:
/// |sigma_i(x)| <= sqrt(bound / a_i) and c = E^{-1} sigma(x).
inline int coefficient_box(const pisot::FieldData& field, const pisot::TotallyPositiveElement& a, double bound) {
  const auto& sig = field.signature();
  const Eigen::MatrixXcd inv = field.basis_embeddings().inverse();
  double worst = 0.0;
  for (int j = 0; j < field.degree(); ++j) {
    double sum = 0.0;
    for (int i = 0; i < field.degree(); ++i) {
      const int place = i < sig.archimedean() ? i : i - sig.s;
      sum += std::abs(inv(j, i)) * std::sqrt(bound / a[place]);
    }
    worst = std::max(worst, sum);
  }
  return static_cast<int>(std::floor(worst + 1e-9));
}

/// Full scan of [-B, B]^n. Trace ties within 1e-9 relative go to the
/// lexicographically smallest coefficient vector.
inline BoxMinimum naive_integer_minimum(const pisot::FieldData& field, const pisot::TotallyPositiveElement& a,
                                        int box) {
  const int n = field.degree();
  std::vector<std::int64_t> c(static_cast<std::size_t>(n), -box);
  std::vector<std::pair<std::vector<std::int64_t>, double>> all;
  BoxMinimum out;
  out.box = box;
  for (;;) {
    bool zero = true;
    for (auto v : c) zero = zero && v == 0;
    if (!zero) {
      const double val = form_value(field, a, c);
      all.emplace_back(c, val);
      out.mu = std::min(out.mu, val);
    }
    int k = n - 1;
    while (k >= 0 && c[static_cast<std::size_t>(k)] == box) c[static_cast<std::size_t>(k--)] = -box;
    if (k < 0) break;
    ++c[static_cast<std::size_t>(k)];
  }
  for (const auto& [v, val] : all) {
    if (val <= out.mu + 1e-9 * out.mu && (out.argmin.empty() || v < out.argmin)) out.argmin = v;
  }
  return out;
}

/// Smallest unit > 1 of Z[omega] by increasing q: returns (p, q, denom).
inline std::tuple<std::int64_t, std::int64_t, int> brute_force_pell(std::int64_t d) {
  const bool half = d % 4 == 1;
  for (std::int64_t q = 1;; ++q) {
    // (p + q sqrt d) / denom with p^2 - d q^2 = +-denom^2.
    const std::int64_t dq2 = d * q * q;
    const int denom = half ? 2 : 1;
    for (int sign : {-1, 1}) {
      const std::int64_t target = dq2 + sign * denom * denom;
      if (target <= 0) continue;
      const auto p = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(target))));
      for (std::int64_t cand = p - 1; cand <= p + 1; ++cand) {
        if (cand > 0 && cand * cand == target && (!half || (cand - q) % 2 == 0)) return {cand, q, denom};
      }
    }
  }
}

/// Exhaustive l-infinity CVP over exponents in [-box, box]^rank; ties go to
/// the lexicographically smallest exponent vector.
inline std::pair<std::vector<std::int64_t>, double> exhaustive_cvp(const pisot::LogUnitLattice& lattice,
                                                                   const Eigen::VectorXd& target, int box) {
  const int k = lattice.rank();
  std::vector<std::int64_t> e(static_cast<std::size_t>(k), -box);
  std::vector<std::int64_t> best;
  double best_d = std::numeric_limits<double>::infinity();
  for (;;) {
    const double d = (lattice.point(e) - target).cwiseAbs().maxCoeff();
    if (d < best_d * (1.0 - 1e-12)) {
      best_d = d;
      best = e;
    }
    int i = k - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] == box) e[static_cast<std::size_t>(i--)] = -box;
    if (i < 0) break;
    ++e[static_cast<std::size_t>(i)];
  }
  return {best, best_d};
}

/// Monte Carlo estimate of the (n-1)-volume of C(R) cap {sum x = 0}, C(R) = [-R/2, R/2]^n.
/// Projecting along (1,...,1)/sqrt n, the section volume equals
/// R^{n-1} sqrt(n) times the density of x_n = -(x_1 + ... + x_{n-1}) landing in
/// [-R/2, R/2], so it is estimated from the first n-1 coordinates alone.
inline double monte_carlo_slice_volume(double side, int n, std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-0.5, 0.5);
  std::int64_t hits = 0;
  for (int t = 0; t < samples; ++t) {
    double sum = 0.0;
    for (int i = 0; i < n - 1; ++i) sum += unif(rng);
    hits += std::abs(sum) <= 0.5;
  }
  return std::pow(side, n - 1) * std::sqrt(static_cast<double>(n)) * static_cast<double>(hits) / samples;
}

/// Thin-slab estimator: fraction of the cube within distance h of the
/// hyperplane, divided by 2h.
inline double monte_carlo_slab_volume(double side, int n, double h, std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-0.5 * side, 0.5 * side);
  std::int64_t hits = 0;
  const double rootn = std::sqrt(static_cast<double>(n));
  for (int t = 0; t < samples; ++t) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += unif(rng);
    hits += std::abs(sum) / rootn <= h;
  }
  return std::pow(side, n) * static_cast<double>(hits) / samples / (2.0 * h);
}

}  // namespace oracle
