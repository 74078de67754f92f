#include "fincke_pohst.hpp"

#include <cmath>

namespace pisot::detail {

Eigen::MatrixXd weighted_gram(const Eigen::MatrixXcd& embeddings, const Eigen::VectorXd& row_weights) {
  const Eigen::MatrixXcd weighted = row_weights.asDiagonal() * embeddings;
  Eigen::MatrixXd g = (embeddings.adjoint() * weighted).real();
  return 0.5 * (g + g.transpose());
}

bool fincke_pohst(const Eigen::MatrixXd& gram, double bound,
                  const std::function<void(const std::vector<std::int64_t>&, double)>& visit) {
  const int n = static_cast<int>(gram.rows());
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) return false;

  // Q(c) = sum_i d_i (c_i + sum_{j>i} mu_ij c_j)^2 with R = L^T upper triangular.
  const Eigen::MatrixXd r = llt.matrixU();
  std::vector<double> d(static_cast<std::size_t>(n));
  Eigen::MatrixXd mu = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (!(r(i, i) > 0.0)) return false;
    d[static_cast<std::size_t>(i)] = r(i, i) * r(i, i);
    for (int j = i + 1; j < n; ++j) mu(i, j) = r(i, j) / r(i, i);
  }

  const double slack = 1e-9 * std::max(1.0, bound);
  std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
  std::vector<double> partial(static_cast<std::size_t>(n + 1), 0.0);  // partial[i] = sum over k >= i

  // Depth-first from the last coordinate down to the first.
  std::function<void(int)> descend = [&](int i) {
    double centre = 0.0;
    for (int j = i + 1; j < n; ++j) centre -= mu(i, j) * static_cast<double>(c[static_cast<std::size_t>(j)]);
    const double remaining = bound + slack - partial[static_cast<std::size_t>(i + 1)];
    if (remaining < 0.0) return;
    const double half_width = std::sqrt(remaining / d[static_cast<std::size_t>(i)]);
    const auto lo = static_cast<std::int64_t>(std::ceil(centre - half_width));
    const auto hi = static_cast<std::int64_t>(std::floor(centre + half_width));
    for (std::int64_t v = lo; v <= hi; ++v) {
      c[static_cast<std::size_t>(i)] = v;
      const double t = static_cast<double>(v) - centre;
      partial[static_cast<std::size_t>(i)] = partial[static_cast<std::size_t>(i + 1)] + d[static_cast<std::size_t>(i)] * t * t;
      if (partial[static_cast<std::size_t>(i)] > bound + slack) continue;
      if (i == 0) {
        bool zero = true;
        for (auto x : c) zero = zero && x == 0;
        if (!zero) {
          Eigen::VectorXd cv(n);
          for (int k = 0; k < n; ++k) cv[k] = static_cast<double>(c[static_cast<std::size_t>(k)]);
          const double value = cv.dot(gram * cv);
          if (value <= bound + slack) visit(c, value);
        }
      } else {
        descend(i - 1);
      }
    }
    c[static_cast<std::size_t>(i)] = 0;
  };
  descend(n - 1);
  return true;
}

}  // namespace pisot::detail
