#pragma once

// Fincke-Pohst enumeration of integer vectors inside the ellipsoid
// c^T G c <= bound, for a real symmetric positive-definite G.

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace pisot::detail {

/// Real Gram matrix of the form x -> sum_rows weight_row * |(E c)_row|^2.
Eigen::MatrixXd weighted_gram(const Eigen::MatrixXcd& embeddings, const Eigen::VectorXd& row_weights);

/// Calls `visit(c, value)` for every nonzero integer vector with
/// c^T G c <= bound. Returns false if G is not positive definite.
/// Visiting order is unspecified; callers that need determinism must
/// break ties themselves.
bool fincke_pohst(const Eigen::MatrixXd& gram, double bound,
                  const std::function<void(const std::vector<std::int64_t>&, double)>& visit);

}  // namespace pisot::detail
