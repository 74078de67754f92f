#include "pisot/unit_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace pisot {

namespace {

double linf(const Eigen::VectorXd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

void require_enumerable(const LogUnitLattice& lattice, const char* what) {
  if (lattice.rank() > kMaxEnumerationRank) {
    throw CapacityError(std::string(what) + ": lattice rank " + std::to_string(lattice.rank()) +
                        " exceeds the exact-enumeration limit of " + std::to_string(kMaxEnumerationRank));
  }
}

Complex ipow(Complex z, std::int64_t e) {
  if (e < 0) return Complex(1.0, 0.0) / ipow(z, -e);
  Complex result(1.0, 0.0);
  while (e > 0) {
    if (e & 1) result *= z;
    z *= z;
    e >>= 1;
  }
  return result;
}

// Visits every integer vector in the box [lo, hi] in lexicographic order.
// Boxes above 5e8 entries are refused.
template <typename Visit>
void scan_box(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi, Visit&& visit) {
  const std::size_t k = lo.size();
  double total = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (hi[i] < lo[i]) return;
    total *= static_cast<double>(hi[i] - lo[i] + 1);
  }
  if (total > 5e8) throw CapacityError("lattice enumeration: exponent box too large");
  std::vector<std::int64_t> e(lo);
  if (k == 0) return;
  while (true) {
    visit(e);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (e[i] < hi[i]) {
        ++e[i];
        break;
      }
      e[i] = lo[i];
      if (i == 0) return;
    }
  }
}

}  // namespace

// --- exponent vectors --------------------------------------------------------

UnitExponentVector compose(const UnitExponentVector& a, const UnitExponentVector& b, int torsion_order) {
  if (a.exponents.size() != b.exponents.size()) throw ValidationError("compose: exponent vectors of different length");
  UnitExponentVector out;
  out.exponents.resize(a.exponents.size());
  for (std::size_t i = 0; i < a.exponents.size(); ++i) out.exponents[i] = a.exponents[i] + b.exponents[i];
  out.torsion_index = ((a.torsion_index + b.torsion_index) % torsion_order + torsion_order) % torsion_order;
  return out;
}

EmbeddingTuple unit_embeddings(const FieldData& field, const UnitExponentVector& unit) {
  const auto& gens = field.unit_generators();
  if (unit.exponents.size() != gens.size()) {
    throw ValidationError("unit_embeddings: expected " + std::to_string(gens.size()) + " exponents");
  }
  const auto n = static_cast<std::size_t>(field.degree());
  EmbeddingTuple out(n, Complex(1.0, 0.0));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (unit.exponents[g] == 0) continue;
    for (std::size_t i = 0; i < n; ++i) out[i] *= ipow(gens[g][i], unit.exponents[g]);
  }
  const int t = ((unit.torsion_index % field.torsion_order()) + field.torsion_order()) % field.torsion_order();
  if (t != 0) {
    for (std::size_t i = 0; i < n; ++i) out[i] *= ipow(field.torsion_generator()[i], t);
  }
  return out;
}

// --- lattice -----------------------------------------------------------------

LogUnitLattice LogUnitLattice::from_basis(const Eigen::MatrixXd& basis) {
  if (basis.cols() < 1) throw ValidationError("log-unit lattice: rank 0 (no units of infinite order)");
  if (basis.rows() != basis.cols() + 1) {
    throw ValidationError("log-unit lattice: basis must have rank = ambient dimension - 1");
  }
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    const double sum = basis.col(j).sum();
    if (!basis.col(j).allFinite() || std::abs(sum) > 1e-9 * std::max(1.0, basis.col(j).cwiseAbs().maxCoeff())) {
      throw ValidationError("log-unit lattice: basis vector " + std::to_string(j + 1) +
                            " does not lie in the trace-zero hyperplane");
    }
  }
  LogUnitLattice out;
  out.basis_ = basis;
  out.gram_ = basis.transpose() * basis;
  const double det = out.gram_.determinant();
  double scale = 1.0;
  for (Eigen::Index j = 0; j < basis.cols(); ++j) scale *= out.gram_(j, j);
  if (!(det > 1e-12 * scale)) throw ValidationError("log-unit lattice: generators are log-linearly dependent");
  out.volume_ = std::sqrt(det);
  out.dual_ = out.gram_.ldlt().solve(basis.transpose());
  return out;
}

Eigen::VectorXd LogUnitLattice::point(const std::vector<std::int64_t>& exponents) const {
  Eigen::VectorXd e(rank());
  for (int i = 0; i < rank(); ++i) e[i] = static_cast<double>(exponents[static_cast<std::size_t>(i)]);
  return basis_ * e;
}

LogUnitLattice build_lattice(const FieldData& field) {
  const Signature& sig = field.signature();
  if (sig.unit_rank() < 1) throw ValidationError("log-unit lattice: rank 0 (no units of infinite order)");
  Eigen::MatrixXd basis(sig.archimedean(), sig.unit_rank());
  for (int j = 0; j < sig.unit_rank(); ++j) {
    const auto logs = log_embedding(KREElement::from_embeddings(sig, field.unit_generators()[static_cast<std::size_t>(j)]));
    for (int i = 0; i < sig.archimedean(); ++i) basis(i, j) = logs[static_cast<std::size_t>(i)];
  }
  return LogUnitLattice::from_basis(basis);
}

UnitExponentVector exponents_of_unit(const FieldData& field, const LogUnitLattice& lattice,
                                     std::span<const Complex> unit) {
  const auto logs = log_embedding(KREElement::from_embeddings(field.signature(), unit));
  const Eigen::VectorXd l = Eigen::Map<const Eigen::VectorXd>(logs.data(), static_cast<Eigen::Index>(logs.size()));
  const Eigen::VectorXd c = lattice.coefficients(l);
  UnitExponentVector out;
  for (Eigen::Index i = 0; i < c.size(); ++i) out.exponents.push_back(std::llround(c[i]));
  if (linf(lattice.point(out.exponents) - l) > 1e-6 * std::max(1.0, linf(l))) {
    throw ValidationError("exponents_of_unit: log vector is not a lattice point");
  }
  const EmbeddingTuple free_part = unit_embeddings(field, out);
  const Complex ratio = unit[0] / free_part[0];
  if (std::abs(std::abs(ratio) - 1.0) > 1e-6) throw ValidationError("exponents_of_unit: torsion part is not a root of unity");
  const int m = field.torsion_order();
  const double turns = std::arg(ratio) / (2.0 * std::numbers::pi) * m;
  out.torsion_index = static_cast<int>(((std::llround(turns) % m) + m) % m);
  const EmbeddingTuple rebuilt = unit_embeddings(field, out);
  for (std::size_t i = 0; i < rebuilt.size(); ++i) {
    if (std::abs(rebuilt[i] - unit[i]) > 1e-6 * std::max(1.0, std::abs(unit[i]))) {
      throw ValidationError("exponents_of_unit: tuple is not in the unit group generated by the field data");
    }
  }
  return out;
}

Regulator regulator(const LogUnitLattice& lattice) {
  Regulator out;
  const Eigen::MatrixXd minor = lattice.basis().topRows(lattice.rank());
  out.standard = std::abs(minor.determinant());
  out.volume = lattice.volume();
  const double sq = std::sqrt(static_cast<double>(lattice.ambient_dim()));
  out.volume_over_sqrt = out.volume / sq;
  out.paper_convention = out.volume * sq;
  return out;
}

// --- enumeration ---------------------------------------------------------------

std::vector<LatticePoint> enumerate_lattice_points_in_cube(const LogUnitLattice& lattice, double radius) {
  require_enumerable(lattice, "enumerate_lattice_points_in_cube");
  std::vector<LatticePoint> out;
  if (!(radius >= 0.0)) return out;
  const int k = lattice.rank();
  std::vector<std::int64_t> lo(static_cast<std::size_t>(k)), hi(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const double b = radius * lattice.dual().row(i).cwiseAbs().sum();
    hi[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(std::floor(b + 1e-9)) + 1;
    lo[static_cast<std::size_t>(i)] = -hi[static_cast<std::size_t>(i)];
  }
  const double cutoff = radius * (1.0 + 1e-12) + 1e-12;
  scan_box(lo, hi, [&](const std::vector<std::int64_t>& e) {
    Eigen::VectorXd p = lattice.point(e);
    if (linf(p) <= cutoff) out.push_back({std::move(p), e});
  });
  return out;
}

std::vector<double> successive_minima_linf(const LogUnitLattice& lattice) {
  require_enumerable(lattice, "successive_minima_linf");
  double radius = 0.0;
  for (int j = 0; j < lattice.rank(); ++j) radius = std::max(radius, linf(lattice.basis().col(j)));
  auto points = enumerate_lattice_points_in_cube(lattice, radius);
  std::stable_sort(points.begin(), points.end(),
                   [](const LatticePoint& a, const LatticePoint& b) { return linf(a.point) < linf(b.point); });
  std::vector<double> minima;
  std::vector<Eigen::VectorXd> chosen;  // orthonormalised exponent directions
  for (const auto& p : points) {
    if (static_cast<int>(minima.size()) == lattice.rank()) break;
    Eigen::VectorXd e(lattice.rank());
    for (int i = 0; i < lattice.rank(); ++i) e[i] = static_cast<double>(p.exponents[static_cast<std::size_t>(i)]);
    if (e.squaredNorm() == 0.0) continue;
    Eigen::VectorXd residual = e;
    for (const auto& q : chosen) residual -= q.dot(residual) * q;
    if (residual.norm() > 1e-9 * e.norm()) {
      chosen.push_back(residual.normalized());
      minima.push_back(linf(p.point));
    }
  }
  return minima;
}

bool is_well_rounded(const LogUnitLattice& lattice, double tol) {
  const auto minima = successive_minima_linf(lattice);
  return minima.back() / minima.front() <= 1.0 + tol;
}

ClosestVector closest_vector_linf(const LogUnitLattice& lattice, const Eigen::VectorXd& target) {
  require_enumerable(lattice, "closest_vector_linf");
  if (target.size() != lattice.ambient_dim()) throw ValidationError("closest_vector_linf: target has the wrong dimension");
  if (std::abs(target.sum()) > 1e-6) throw ValidationError("closest_vector_linf: target does not lie in the trace-zero hyperplane");

  const Eigen::VectorXd centre = lattice.coefficients(target);
  std::vector<std::int64_t> rounded(static_cast<std::size_t>(lattice.rank()));
  for (int i = 0; i < lattice.rank(); ++i) rounded[static_cast<std::size_t>(i)] = std::llround(centre[i]);
  const double d0 = linf(target - lattice.point(rounded));

  // Every candidate within d0 has |e_i - centre_i| <= d0 * ||dual row i||_1.
  std::vector<std::int64_t> lo(rounded.size()), hi(rounded.size());
  for (int i = 0; i < lattice.rank(); ++i) {
    const double w = d0 * lattice.dual().row(i).cwiseAbs().sum() + 1e-9;
    lo[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(std::ceil(centre[i] - w)) - 1;
    hi[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(std::floor(centre[i] + w)) + 1;
  }
  ClosestVector best;
  best.distance = std::numeric_limits<double>::infinity();
  scan_box(lo, hi, [&](const std::vector<std::int64_t>& e) {
    Eigen::VectorXd p = lattice.point(e);
    const double d = linf(target - p);
    // Lexicographic scan order: only a strictly smaller distance replaces.
    if (d < best.distance - 1e-12 * std::max(1.0, best.distance) || !std::isfinite(best.distance)) {
      best.distance = d;
      best.nearest = {std::move(p), e};
    }
  });
  return best;
}

// --- covering radius -----------------------------------------------------------

namespace {

double covering_radius_formula(int rank, double volume) {
  const double root = std::pow(volume, 1.0 / rank);
  return rank <= 10 ? std::sqrt(static_cast<double>(rank)) / 2.0 * root : rank / 2.0 * root;
}

}  // namespace

double covering_radius_bound(const LogUnitLattice& lattice) {
  if (lattice.rank() <= kMaxEnumerationRank && !is_well_rounded(lattice)) {
    throw ValidationError("covering_radius_bound: lattice is not well-rounded in the l-infinity norm");
  }
  return covering_radius_formula(lattice.rank(), lattice.volume());
}

CoveringRadiusEstimate covering_radius_estimate(const LogUnitLattice& lattice, double resolution) {
  if (lattice.rank() > 3) throw CapacityError("covering_radius_estimate: rank above 3 is not supported");
  if (!(resolution > 0.0)) throw ValidationError("covering_radius_estimate: resolution must be positive");
  const int k = lattice.rank();
  double spread = 0.0;
  for (int j = 0; j < k; ++j) spread += linf(lattice.basis().col(j));
  auto steps = static_cast<std::int64_t>(std::ceil(spread / (2.0 * resolution)));
  steps += steps % 2;  // even, so parallelepiped midpoints are sampled
  const double cell = spread / (2.0 * static_cast<double>(steps));

  // Any point of the parallelepiped is within spread/2 of a vertex, so its
  // nearest lattice vector has norm at most 1.5 * spread.
  std::vector<Eigen::VectorXd> candidates;
  for (auto& p : enumerate_lattice_points_in_cube(lattice, 1.5 * spread + 1e-9)) candidates.push_back(std::move(p.point));

  CoveringRadiusEstimate out;
  out.cell_radius = cell;
  std::vector<std::int64_t> lo(static_cast<std::size_t>(k), 0), hi(static_cast<std::size_t>(k), steps - 1);
  const double inv = 1.0 / static_cast<double>(steps);
  scan_box(lo, hi, [&](const std::vector<std::int64_t>& idx) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(lattice.ambient_dim());
    for (int j = 0; j < k; ++j) x += (static_cast<double>(idx[static_cast<std::size_t>(j)]) * inv) * lattice.basis().col(j);
    double d = std::numeric_limits<double>::infinity();
    for (const auto& c : candidates) {
      double m = 0.0;
      for (Eigen::Index i = 0; i < x.size() && m < d; ++i) m = std::max(m, std::abs(x[i] - c[i]));
      d = std::min(d, m);
    }
    out.lower = std::max(out.lower, d);
    ++out.samples;
  });
  out.upper = out.lower + cell;
  return out;
}

// --- Pisot units -------------------------------------------------------------------

PisotSearchResult pisot_search(const FieldData& field, const LogUnitLattice& lattice, double epsilon,
                               double grid_resolution) {
  if (!(epsilon > 0.0)) throw ValidationError("pisot_search: epsilon must be positive");
  const int m = field.signature().archimedean();
  if (m < 2) throw ValidationError("pisot_search: unit rank must be at least 1");

  PisotSearchResult out;
  if (lattice.rank() <= 3) {
    out.rho = covering_radius_estimate(lattice, grid_resolution).upper;
    out.rho_from_estimate = true;
  } else {
    out.rho = covering_radius_bound(lattice);
  }

  double eps = epsilon;
  std::ostringstream diagnostics;
  for (int attempt = 1; attempt <= 8; ++attempt, eps *= 2.0) {
    Eigen::VectorXd target = Eigen::VectorXd::Constant(m, -(out.rho + eps));
    target[0] = (m - 1) * (out.rho + eps);
    const auto cv = closest_vector_linf(lattice, target);
    const Eigen::VectorXd& v = cv.nearest.point;

    bool signs = v[0] > 0.0;
    for (int j = 1; j < m; ++j) signs = signs && v[j] < 0.0;
    UnitExponentVector unit{cv.nearest.exponents, 0};
    EmbeddingTuple emb = max_modulus_first(field, unit_embeddings(field, unit));
    const bool pisot = signs && is_pisot(KREElement::from_embeddings(field.signature(), emb));
    diagnostics << " attempt " << attempt << ": eps=" << eps << " v1=" << v[0] << " signs=" << signs
                << " pisot=" << pisot << ";";
    if (!pisot) continue;

    out.unit = std::move(unit);
    out.embeddings = std::move(emb);
    out.log_vector.assign(v.data(), v.data() + v.size());
    out.epsilon = eps;
    out.attempts = attempt;
    out.sign_pattern_ok = signs;
    out.window_lower = (m - 2) * out.rho + (m - 1) * eps;
    out.window_upper = m * out.rho + (m - 1) * eps;
    const double slack = 1e-9 * std::max(1.0, out.window_upper);
    out.window_ok = v[0] >= out.window_lower - slack && v[0] <= out.window_upper + slack;
    return out;
  }
  throw std::runtime_error("pisot_search: verification failed after 8 attempts;" + diagnostics.str());
}

PisotHeightSearch minimal_pisot_height(const FieldData& field, const LogUnitLattice& lattice, double radius) {
  PisotHeightSearch best;
  best.height = std::numeric_limits<double>::infinity();
  for (const auto& p : enumerate_lattice_points_in_cube(lattice, radius)) {
    int positive = 0;
    bool degenerate = false;
    double top = 0.0;
    for (Eigen::Index i = 0; i < p.point.size(); ++i) {
      if (std::abs(p.point[i]) <= 1e-9) degenerate = true;
      if (p.point[i] > 0.0) {
        ++positive;
        top = std::max(top, p.point[i]);
      }
    }
    if (degenerate || positive != 1) continue;
    ++best.pisot_units_seen;
    const double h = top / field.degree();
    if (h < best.height - 1e-12) {
      best.height = h;
      best.unit = {p.exponents, 0};
      best.log_vector.assign(p.point.data(), p.point.data() + p.point.size());
    }
  }
  return best;
}

}  // namespace pisot
