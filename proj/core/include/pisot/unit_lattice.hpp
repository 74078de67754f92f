#pragma once

// The log-unit lattice: image of the unit group under the weighted log
// embedding, sitting inside the trace-zero hyperplane V of R^{r+s}.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "pisot/field.hpp"

namespace pisot {

/// Largest rank handled by the exact enumeration routines.
inline constexpr int kMaxEnumerationRank = 6;

/// A unit written exactly as zeta^torsion_index * prod u_i^exponents[i].
struct UnitExponentVector {
  std::vector<std::int64_t> exponents;
  int torsion_index = 0;

  friend bool operator==(const UnitExponentVector&, const UnitExponentVector&) = default;
};

/// Multiplies two units given in exponent form (torsion index mod `torsion_order`).
UnitExponentVector compose(const UnitExponentVector& a, const UnitExponentVector& b, int torsion_order);

/// Full embedding tuple of the unit. The torsion generator is the root of
/// unity whose first embedding is exp(2 pi i / torsion_order).
EmbeddingTuple unit_embeddings(const FieldData& field, const UnitExponentVector& unit);

class LogUnitLattice {
 public:
  /// basis: (r+s) x rank matrix whose columns are the generators' log vectors.
  static LogUnitLattice from_basis(const Eigen::MatrixXd& basis);

  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  int rank() const { return static_cast<int>(basis_.cols()); }
  const Eigen::MatrixXd& basis() const { return basis_; }
  const Eigen::MatrixXd& gram() const { return gram_; }
  double volume() const { return volume_; }
  /// Left inverse on V: coefficients = dual() * point for points of span(basis).
  const Eigen::MatrixXd& dual() const { return dual_; }

  Eigen::VectorXd point(const std::vector<std::int64_t>& exponents) const;
  /// Real (unrounded) coordinates of `v` in the basis.
  Eigen::VectorXd coefficients(const Eigen::VectorXd& v) const { return dual_ * v; }

  LogUnitLattice scaled(double c) const { return from_basis(c * basis_); }

 private:
  Eigen::MatrixXd basis_;
  Eigen::MatrixXd gram_;
  Eigen::MatrixXd dual_;
  double volume_ = 0.0;
};

/// Log-embeds the field's unit generators. Throws ValidationError for rank 0
/// or log-dependent generators.
LogUnitLattice build_lattice(const FieldData& field);

/// Recovers the exponent vector of a unit from its embeddings; throws
/// ValidationError when the tuple is not a unit of the generated group.
UnitExponentVector exponents_of_unit(const FieldData& field, const LogUnitLattice& lattice,
                                     std::span<const Complex> unit);

struct Regulator {
  double standard = 0.0;          ///< |det| of the basis with one coordinate deleted
  double volume = 0.0;            ///< covolume of the lattice inside V
  double volume_over_sqrt = 0.0;  ///< volume / sqrt(r+s), equal to `standard`
  double paper_convention = 0.0;  ///< volume * sqrt(r+s), from Vol = R / sqrt(r+s)
};

Regulator regulator(const LogUnitLattice& lattice);

struct LatticePoint {
  Eigen::VectorXd point;
  std::vector<std::int64_t> exponents;
};

/// All lattice vectors with l-infinity norm <= radius (including 0), sorted
/// lexicographically by exponent vector.
std::vector<LatticePoint> enumerate_lattice_points_in_cube(const LogUnitLattice& lattice, double radius);

/// l-infinity successive minima by exhaustive enumeration.
std::vector<double> successive_minima_linf(const LogUnitLattice& lattice);

bool is_well_rounded(const LogUnitLattice& lattice, double tol = 1e-6);

struct ClosestVector {
  LatticePoint nearest;
  double distance = 0.0;
};

/// Exact l-infinity closest vector; ties go to the lexicographically smallest
/// exponent vector.
ClosestVector closest_vector_linf(const LogUnitLattice& lattice, const Eigen::VectorXd& target);

/// Upper bound on the l-infinity covering radius of a well-rounded lattice.
/// Throws ValidationError when the lattice is not well-rounded.
double covering_radius_bound(const LogUnitLattice& lattice);

struct CoveringRadiusEstimate {
  double lower = 0.0;
  double upper = 0.0;
  double cell_radius = 0.0;  ///< l-infinity radius of one grid cell
  std::int64_t samples = 0;
};

/// Deep-hole search over a grid of the fundamental parallelepiped.
/// `resolution` bounds the l-infinity radius of a grid cell, and
/// lower <= rho_inf <= upper with upper - lower <= resolution.
CoveringRadiusEstimate covering_radius_estimate(const LogUnitLattice& lattice, double resolution);

struct PisotSearchResult {
  UnitExponentVector unit;
  EmbeddingTuple embeddings;     ///< max-modulus-first representative
  std::vector<double> log_vector;
  double rho = 0.0;              ///< covering-radius value used for the target
  bool rho_from_estimate = false;
  double epsilon = 0.0;          ///< epsilon of the successful attempt
  int attempts = 0;
  bool sign_pattern_ok = false;  ///< v_1 > 0 and v_j < 0 for j != 1
  bool window_ok = false;        ///< (r+s-2)rho+(r+s-1)eps <= v_1 <= (r+s)rho+(r+s-1)eps
  double window_lower = 0.0;
  double window_upper = 0.0;
};

/// Constructs a Pisot unit from a closest-vector query, retrying with doubled
/// epsilon (up to 8 attempts) if verification fails.
PisotSearchResult pisot_search(const FieldData& field, const LogUnitLattice& lattice, double epsilon,
                               double grid_resolution = 1e-2);

struct PisotHeightSearch {
  double height = 0.0;
  UnitExponentVector unit;
  std::vector<double> log_vector;
  int pisot_units_seen = 0;
};

/// Smallest Weil height among Pisot units whose log vector lies in the cube of
/// the given radius. Conjugates share heights, so any unit with exactly one
/// positive log coordinate counts.
PisotHeightSearch minimal_pisot_height(const FieldData& field, const LogUnitLattice& lattice, double radius);

}  // namespace pisot
