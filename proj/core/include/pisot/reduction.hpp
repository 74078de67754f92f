#pragma once

// Reduction of totally positive unary forms Tr(a x x*) by the conjugates of a
// Pisot unit, the t_K constants that control it, and the integer minimum.

#include <optional>
#include <vector>

#include "pisot/field.hpp"
#include "pisot/unit_lattice.hpp"

namespace pisot {

/// t_K(u) = sqrt(1 + (|u|^2 - 1) / (1 - max_{j>=2} |u_j|^2)).
/// Throws ValidationError when u (as ordered) is not Pisot.
double t_k_of_unit(const KREElement& u);

/// t_K(u, delta) = sqrt(1 + (|u|^2 - delta) / (delta - max_{j>=2} |u_j|^2)),
/// defined for max_{j>=2} |u_j|^2 < delta <= 1.
double t_k_delta(const KREElement& u, double delta);

struct ReductionCertificate {
  TotallyPositiveElement reduced_element;
  UnitExponentVector applied;  ///< net unit v with reduced = a * v v*
  int rounds = 0;              ///< number of accepted transforms
  int conjugates_checked = 0;  ///< distinct |v_j| patterns tried per pass
  double trace_initial = 0.0;
  double trace_final = 0.0;
  double t_delta = 0.0;
};

/// Repeatedly replaces a by a v_j v_j* whenever Tr(a v_j v_j*) < delta Tr(a),
/// restarting from the first conjugate after each replacement, until a full
/// pass over all conjugates of u changes nothing. Requires u Pisot (after
/// moving its largest conjugate first) and max_{j>=2}|u_j|^2 < delta < 1.
ReductionCertificate reduce_unary(const FieldData& field, const TotallyPositiveElement& a,
                                  const UnitExponentVector& u, double delta);

/// Upper bound on rounds: ceil(log(Tr(a)/Tr(a')) / log(1/delta)) + 1.
int round_bound(const ReductionCertificate& cert, double delta);

struct IntegerMinimumResult {
  double mu = 0.0;
  IntegerElement argmin;
  double trace_xx = 0.0;  ///< Tr(x x*) at the argmin
};

/// Exact minimum of Tr(a x x*) over nonzero algebraic integers, by
/// Fincke-Pohst enumeration of the integral-basis Gram matrix. The search
/// radius starts at `bound` (default Tr(a w_1 w_1*)) and doubles while empty.
/// Trace ties are resolved by the lexicographically smallest coefficient vector.
IntegerMinimumResult integer_minimum(const FieldData& field, const TotallyPositiveElement& a,
                                     std::optional<double> bound = std::nullopt);

struct NonTorsionMinimum {
  double value = 0.0;
  IntegerElement argmin;
};

/// min Tr(x x*) over nonzero integers that are not roots of unity.
NonTorsionMinimum min_trace_nontorsion(const FieldData& field, double search_bound);

struct Theorem4Report {
  ReductionCertificate certificate;
  IntegerMinimumResult minimum;   ///< minimum of the reduced form
  double min_trace_nontorsion = 0.0;
  double t_delta = 0.0;
  double factor = 0.0;            ///< max{t^2 / min_S Tr(xx*), 1}
  double trace_bound = 0.0;       ///< factor * mu
  bool trace_inequality = false;  ///< Tr(a') <= factor * mu
  bool argmin_inequality = false; ///< Tr(x x*) <= t^2 at the argmin
  bool passed() const { return trace_inequality && argmin_inequality; }
};

/// Runs reduce_unary and checks both quality inequalities on its output.
Theorem4Report verify_theorem4(const FieldData& field, const TotallyPositiveElement& a,
                               const UnitExponentVector& u, double delta);

struct BestPisotUnit {
  UnitExponentVector unit;
  EmbeddingTuple embeddings;  ///< max-modulus-first
  double t_k = 0.0;
};

/// The Pisot unit with the smallest t_K among those reachable from
/// pisot_search's answer (every unit with smaller t_K lies in its cube).
BestPisotUnit best_pisot_unit(const FieldData& field, const LogUnitLattice& lattice, double epsilon = 0.01);

/// True iff Tr(a) <= Tr(a v v*) for every unit v that can bound the
/// reduction domain, i.e. the conjugates of the best Pisot unit and every
/// unit with Tr(v v*) < t_K^2.
bool is_reduced(const FieldData& field, const TotallyPositiveElement& a, const LogUnitLattice& lattice);

struct FacetEnumeration {
  double t_k = 0.0;
  double log_t_k = 0.0;
  std::vector<LatticePoint> cube_points;  ///< lattice points with ||x||_inf <= log t_K, 0 included
  int nonzero_points = 0;                 ///< candidate units up to torsion
  int with_torsion = 0;                   ///< nonzero_points * torsion order
  int trace_candidates = 0;               ///< nonzero units with Tr(v v*) <= t_K^2 (any cube)
  double slice_volume = 0.0;              ///< Vol(C cap V), C the cube of side 2 log t_K
  double transformed_volume = 0.0;        ///< slice_volume / lattice volume
  double blichfeldt = 0.0;                ///< rank! * transformed_volume + rank
  bool blichfeldt_holds = false;          ///< |cube_points| <= blichfeldt
  double blichfeldt_side_log_t = 0.0;     ///< same count with the cube of side log t_K
  bool blichfeldt_side_log_t_holds = false;
  bool spans_full_rank = false;           ///< cube points span the lattice rank
};

/// Units whose log vectors lie in the cube ||x||_inf <= log t_K, with the
/// lattice-point count checked against Blichfeldt's bound.
FacetEnumeration enumerate_facet_candidates(const FieldData& field, const LogUnitLattice& lattice);

}  // namespace pisot
