#include <cmath>
#include <numbers>

#include "pisot/bounds.hpp"
#include "pisot/reduction.hpp"

namespace pisot {

namespace {

// Every unit with Tr(v v*) <= t^2 has log coordinates bounded by this radius:
// each positive coordinate is at most log t (real place) or 2 log t - log 2
// (complex place), and the negative ones sum to minus the positive ones.
double trace_ball_radius(const Signature& sig, double log_t) {
  double top = log_t;
  if (sig.s > 0) top = std::max(top, 2.0 * log_t - std::numbers::ln2);
  return std::max(1, sig.unit_rank()) * top;
}

int matrix_rank(const std::vector<LatticePoint>& points, int dim) {
  if (points.empty()) return 0;
  Eigen::MatrixXd m(dim, static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int j = 0; j < dim; ++j) m(j, static_cast<Eigen::Index>(i)) = static_cast<double>(points[i].exponents[static_cast<std::size_t>(j)]);
  }
  return static_cast<int>(Eigen::FullPivLU<Eigen::MatrixXd>(m).rank());
}

}  // namespace

BestPisotUnit best_pisot_unit(const FieldData& field, const LogUnitLattice& lattice, double epsilon) {
  const Signature& sig = field.signature();
  const PisotSearchResult seed = pisot_search(field, lattice, epsilon);
  BestPisotUnit best{seed.unit, seed.embeddings, t_k_of_unit(KREElement::from_embeddings(sig, seed.embeddings))};

  // t_K(v) >= |v_1|, so any better unit has its largest log coordinate below
  // w * log t, and hence every coordinate in that range.
  const double radius = (sig.s > 0 ? 2.0 : 1.0) * std::log(best.t_k);
  for (const auto& p : enumerate_lattice_points_in_cube(lattice, radius)) {
    int positive = 0;
    for (Eigen::Index i = 0; i < p.point.size(); ++i) positive += p.point[i] > 0.0;
    if (positive != 1) continue;
    const UnitExponentVector unit{p.exponents, 0};
    EmbeddingTuple emb = max_modulus_first(field, unit_embeddings(field, unit));
    const KREElement kre = KREElement::from_embeddings(sig, emb);
    if (!is_pisot(kre)) continue;
    const double t = t_k_of_unit(kre);
    if (t < best.t_k * (1.0 - 1e-12)) best = {unit, std::move(emb), t};
  }
  return best;
}

bool is_reduced(const FieldData& field, const TotallyPositiveElement& a, const LogUnitLattice& lattice) {
  const Signature& sig = field.signature();
  if (!(a.signature() == sig)) throw ValidationError("is_reduced: element signature does not match the field");
  const BestPisotUnit best = best_pisot_unit(field, lattice);
  const double tr = trace(a);
  const double floor_tr = tr * (1.0 - 1e-8);

  for (int i = 0; i < field.degree(); ++i) {
    if (trace(scale_by_norm(a, apply_galois(field, i, best.embeddings))) < floor_tr) return false;
  }
  const double radius = trace_ball_radius(sig, std::log(best.t_k));
  for (const auto& p : enumerate_lattice_points_in_cube(lattice, radius)) {
    const KREElement v = KREElement::from_embeddings(sig, unit_embeddings(field, {p.exponents, 0}));
    if (trace(scale_by_norm(a, v)) < floor_tr) return false;
  }
  return true;
}

FacetEnumeration enumerate_facet_candidates(const FieldData& field, const LogUnitLattice& lattice) {
  const Signature& sig = field.signature();
  const BestPisotUnit best = best_pisot_unit(field, lattice);
  FacetEnumeration out;
  out.t_k = best.t_k;
  out.log_t_k = std::log(best.t_k);
  out.cube_points = enumerate_lattice_points_in_cube(lattice, out.log_t_k);
  out.nonzero_points = static_cast<int>(out.cube_points.size()) - 1;
  out.with_torsion = out.nonzero_points * field.torsion_order();

  const double t2 = best.t_k * best.t_k;
  const TotallyPositiveElement ones(sig, std::vector<double>(static_cast<std::size_t>(sig.archimedean()), 1.0));
  for (const auto& p : enumerate_lattice_points_in_cube(lattice, trace_ball_radius(sig, out.log_t_k))) {
    if (p.point.cwiseAbs().maxCoeff() == 0.0) continue;
    const KREElement v = KREElement::from_embeddings(sig, unit_embeddings(field, {p.exponents, 0}));
    if (trace_form(ones, v) <= t2 * (1.0 + 1e-12)) ++out.trace_candidates;
  }

  const int m = sig.archimedean();
  const int rank = lattice.rank();
  const double count = static_cast<double>(out.cube_points.size());
  out.slice_volume = cube_slice_volume(2.0 * out.log_t_k, m);
  out.transformed_volume = out.slice_volume / lattice.volume();
  out.blichfeldt = blichfeldt_bound(out.transformed_volume, rank);
  out.blichfeldt_holds = count <= out.blichfeldt;
  out.blichfeldt_side_log_t = blichfeldt_bound(cube_slice_volume(out.log_t_k, m) / lattice.volume(), rank);
  out.blichfeldt_side_log_t_holds = count <= out.blichfeldt_side_log_t;
  out.spans_full_rank = matrix_rank(out.cube_points, rank) == rank;
  return out;
}

}  // namespace pisot
