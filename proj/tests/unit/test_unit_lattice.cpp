#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pisot/bounds.hpp"
#include "pisot/field_io.hpp"
#include "pisot/unit_lattice.hpp"

using namespace pisot;

namespace {

const double kLogSilver = std::log(1.0 + std::sqrt(2.0));
const double kLogPhi = std::log((1.0 + std::sqrt(5.0)) / 2.0);

LogUnitLattice rank1(double x) {
  Eigen::MatrixXd b(2, 1);
  b << x, -x;
  return LogUnitLattice::from_basis(b);
}

}  // namespace

TEST_CASE("lattice construction") {
  const LogUnitLattice q2 = build_lattice(gen_quadratic_field(2));
  CHECK(q2.rank() == 1);
  CHECK(q2.basis()(0, 0) == doctest::Approx(kLogSilver).epsilon(1e-12));
  CHECK(q2.volume() == doctest::Approx(std::sqrt(2.0) * kLogSilver).epsilon(1e-12));

  const LogUnitLattice z5 = build_lattice(zeta5_field());
  CHECK(z5.basis()(0, 0) == doctest::Approx(2 * kLogPhi).epsilon(1e-12));
  CHECK(z5.basis()(1, 0) == doctest::Approx(-2 * kLogPhi).epsilon(1e-12));

  Eigen::MatrixXd dependent(3, 2);
  dependent << 1, 2, -1, -2, 0, 0;
  CHECK_THROWS_AS(LogUnitLattice::from_basis(dependent), ValidationError);
  Eigen::MatrixXd off_plane(2, 1);
  off_plane << 1, 0;
  CHECK_THROWS_AS(LogUnitLattice::from_basis(off_plane), ValidationError);
}

TEST_CASE("regulators") {
  CHECK(regulator(build_lattice(gen_quadratic_field(2))).standard == doctest::Approx(0.881373587).epsilon(1e-9));
  CHECK(regulator(build_lattice(gen_quadratic_field(5))).standard == doctest::Approx(0.481211825).epsilon(1e-9));
  CHECK(regulator(build_lattice(zeta5_field())).standard == doctest::Approx(0.962423650).epsilon(1e-9));
  const Regulator z7 = regulator(build_lattice(zeta7_plus_field()));
  CHECK(z7.standard == doctest::Approx(0.525454682).epsilon(1e-8));
  CHECK(z7.volume_over_sqrt == doctest::Approx(z7.standard).epsilon(1e-9));
  CHECK(z7.paper_convention == doctest::Approx(3.0 * z7.standard).epsilon(1e-9));
}

TEST_CASE("unit exponent vectors round trip") {
  const FieldData z7 = zeta7_plus_field();
  const LogUnitLattice lattice = build_lattice(z7);
  for (std::int64_t a = -3; a <= 3; ++a) {
    for (std::int64_t b = -3; b <= 3; ++b) {
      for (int t = 0; t < 2; ++t) {
        const UnitExponentVector u{{a, b}, t};
        CHECK(exponents_of_unit(z7, lattice, unit_embeddings(z7, u)) == u);
      }
    }
  }
  const FieldData z5 = zeta5_field();
  const LogUnitLattice l5 = build_lattice(z5);
  for (int t = 0; t < 10; ++t) {
    const UnitExponentVector u{{2}, t};
    CHECK(exponents_of_unit(z5, l5, unit_embeddings(z5, u)) == u);
  }
  CHECK(compose({{1, 2}, 1}, {{-1, 3}, 1}, 2) == UnitExponentVector{{0, 5}, 0});
}

TEST_CASE("successive minima and well-roundedness") {
  const auto q2 = successive_minima_linf(build_lattice(gen_quadratic_field(2)));
  REQUIRE(q2.size() == 1);
  CHECK(q2[0] == doctest::Approx(kLogSilver).epsilon(1e-12));

  const LogUnitLattice z7 = build_lattice(zeta7_plus_field());
  const auto m = successive_minima_linf(z7);
  REQUIRE(m.size() == 2);
  CHECK(std::abs(m[0] - m[1]) < 1e-9);
  CHECK(is_well_rounded(z7));
  const auto scaled = successive_minima_linf(z7.scaled(2.5));
  CHECK(scaled[0] == doctest::Approx(2.5 * m[0]).epsilon(1e-12));
  CHECK(scaled[1] == doctest::Approx(2.5 * m[1]).epsilon(1e-12));

  Eigen::MatrixXd b(3, 2);
  b << 1, 0, 0, 3, -1, -3;
  CHECK_FALSE(is_well_rounded(LogUnitLattice::from_basis(b)));
  CHECK_THROWS_AS(covering_radius_bound(LogUnitLattice::from_basis(b)), ValidationError);
  CHECK(is_well_rounded(rank1(0.3)));
}

TEST_CASE("lattice points in a cube") {
  const LogUnitLattice q2 = build_lattice(gen_quadratic_field(2));
  CHECK(enumerate_lattice_points_in_cube(q2, 0.5).size() == 1);
  const double log_t = 0.5 * std::log(4.0 + 2.0 * std::sqrt(2.0));
  CHECK(enumerate_lattice_points_in_cube(q2, log_t).size() == 3);

  const LogUnitLattice z7 = build_lattice(zeta7_plus_field());
  for (double radius : {0.3, 0.9, 1.7, 2.5}) {
    const auto pts = enumerate_lattice_points_in_cube(z7, radius);
    CHECK(pts.size() % 2 == 1);
    for (const auto& p : pts) CHECK(std::abs(p.point.sum()) < 1e-8);
    // Exhaustive count over a wide exponent box agrees.
    std::size_t brute = 0;
    for (std::int64_t a = -15; a <= 15; ++a) {
      for (std::int64_t c = -15; c <= 15; ++c) {
        brute += z7.point({a, c}).cwiseAbs().maxCoeff() <= radius;
      }
    }
    CHECK(pts.size() == brute);
    const double slice = cube_slice_volume(2.0 * radius, 3) / z7.volume();
    CHECK(static_cast<double>(pts.size()) <= blichfeldt_bound(slice, 2));
  }
}

TEST_CASE("closest vector") {
  const LogUnitLattice q2 = build_lattice(gen_quadratic_field(2));
  const Eigen::VectorXd b = q2.basis().col(0);
  const auto on = closest_vector_linf(q2, 3.0 * b);
  CHECK(on.distance == doctest::Approx(0.0).scale(1.0));
  CHECK(on.nearest.exponents == std::vector<std::int64_t>{3});
  const auto mid = closest_vector_linf(q2, 0.5 * b);
  CHECK(mid.distance == doctest::Approx(0.5 * kLogSilver).epsilon(1e-12));
  CHECK(mid.nearest.exponents == std::vector<std::int64_t>{0});

  const LogUnitLattice z7 = build_lattice(zeta7_plus_field());
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(-6.0, 6.0);
  const double rho_bound = covering_radius_bound(z7);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::VectorXd t(3);
    t << unif(rng), unif(rng), 0.0;
    t[2] = -t[0] - t[1];
    const auto cv = closest_vector_linf(z7, t);
    const auto [exps, dist] = oracle::exhaustive_cvp(z7, t, 20);
    CHECK(cv.distance == doctest::Approx(dist).epsilon(1e-12));
    CHECK(cv.nearest.exponents == exps);
    CHECK(cv.distance <= rho_bound);
  }
  Eigen::VectorXd off(3);
  off << 1, 0, 0;
  CHECK_THROWS_AS(closest_vector_linf(z7, off), ValidationError);
}

TEST_CASE("covering radius") {
  CHECK(covering_radius_bound(rank1(kLogSilver)) == doctest::Approx(0.5 * std::sqrt(2.0) * kLogSilver).epsilon(1e-12));
  CHECK(covering_radius_bound(build_lattice(gen_quadratic_field(2))) == doctest::Approx(0.62323).epsilon(1e-4));

  const auto q2 = covering_radius_estimate(build_lattice(gen_quadratic_field(2)), 1e-3);
  CHECK(q2.lower <= q2.upper);
  CHECK(q2.upper - q2.lower <= 1e-3);
  CHECK(q2.lower <= 0.5 * kLogSilver + 1e-12);
  CHECK(q2.upper >= 0.5 * kLogSilver - 1e-12);

  const LogUnitLattice z7 = build_lattice(zeta7_plus_field());
  double prev_gap = 1.0;
  for (double res : {4e-2, 2e-2, 1e-2}) {
    const auto e = covering_radius_estimate(z7, res);
    CHECK(e.upper - e.lower <= res);
    CHECK(e.upper - e.lower <= prev_gap);
    CHECK(e.upper <= covering_radius_bound(z7));
    prev_gap = e.upper - e.lower;
  }
  // Every sampled closest-vector distance is a lower bound.
  const auto fine = covering_radius_estimate(z7, 1e-2);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unif(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    Eigen::VectorXd t(3);
    t << unif(rng), unif(rng), 0.0;
    t[2] = -t[0] - t[1];
    CHECK(closest_vector_linf(z7, t).distance <= fine.upper + 1e-12);
  }
}

TEST_CASE("Pisot search") {
  for (std::int64_t d : {2, 5}) {
    const FieldData f = gen_quadratic_field(d);
    const auto r = pisot_search(f, build_lattice(f), 0.01);
    CHECK(r.unit.exponents == std::vector<std::int64_t>{1});
    CHECK(is_pisot(KREElement::from_embeddings(f.signature(), r.embeddings)));
    CHECK(r.window_ok);
  }
  const FieldData z7 = zeta7_plus_field();
  const auto r = pisot_search(z7, build_lattice(z7), 0.05);
  CHECK(r.sign_pattern_ok);
  CHECK(r.log_vector[0] > 0.0);
  CHECK(r.log_vector[1] < 0.0);
  CHECK(r.log_vector[2] < 0.0);
  CHECK(is_pisot(KREElement::from_embeddings(z7.signature(), r.embeddings)));
  CHECK(r.window_ok);

  const FieldData z5 = zeta5_field();
  const auto r5 = pisot_search(z5, build_lattice(z5), 0.01);
  CHECK(is_pisot(KREElement::from_embeddings(z5.signature(), r5.embeddings)));
  CHECK_THROWS_AS(pisot_search(z5, build_lattice(z5), 0.0), ValidationError);
}

TEST_CASE("minimal Pisot height") {
  const FieldData q2 = gen_quadratic_field(2);
  const auto h = minimal_pisot_height(q2, build_lattice(q2), 3.0);
  CHECK(h.height == doctest::Approx(0.5 * kLogSilver).epsilon(1e-12));
  const FieldData z5 = zeta5_field();
  CHECK(minimal_pisot_height(z5, build_lattice(z5), 3.0).height == doctest::Approx(0.5 * kLogPhi).epsilon(1e-12));
}
