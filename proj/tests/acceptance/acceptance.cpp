// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pisot/bounds.hpp"
#include "pisot/cubic.hpp"
#include "pisot/field_io.hpp"
#include "pisot/reduction.hpp"

using namespace pisot;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

FieldData field(const std::string& name) { return load_field_file(std::string(PISOT_DATA_DIR) + "/fields/" + name + ".json"); }

TotallyPositiveElement random_form(const FieldData& f, std::mt19937_64& rng, double spread) {
  std::uniform_real_distribution<double> unif(-spread, spread);
  std::vector<double> c;
  for (int i = 0; i < f.signature().archimedean(); ++i) c.push_back(std::exp(unif(rng)));
  return {f.signature(), c};
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// 1. Quality of the reduced form.
Outcome quality() {
  const auto t0 = Clock::now();
  int trials = 0, failures = 0;
  double worst_ratio = 0.0;
  for (const char* name : {"qsqrt2", "qsqrt5", "zeta7plus"}) {
    const FieldData f = field(name);
    const UnitExponentVector u = pisot_search(f, build_lattice(f), 0.01).unit;
    for (double delta : {0.9, 0.99, 1 - 1e-6}) {
      std::mt19937_64 rng(1000 + trials);
      for (int seed = 0; seed < 200; ++seed) {
        const Theorem4Report r = verify_theorem4(f, random_form(f, rng, 5.0), u, delta);
        ++trials;
        failures += !r.passed();
        worst_ratio = std::max(worst_ratio, r.certificate.trace_final / r.trace_bound);
      }
    }
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream os;
  os << trials << " trials, " << failures << " failures, max Tr(a')/bound = " << worst_ratio << ", " << elapsed << " s";
  return {failures == 0 && trials == 1800 && elapsed < 60.0, os.str()};
}

// 2. Round counts grow linearly.
Outcome complexity() {
  const FieldData f = field("qsqrt2");
  const double u = 1.0 + std::sqrt(2.0);
  const double delta = 0.9;
  // Each accepted step multiplies a by u^{-2} or u^{2}, so reducing
  // (u^{2k}, u^{-2k}) to (1, 1) takes exactly k steps.
  const std::vector<int> golden{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  bool ok = true;
  std::ostringstream os;
  os << "rounds";
  int first = 0;
  for (int k = 1; k <= 12; ++k) {
    const TotallyPositiveElement a(f.signature(), {std::pow(u, 2 * k), std::pow(u, -2 * k)});
    const ReductionCertificate c = reduce_unary(f, a, {{1}, 0}, delta);
    const int bound = static_cast<int>(std::ceil(std::log(c.trace_initial / 2.0) / std::log(1.0 / delta))) + 1;
    if (k == 1) first = std::max(c.rounds, 1);
    ok = ok && c.rounds <= bound && c.rounds <= k * first && c.rounds == golden[static_cast<std::size_t>(k - 1)];
    ok = ok && close(c.trace_final, 2.0, 1e-6);
    os << ' ' << c.rounds << "/" << bound;
  }
  return {ok, os.str() + " (measured/bound, k = 1..12)"};
}

// 3. Facet counts against the facet bound.
Outcome facets() {
  bool ok = true;
  std::ostringstream os;
  for (std::int64_t d : {2, 3, 5, 13}) {
    const FieldData f = field("qsqrt" + std::to_string(d));
    const LogUnitLattice lattice = build_lattice(f);
    const FacetEnumeration e = enumerate_facet_candidates(f, lattice);
    const double bound = facet_bound({2, 0, regulator(lattice).standard}).bound;
    ok = ok && e.nonzero_points <= bound;
    os << "d=" << d << ": " << e.nonzero_points << "/" << e.with_torsion << " vs " << bound << "; ";
    if (d == 2) ok = ok && close(bound, 4.1757, 1e-3) && e.nonzero_points == 2 && e.with_torsion == 4;
  }
  return {ok, os.str() + "(half-counted/with signs vs bound)"};
}

// 4. Short-vector lemma on random reduced bases.
Outcome lemma6() {
  const auto t0 = Clock::now();
  const Lemma6Survey s = lemma6_survey(1000, 42, 10);
  const double elapsed = seconds_since(t0);
  std::ostringstream os;
  os << s.samples << " bases, " << s.violations << " violations, min ratio " << s.min_ratio << ", " << elapsed << " s";
  return {s.samples == 1000 && s.violations == 0 && elapsed < 10.0, os.str()};
}

// 5. Cube section volume.
Outcome cube_volume() {
  bool ok = alternating_sum(2) == 1 && alternating_sum(3) == ExactRational(3, 2) && alternating_sum(4) == 4;
  std::ostringstream os;
  os << "A(2..4) exact " << (ok ? "ok" : "WRONG") << "; rel. err";
  for (int n = 2; n <= 6; ++n) {
    const double exact = cube_slice_volume(1.0, n);
    const double mc = oracle::monte_carlo_slice_volume(1.0, n, 100 + n, 1'000'000);
    const double err = std::abs(mc - exact) / exact;
    ok = ok && err <= 0.02;
    os << ' ' << err;
  }
  os << " (n = 2..6)";
  return {ok, os.str()};
}

// 6. Envelope of the alternating-sum ratio.
Outcome envelope() {
  const double env = alternating_sum_envelope();
  double max_all = 0.0, max_tail = 0.0;
  for (int n = 2; n <= 40; ++n) {
    const double r = alternating_sum_ratio(n);
    max_all = std::max(max_all, r);
    if (n >= 30) max_tail = std::max(max_tail, r);
  }
  std::ostringstream os;
  os << "max ratio n=2..40 " << max_all << ", max n=30..40 " << max_tail << ", envelope " << env;
  return {max_all <= env + 0.05 && max_tail <= env + 0.01, os.str()};
}

// 7. Covering radius estimate against the closed-form bound.
Outcome covering() {
  std::vector<std::pair<std::string, LogUnitLattice>> lattices;
  for (const char* name : {"qsqrt2", "qsqrt3", "qsqrt5", "qsqrt13", "zeta7plus", "zeta5"}) {
    lattices.emplace_back(name, build_lattice(field(name)));
  }
  Eigen::MatrixXd hex(3, 2);
  hex << 1, 0, -1, 1, 0, -1;
  lattices.emplace_back("A2", LogUnitLattice::from_basis(hex));
  bool ok = true;
  std::ostringstream os;
  for (const auto& [name, lattice] : lattices) {
    if (!is_well_rounded(lattice)) {
      ok = false;
      os << name << " not well-rounded; ";
      continue;
    }
    const auto est = covering_radius_estimate(lattice, 1e-3);
    const double bound = covering_radius_bound(lattice);
    ok = ok && est.upper <= bound;
    os << name << ' ' << est.upper << "<=" << bound << "; ";
  }
  return {ok, os.str()};
}

// 8. Pisot units from closest vectors.
Outcome pisot_units() {
  bool ok = true;
  std::ostringstream os;
  for (const char* name : {"qsqrt2", "qsqrt3", "qsqrt5", "qsqrt13", "zeta7plus", "zeta5"}) {
    const FieldData f = field(name);
    const LogUnitLattice lattice = build_lattice(f);
    const PisotSearchResult r = pisot_search(f, lattice, 0.01, 1e-3);
    const bool pisot = is_pisot(KREElement::from_embeddings(f.signature(), r.embeddings));
    const bool window = lattice.rank() > 2 || r.window_ok;
    ok = ok && pisot && window;
    os << name << (pisot ? " pisot" : " NOT-pisot") << (window ? "" : " window-fail") << "; ";
  }
  return {ok, os.str()};
}

// 9. Height bound report values.
Outcome height_report() {
  struct Row {
    const char* name;
    int r, s, gamma;
    double bound, actual;
  };
  const double eps = 0.01;
  const Row rows[] = {{"qsqrt2", 2, 0, 1, 0.2253425, 0.44069}, {"zeta5", 0, 2, 2, 0.24311, 0.24061}};
  bool ok = true;
  std::ostringstream os;
  for (const Row& row : rows) {
    const FieldData f = field(row.name);
    const LogUnitLattice lattice = build_lattice(f);
    const double reg = regulator(lattice).standard;
    const double bound = pisot_height_bound(row.r, row.s, reg, row.gamma, eps);
    const PisotSearchResult seed = pisot_search(f, lattice, eps);
    const double actual = minimal_pisot_height(f, lattice, seed.log_vector[0]).height;
    ok = ok && close(bound, row.bound, 2e-5) && close(actual, row.actual, 1e-5);
    os << row.name << " bound " << bound << " actual " << actual << (actual <= bound ? " (holds)" : " (fails)") << "; ";
  }
  return {ok, os.str()};
}

// 10. Integer minimum against a full box scan.
Outcome oracle_equivalence() {
  int forms = 0, mismatches = 0;
  std::mt19937_64 rng(4242);
  for (const char* name : {"qsqrt2", "qsqrt3", "qsqrt5", "qsqrt13", "zeta7plus", "zeta5"}) {
    const FieldData f = field(name);
    for (int i = 0; i < 50; ++i) {
      const TotallyPositiveElement a = random_form(f, rng, 1.5);
      const IntegerMinimumResult fast = integer_minimum(f, a);
      const int box = std::max(1, oracle::coefficient_box(f, a, fast.mu * (1 + 1e-6)));
      const oracle::BoxMinimum slow = oracle::naive_integer_minimum(f, a, box);
      ++forms;
      mismatches += !(close(fast.mu, slow.mu, 1e-12 * slow.mu) && fast.argmin.coeffs() == slow.argmin);
    }
  }
  std::ostringstream os;
  os << forms << " forms over 6 fields, " << mismatches << " mismatches (mu and argmin)";
  return {mismatches == 0 && forms == 300, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"reduction quality", quality},     {"round complexity", complexity}, {"facet bound", facets},
      {"short-vector lemma", lemma6},     {"cube section volume", cube_volume},
      {"ratio envelope", envelope},       {"covering radius", covering}, {"Pisot search", pisot_units},
      {"height report", height_report},   {"integer minimum oracle", oracle_equivalence}};
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
