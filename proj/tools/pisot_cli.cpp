// pisot: command line front end. Every command prints one JSON object on
// standard output. Exit status is 0 on success, 2 when the input violates a
// documented invariant, 1 on any other failure.
//
// PISOT_OUTPUT_DIGITS, if set, rounds every floating-point output to that many
// significant digits.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pisot/bounds.hpp"
#include "pisot/cubic.hpp"
#include "pisot/field_io.hpp"
#include "pisot/pell.hpp"
#include "pisot/reduction.hpp"

using nlohmann::json;
using namespace pisot;

namespace {

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json tuple_json(std::span<const Complex> t) {
  json out = json::array();
  for (Complex z : t) out.push_back(complex_json(z));
  return out;
}

json unit_json(const UnitExponentVector& u) {
  return {{"exponents", u.exponents}, {"torsion_index", u.torsion_index}};
}

json vector_json(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

void round_floats(json& j, int digits) {
  if (j.is_number_float()) {
    std::ostringstream os;
    os.precision(digits);
    os << j.get<double>();
    j = std::stod(os.str());
  } else if (j.is_structured()) {
    for (auto& child : j) round_floats(child, digits);
  }
}

void emit(json out) {
  if (const char* env = std::getenv("PISOT_OUTPUT_DIGITS")) {
    const int digits = std::atoi(env);
    if (digits > 0 && digits <= 17) round_floats(out, digits);
  }
  std::cout << out.dump() << std::endl;
}

json ok(const std::string& command) { return {{"status", "ok"}, {"command", command}}; }

TotallyPositiveElement parse_form(const FieldData& field, const std::vector<double>& a) {
  if (static_cast<int>(a.size()) != field.signature().archimedean()) {
    throw ValidationError("--a: expected r+s = " + std::to_string(field.signature().archimedean()) + " values");
  }
  return TotallyPositiveElement(field.signature(), a);
}

UnitExponentVector choose_unit(const FieldData& field, const LogUnitLattice& lattice,
                               const std::vector<std::int64_t>& exponents) {
  if (exponents.empty()) return pisot_search(field, lattice, 0.01).unit;
  if (static_cast<int>(exponents.size()) != lattice.rank()) {
    throw ValidationError("--unit-exponents: expected " + std::to_string(lattice.rank()) + " exponents");
  }
  return {exponents, 0};
}

json certificate_json(const ReductionCertificate& c, double delta) {
  return {{"reduced_element", c.reduced_element.coords()},
          {"applied", unit_json(c.applied)},
          {"rounds", c.rounds},
          {"round_bound", round_bound(c, delta)},
          {"conjugates_checked", c.conjugates_checked},
          {"trace_initial", c.trace_initial},
          {"trace_final", c.trace_final},
          {"t_delta", c.t_delta}};
}

json cmd_gen_quadratic(std::int64_t d, const std::string& path) {
  const PellResult pell = pell_fundamental_unit(d);
  const FieldData field = gen_quadratic_field(d);
  save_field_file(field, path);
  json out = ok("gen-quadratic");
  out["d"] = d;
  out["path"] = path;
  out["unit"] = {{"p", pell.p.str()}, {"q", pell.q.str()}, {"denom", pell.denom}, {"norm", pell.norm}};
  out["regulator"] = pell.regulator;
  out["discriminant"] = field.discriminant();
  return out;
}

json cmd_gen_field(const std::string& name, const std::string& path) {
  const FieldData field = builtin_field(name);
  save_field_file(field, path);
  json out = ok("gen-field");
  out["name"] = field.name();
  out["path"] = path;
  out["degree"] = field.degree();
  out["discriminant"] = field.discriminant();
  return out;
}

json cmd_pisot(const std::string& path, double epsilon, double resolution) {
  const FieldData field = load_field_file(path);
  const LogUnitLattice lattice = build_lattice(field);
  const PisotSearchResult res = pisot_search(field, lattice, epsilon, resolution);
  const KREElement u = KREElement::from_embeddings(field.signature(), res.embeddings);
  json out = ok("pisot");
  out["field"] = field.name();
  out["unit"] = unit_json(res.unit);
  out["embeddings"] = tuple_json(res.embeddings);
  out["log_vector"] = res.log_vector;
  out["rho"] = res.rho;
  out["rho_source"] = res.rho_from_estimate ? "estimate" : "formula";
  out["epsilon_requested"] = epsilon;
  out["epsilon_used"] = res.epsilon;
  out["attempts"] = res.attempts;
  out["is_pisot"] = is_pisot(u);
  out["sign_pattern_ok"] = res.sign_pattern_ok;
  out["window"] = {{"lower", res.window_lower}, {"upper", res.window_upper}, {"ok", res.window_ok}};
  out["t_k"] = t_k_of_unit(u);
  return out;
}

json cmd_reduce(const std::string& path, const std::vector<double>& a, double delta,
                const std::vector<std::int64_t>& exponents) {
  const FieldData field = load_field_file(path);
  const LogUnitLattice lattice = build_lattice(field);
  const UnitExponentVector unit = choose_unit(field, lattice, exponents);
  const ReductionCertificate cert = reduce_unary(field, parse_form(field, a), unit, delta);
  json out = ok("reduce");
  out["field"] = field.name();
  out["unit"] = unit_json(unit);
  out["delta"] = delta;
  out["certificate"] = certificate_json(cert, delta);
  return out;
}

json cmd_verify(const std::string& path, const std::vector<double>& a, double delta,
                const std::vector<std::int64_t>& exponents) {
  const FieldData field = load_field_file(path);
  const LogUnitLattice lattice = build_lattice(field);
  const UnitExponentVector unit = choose_unit(field, lattice, exponents);
  const Theorem4Report r = verify_theorem4(field, parse_form(field, a), unit, delta);
  json out = ok("verify");
  out["field"] = field.name();
  out["unit"] = unit_json(unit);
  out["delta"] = delta;
  out["certificate"] = certificate_json(r.certificate, delta);
  out["mu"] = r.minimum.mu;
  out["argmin"] = r.minimum.argmin.coeffs();
  out["argmin_trace"] = r.minimum.trace_xx;
  out["min_trace_nontorsion"] = r.min_trace_nontorsion;
  out["t_delta"] = r.t_delta;
  out["t_delta_squared"] = r.t_delta * r.t_delta;
  out["factor"] = r.factor;
  out["trace_bound"] = r.trace_bound;
  out["trace_inequality"] = r.trace_inequality;
  out["argmin_inequality"] = r.argmin_inequality;
  out["passed"] = r.passed();
  return out;
}

json cmd_facet_bound(int r, int s, double reg, bool abstract_exponent) {
  const FacetBoundResult b = facet_bound({r, s, reg}, abstract_exponent);
  json out = ok("facet-bound");
  out["r"] = r;
  out["s"] = s;
  out["regulator"] = reg;
  out["exponent_variant"] = abstract_exponent ? "abstract" : "theorem";
  out["delta"] = b.exponent_delta;
  out["terms"] = {b.leading_term, b.log_ratio_term, b.log_half_term};
  out["bracket"] = b.bracket;
  out["alternating_sum"] = b.alternating;
  out["bound"] = b.bound;
  out["warnings"] = b.warnings;
  return out;
}

json cmd_enumerate_facets(const std::string& path) {
  const FieldData field = load_field_file(path);
  const LogUnitLattice lattice = build_lattice(field);
  const FacetEnumeration e = enumerate_facet_candidates(field, lattice);
  const Regulator reg = regulator(lattice);
  json points = json::array();
  for (const auto& p : e.cube_points) points.push_back({{"exponents", p.exponents}, {"log_vector", vector_json(p.point)}});
  json out = ok("enumerate-facets");
  out["field"] = field.name();
  out["t_k"] = e.t_k;
  out["log_t_k"] = e.log_t_k;
  out["cube_points"] = std::move(points);
  out["count"] = e.cube_points.size();
  out["nonzero_count"] = e.nonzero_points;
  out["with_torsion"] = e.with_torsion;
  out["trace_candidates"] = e.trace_candidates;
  out["spans_full_rank"] = e.spans_full_rank;
  out["regulator"] = reg.standard;
  out["facet_bound"] = facet_bound({field.signature().r, field.signature().s, reg.standard}).bound;
  out["blichfeldt"] = {{"slice_volume", e.slice_volume},
                       {"transformed_volume", e.transformed_volume},
                       {"bound", e.blichfeldt},
                       {"holds", e.blichfeldt_holds},
                       {"bound_side_log_t", e.blichfeldt_side_log_t},
                       {"holds_side_log_t", e.blichfeldt_side_log_t_holds}};
  return out;
}

json cmd_lemma6(int samples, std::uint64_t seed, int bound) {
  const Lemma6Survey s = lemma6_survey(samples, seed, bound);
  json out = ok("lemma6");
  out["samples"] = s.samples;
  out["seed"] = seed;
  out["bound"] = bound;
  out["rejected"] = s.rejected;
  out["violations"] = s.violations;
  out["bases_with_violations"] = s.bases_with_violations;
  out["min_ratio"] = s.min_ratio;
  out["lambda_range"] = {s.min_lambda, s.max_lambda};
  return out;
}

json cmd_height_bound(int r, int s, double reg, int gamma, double epsilon, const std::string& path) {
  json out = ok("height-bound");
  const double bound = pisot_height_bound(r, s, reg, gamma, epsilon);
  out["r"] = r;
  out["s"] = s;
  out["regulator"] = reg;
  out["gamma"] = gamma;
  out["epsilon"] = epsilon;
  out["bound"] = bound;
  if (!path.empty()) {
    const FieldData field = load_field_file(path);
    if (field.signature().r != r || field.signature().s != s) {
      throw ValidationError("--field: signature does not match --r/--s");
    }
    const LogUnitLattice lattice = build_lattice(field);
    // Any Pisot unit's largest log coordinate caps the search: a unit of
    // smaller height has every log coordinate below it.
    const PisotSearchResult seed = pisot_search(field, lattice, epsilon);
    const PisotHeightSearch h = minimal_pisot_height(field, lattice, seed.log_vector[0]);
    out["field"] = field.name();
    out["actual_min_height"] = h.height;
    out["actual_unit"] = unit_json(h.unit);
    out["pisot_units_seen"] = h.pisot_units_seen;
    out["bound_holds"] = h.height <= bound;
  }
  return out;
}

json cmd_sums(int n_max) {
  if (n_max < 1 || n_max > 400) throw ValidationError("--n-max must lie in [1, 400]");
  const double envelope = alternating_sum_envelope();
  json rows = json::array();
  for (int n = 1; n <= n_max; ++n) {
    const ExactRational a = alternating_sum(n);
    json row = {{"n", n}, {"exact", a.str()}, {"value", a.convert_to<double>()}};
    if (n >= 2) {
      const double ratio = alternating_sum_ratio(n);
      row["ratio"] = ratio;
      row["below_envelope"] = ratio <= envelope;
    }
    rows.push_back(std::move(row));
  }
  json out = ok("sums");
  out["envelope"] = envelope;
  out["rows"] = std::move(rows);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pisot-unit reduction of unary forms over Galois number fields"};
  app.require_subcommand(1);

  std::string field_path, out_path, name;
  std::int64_t d = 0;
  double epsilon = 0.01, resolution = 1e-2, delta = 0.9, reg = 0.0;
  std::vector<double> a;
  std::vector<std::int64_t> exponents;
  int r = 0, s = 0, gamma = 1, samples = 1000, bound = 10, n_max = 40;
  std::uint64_t seed = 42;
  bool abstract_exponent = false;

  auto* gen = app.add_subcommand("gen-quadratic", "write the field file of Q(sqrt d)");
  gen->add_option("--d", d)->required();
  gen->add_option("--out", out_path)->required();

  auto* gen_field = app.add_subcommand("gen-field", "write a bundled field file");
  gen_field->add_option("--name", name)->required()->check(
      CLI::IsMember({"qsqrt2", "qsqrt3", "qsqrt5", "qsqrt13", "zeta7plus", "zeta5"}));
  gen_field->add_option("--out", out_path)->required();

  auto* pisot = app.add_subcommand("pisot", "construct a Pisot unit from a closest-vector query");
  pisot->add_option("--field", field_path)->required();
  pisot->add_option("--epsilon", epsilon);
  pisot->add_option("--resolution", resolution, "grid resolution of the covering-radius estimate");

  auto* reduce = app.add_subcommand("reduce", "reduce a unary form by the conjugates of a Pisot unit");
  reduce->add_option("--field", field_path)->required();
  reduce->add_option("--a", a)->required()->delimiter(',');
  reduce->add_option("--delta", delta)->required();
  reduce->add_option("--unit-exponents", exponents)->delimiter(',');

  auto* verify = app.add_subcommand("verify", "reduce and check both quality inequalities");
  verify->add_option("--field", field_path)->required();
  verify->add_option("--a", a)->required()->delimiter(',');
  verify->add_option("--delta", delta)->required();
  verify->add_option("--unit-exponents", exponents)->delimiter(',');

  auto* fb = app.add_subcommand("facet-bound", "evaluate the facet-count bound");
  fb->add_option("--r", r)->required();
  fb->add_option("--s", s)->required();
  fb->add_option("--regulator", reg)->required();
  fb->add_flag("--abstract-exponent", abstract_exponent);

  auto* ef = app.add_subcommand("enumerate-facets", "list facet-candidate units");
  ef->add_option("--field", field_path)->required();

  auto* l6 = app.add_subcommand("lemma6", "random survey of the rank-2 short-vector lemma");
  l6->add_option("--samples", samples);
  l6->add_option("--seed", seed);
  l6->add_option("--bound", bound);

  auto* hb = app.add_subcommand("height-bound", "evaluate the Pisot height bound");
  hb->add_option("--r", r)->required();
  hb->add_option("--s", s)->required();
  hb->add_option("--regulator", reg)->required();
  hb->add_option("--gamma", gamma)->required();
  hb->add_option("--epsilon", epsilon)->required();
  hb->add_option("--field", field_path);

  auto* sums = app.add_subcommand("sums", "exact alternating sums and their asymptotic ratios");
  sums->add_option("--n-max", n_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit({{"status", "error"}, {"error", e.what()}});
    return 2;
  }

  try {
    if (*gen) emit(cmd_gen_quadratic(d, out_path));
    else if (*gen_field) emit(cmd_gen_field(name, out_path));
    else if (*pisot) emit(cmd_pisot(field_path, epsilon, resolution));
    else if (*reduce) emit(cmd_reduce(field_path, a, delta, exponents));
    else if (*verify) emit(cmd_verify(field_path, a, delta, exponents));
    else if (*fb) emit(cmd_facet_bound(r, s, reg, abstract_exponent));
    else if (*ef) emit(cmd_enumerate_facets(field_path));
    else if (*l6) emit(cmd_lemma6(samples, seed, bound));
    else if (*hb) emit(cmd_height_bound(r, s, reg, gamma, epsilon, field_path));
    else if (*sums) emit(cmd_sums(n_max));
  } catch (const ValidationError& e) {
    emit({{"status", "error"}, {"error", e.what()}});
    return 2;
  } catch (const std::exception& e) {
    emit({{"status", "error"}, {"error", e.what()}});
    return 1;
  }
  return 0;
}
