#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "pisot/field_io.hpp"
#include "pisot/pell.hpp"

namespace pisot {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

FieldData gen_quadratic_field(std::int64_t d) {
  const PellResult pell = pell_fundamental_unit(d);
  using Big = boost::multiprecision::cpp_bin_float_100;
  const Big root = boost::multiprecision::sqrt(Big(d));
  const Big p(pell.p), q(pell.q);
  const double up = static_cast<double>((p + q * root) / pell.denom);
  const double down = static_cast<double>((p - q * root) / pell.denom);
  const double omega_up = static_cast<double>(pell.denom == 2 ? (1 + root) / 2 : root);
  const double omega_down = static_cast<double>(pell.denom == 2 ? (1 - root) / 2 : -root);

  FieldData::Spec spec;
  spec.name = "Q(sqrt(" + std::to_string(d) + "))";
  spec.signature = Signature::make(2, 0);
  spec.basis_embeddings.resize(2, 2);
  spec.basis_embeddings << Complex(1.0), Complex(omega_up), Complex(1.0), Complex(omega_down);
  spec.unit_generators = {{Complex(up), Complex(down)}};
  spec.torsion_order = 2;
  spec.galois_perms = {{0, 1}, {1, 0}};
  spec.regulator_hint = pell.regulator;
  return FieldData::create(std::move(spec));
}

FieldData zeta7_plus_field() {
  // theta_k = 2 cos(2 pi k / 7); the generator of the Galois group sends
  // theta_k to theta_{2k}, i.e. theta to theta^2 - 2.
  const double t1 = 2.0 * std::cos(2.0 * kPi / 7.0);
  const double t2 = 2.0 * std::cos(4.0 * kPi / 7.0);
  const double t3 = 2.0 * std::cos(6.0 * kPi / 7.0);

  FieldData::Spec spec;
  spec.name = "Q(zeta_7)^+";
  spec.signature = Signature::make(3, 0);
  spec.basis_embeddings.resize(3, 3);
  int row = 0;
  for (double t : {t1, t2, t3}) {
    spec.basis_embeddings(row, 0) = 1.0;
    spec.basis_embeddings(row, 1) = t;
    spec.basis_embeddings(row, 2) = t * t;
    ++row;
  }
  spec.unit_generators = {{t1, t2, t3}, {t2, t3, t1}};
  spec.torsion_order = 2;
  spec.galois_perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  return FieldData::create(std::move(spec));
}

FieldData zeta5_field() {
  // Embedding i sends zeta to zeta^e_i: two representatives, then their conjugates.
  const int e[4] = {1, 2, 4, 3};
  auto zeta_pow = [](int k) { return std::polar(1.0, 2.0 * kPi * (k % 5) / 5.0); };
  auto index_of = [&](int exponent) {
    for (int i = 0; i < 4; ++i) {
      if (e[i] == exponent % 5) return i;
    }
    return -1;
  };

  FieldData::Spec spec;
  spec.name = "Q(zeta_5)";
  spec.signature = Signature::make(0, 2);
  spec.basis_embeddings.resize(4, 4);
  EmbeddingTuple unit(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) spec.basis_embeddings(i, j) = j == 0 ? Complex(1.0) : zeta_pow(e[i] * j);
    unit[static_cast<std::size_t>(i)] = 1.0 + zeta_pow(e[i]);
  }
  spec.unit_generators = {unit};
  spec.torsion_order = 10;
  for (int a = 1; a <= 4; ++a) {
    std::vector<int> perm(4);
    for (int j = 0; j < 4; ++j) perm[static_cast<std::size_t>(j)] = index_of(e[j] * a);
    spec.galois_perms.push_back(std::move(perm));
  }
  return FieldData::create(std::move(spec));
}

FieldData builtin_field(const std::string& name) {
  if (name == "qsqrt2") return gen_quadratic_field(2);
  if (name == "qsqrt3") return gen_quadratic_field(3);
  if (name == "qsqrt5") return gen_quadratic_field(5);
  if (name == "qsqrt13") return gen_quadratic_field(13);
  if (name == "zeta7plus") return zeta7_plus_field();
  if (name == "zeta5") return zeta5_field();
  throw ValidationError("unknown builtin field \"" + name + "\"");
}

}  // namespace pisot
