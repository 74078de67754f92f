#include "pisot/bounds.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/binomial.hpp>

#include "pisot/field.hpp"

namespace pisot {

namespace {

using boost::multiprecision::cpp_int;

cpp_int binomial(int n, int k) {
  cpp_int c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

double theorem_delta(int unit_rank) { return unit_rank <= 10 ? 0.5 : 1.0; }

// log of the exact rational, valid for very large numerators and denominators.
double log_rational(const ExactRational& q) {
  const cpp_int num = boost::multiprecision::numerator(q);
  const cpp_int den = boost::multiprecision::denominator(q);
  auto log_int = [](const cpp_int& v) {
    const auto bits = static_cast<long>(boost::multiprecision::msb(v));
    if (bits < 1000) return std::log(v.convert_to<double>());
    const long shift = bits - 60;
    const cpp_int top = v >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
  };
  return log_int(num) - log_int(den);
}

}  // namespace

ExactRational alternating_sum(int n) {
  if (n < 1) throw ValidationError("alternating_sum: n must be at least 1");
  // sum (-1)^k C(n,k) (n - 2k)^{n-1} / 2^{n-1}
  cpp_int total = 0;
  for (int k = 0; k <= n / 2; ++k) {
    cpp_int term = binomial(n, k) * boost::multiprecision::pow(cpp_int(n - 2 * k), static_cast<unsigned>(n - 1));
    total += (k % 2 == 0) ? term : cpp_int(-term);
  }
  return ExactRational(total, cpp_int(1) << (n - 1));
}

double cube_slice_volume(double side, int n) {
  if (n < 2) throw ValidationError("cube_slice_volume: n must be at least 2");
  if (!(side > 0.0)) throw ValidationError("cube_slice_volume: side length must be positive");
  const double a = alternating_sum(n).convert_to<double>();
  return std::pow(side, n - 1) * std::sqrt(static_cast<double>(n)) / std::tgamma(static_cast<double>(n)) * a;
}

double blichfeldt_bound(double volume, int n) {
  if (volume < 0.0) throw ValidationError("blichfeldt_bound: volume must be nonnegative");
  if (n < 1) throw ValidationError("blichfeldt_bound: dimension must be positive");
  return std::tgamma(static_cast<double>(n) + 1.0) * volume + n;
}

FacetBoundResult facet_bound(const FacetBoundInput& input, bool abstract_exponent) {
  const int m = input.r + input.s;
  if (input.r < 0 || input.s < 0 || m < 2) throw ValidationError("facet_bound: requires r+s >= 2");
  if (!(input.regulator > 0.0)) throw ValidationError("facet_bound: regulator must be positive");
  FacetBoundResult out;
  if (input.regulator < 0.2052) {
    out.warnings.push_back("regulator below 0.2052, the smallest regulator of any number field");
  }
  const int k = m - 1;
  out.exponent_delta = theorem_delta(k);
  const double inner = 1.0 / (2.0 * k);
  const double power = abstract_exponent ? 1.0 + inner : 1.0 - inner;
  const double root = std::pow(input.regulator, 1.0 / k);
  out.leading_term = 0.5 * std::pow(k, out.exponent_delta) * std::pow(m, power);
  out.log_ratio_term = k / 2.0 * std::log(static_cast<double>(m + 1) / k) / root;
  out.log_half_term = std::log(k / 2.0) / root;
  out.bracket = out.leading_term + out.log_ratio_term + out.log_half_term;
  out.alternating = alternating_sum(m).convert_to<double>();
  out.bound = 2.0 * k + 2.0 * std::pow(out.bracket, k) * m * out.alternating;
  return out;
}

double log_tk_bound(int r, int s, double rho_inf) {
  const int m = r + s;
  if (m < 2) throw ValidationError("log_tk_bound: requires r+s >= 2");
  if (!(rho_inf > 0.0)) throw ValidationError("log_tk_bound: covering radius must be positive");
  return m * rho_inf + (m - 1) / 2.0 * std::log(static_cast<double>(m + 1) / (m - 1)) + std::log((m - 1) / 2.0);
}

double alternating_sum_envelope() { return std::sqrt(std::numbers::e) / (2.0 * std::numbers::pi); }

double alternating_sum_ratio(int n) {
  if (n < 2) throw ValidationError("alternating_sum_ratio: n must be at least 2");
  const double c = 1.0 + 1.0 / (2.0 * std::numbers::e);
  // Log domain throughout: (n-1)! and the exponential overflow past n ~ 170.
  return std::exp(log_rational(alternating_sum(n)) - n * c - std::lgamma(static_cast<double>(n)));
}

double pisot_height_bound(int r, int s, double regulator, int gamma, double epsilon) {
  const int m = r + s;
  if (r < 0 || s < 0 || m < 2) throw ValidationError("pisot_height_bound: requires r+s >= 2");
  if (r > 0 && s > 0) {
    throw ValidationError("pisot_height_bound: gamma is only defined for totally real or totally complex fields");
  }
  const int expected = s == 0 ? 1 : 2;
  if (gamma != expected) {
    throw ValidationError("pisot_height_bound: gamma must be " + std::to_string(expected) + " for this signature");
  }
  if (!(regulator > 0.0)) throw ValidationError("pisot_height_bound: regulator must be positive");
  if (!(epsilon > 0.0)) throw ValidationError("pisot_height_bound: epsilon must be positive");
  const int k = m - 1;
  const double n = r + 2.0 * s;
  const double exponent = theorem_delta(k) - 1.0 / (2.0 * k);
  return (gamma / 2.0 * std::pow(k, exponent) * std::pow(regulator, 1.0 / k) + k * epsilon) / n;
}

}  // namespace pisot
