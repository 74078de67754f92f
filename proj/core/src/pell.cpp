#include "pisot/pell.hpp"

#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "pisot/field.hpp"

namespace pisot {

using boost::multiprecision::cpp_int;

bool is_squarefree(std::int64_t d) {
  if (d < 1) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

PellResult pell_fundamental_unit(std::int64_t d) {
  if (d < 2 || d > 1'000'000) throw ValidationError("pell_fundamental_unit: d must lie in [2, 10^6]");
  if (!is_squarefree(d)) throw ValidationError("pell_fundamental_unit: d must be squarefree");

  // Expand xi = (P0 + sqrt d) / Q0, the generator of the ring of integers up
  // to translation. Convergents h/k satisfy
  //   (h Q0 - k P0)^2 - d k^2 = (-1)^(i+1) Q0 Q_{i+1},
  // so the first return of Q to Q0 gives the fundamental unit.
  const bool half = d % 4 == 1;
  const std::int64_t p0 = half ? 1 : 0;
  const std::int64_t q0 = half ? 2 : 1;
  std::int64_t root = 0;
  while ((root + 1) * (root + 1) <= d) ++root;

  std::int64_t P = p0;
  std::int64_t Q = q0;
  cpp_int h = 1, h_prev = 0;  // h_{-1}, h_{-2}
  cpp_int k = 0, k_prev = 1;  // k_{-1}, k_{-2}
  for (std::int64_t i = 0;; ++i) {
    const std::int64_t a = (P + root) / Q;
    h_prev = std::exchange(h, cpp_int(a * h + h_prev));
    k_prev = std::exchange(k, cpp_int(a * k + k_prev));
    P = a * Q - P;
    Q = (d - P * P) / Q;
    if (Q == q0) break;
    if (i > 10'000'000) throw std::runtime_error("pell_fundamental_unit: period too long");
  }

  PellResult out;
  out.d = d;
  out.denom = static_cast<int>(q0);
  out.p = h * q0 - k * p0;
  out.q = k;
  const cpp_int n = out.p * out.p - cpp_int(d) * out.q * out.q;
  const cpp_int dd = q0 * q0;
  if (n == dd) {
    out.norm = 1;
  } else if (n == -dd) {
    out.norm = -1;
  } else {
    throw std::logic_error("pell_fundamental_unit: norm equation failed");
  }

  using Big = boost::multiprecision::cpp_bin_float_100;
  const Big value = (Big(out.p) + Big(out.q) * boost::multiprecision::sqrt(Big(d))) / out.denom;
  out.regulator = static_cast<double>(boost::multiprecision::log(value));
  return out;
}

}  // namespace pisot
