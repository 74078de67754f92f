#pragma once

// Fundamental units of real quadratic fields by continued fractions.

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace pisot {

struct PellResult {
  std::int64_t d = 0;
  /// The unit is (p + q sqrt(d)) / denom, denom in {1, 2}.
  boost::multiprecision::cpp_int p;
  boost::multiprecision::cpp_int q;
  int denom = 1;
  int norm = 1;            ///< +1 or -1
  double regulator = 0.0;  ///< log of the unit
};

bool is_squarefree(std::int64_t d);

/// Smallest unit > 1 of the ring of integers of Q(sqrt d).
/// Requires d squarefree with 2 <= d <= 10^6.
PellResult pell_fundamental_unit(std::int64_t d);

}  // namespace pisot
