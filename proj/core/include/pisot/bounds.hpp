#pragma once

// Closed-form bounds: facet counts of the reduction domain, central cube
// sections, Blichfeldt counts, the alternating binomial sum and its
// asymptotic envelope, and the Pisot height bound.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pisot {

using ExactRational = boost::multiprecision::cpp_rational;

/// sum_{k=0}^{floor(n/2)} (-1)^k C(n,k) (n/2 - k)^{n-1}, exactly.
ExactRational alternating_sum(int n);

/// (n-1)-volume of the section of the cube [-R/2, R/2]^n by the hyperplane
/// sum x_i = 0.
double cube_slice_volume(double side, int n);

/// n! * volume + n.
double blichfeldt_bound(double volume, int n);

struct FacetBoundInput {
  int r = 0;
  int s = 0;
  double regulator = 0.0;
};

struct FacetBoundResult {
  double exponent_delta = 0.0;  ///< 1/2 when r+s-1 <= 10, else 1
  double leading_term = 0.0;    ///< (1/2)(r+s-1)^delta (r+s)^{1 -/+ 1/(2(r+s-1))}
  double log_ratio_term = 0.0;  ///< ((r+s-1)/2) log((r+s+1)/(r+s-1)) / R^{1/(r+s-1)}
  double log_half_term = 0.0;   ///< log((r+s-1)/2) / R^{1/(r+s-1)}
  double bracket = 0.0;
  double alternating = 0.0;     ///< alternating_sum(r+s) as a double
  double bound = 0.0;
  std::vector<std::string> warnings;
};

/// Upper bound on the number of facets of the reduction domain.
/// `abstract_exponent` switches (r+s)^{1-1/(2(r+s-1))} to (r+s)^{1+1/(2(r+s-1))}.
FacetBoundResult facet_bound(const FacetBoundInput& input, bool abstract_exponent = false);

/// (r+s) rho + ((r+s-1)/2) log((r+s+1)/(r+s-1)) + log((r+s-1)/2).
double log_tk_bound(int r, int s, double rho_inf);

/// alternating_sum(n) / ((e^{1 + 1/(2e)})^n (n-1)!).
double alternating_sum_ratio(int n);

/// sqrt(e) / (2 pi), the asymptotic constant of the ratio envelope.
double alternating_sum_envelope();

/// (1/n)((gamma/2)(r+s-1)^{delta - 1/(2(r+s-1))} R^{1/(r+s-1)} + (r+s-1) eps).
/// gamma must be 1 for totally real and 2 for totally complex fields; mixed
/// signatures are rejected.
double pisot_height_bound(int r, int s, double regulator, int gamma, double epsilon);

}  // namespace pisot
