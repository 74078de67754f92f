#pragma once

// Arithmetic in K_R = R^r x C^s and the data describing a Galois number field
// through its complex embeddings.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pisot {

using Complex = std::complex<double>;

/// Absolute tolerance used for equality tests on embedding data.
inline constexpr double kTolerance = 1e-9;

/// Raised when input data violates a documented invariant. The message names
/// the invariant so callers (and the CLI) can report it verbatim.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation is asked for outside its supported range
/// (lattice rank too large for exact enumeration, and similar).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Signature {
  int r = 0;  ///< real embeddings
  int s = 0;  ///< pairs of complex embeddings

  /// Validating constructor: r, s >= 0 and degree >= 2.
  static Signature make(int r, int s);

  int degree() const { return r + 2 * s; }
  /// Number of coordinates of K_R, r + s.
  int archimedean() const { return r + s; }
  int unit_rank() const { return r + s - 1; }
  /// Trace weight of coordinate i: 1 for real places, 2 for complex ones.
  int weight(int i) const { return i < r ? 1 : 2; }

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A full tuple of all n embeddings sigma_1..sigma_n of a field element,
/// ordered real, complex, then the conjugates of the complex ones.
using EmbeddingTuple = std::vector<Complex>;

/// A point of K_R. Real coordinates come first, then one representative of
/// each complex-conjugate pair.
class KREElement {
 public:
  KREElement() = default;
  KREElement(Signature sig, std::vector<double> real_part, std::vector<Complex> complex_part);

  /// Builds from r+s coordinates; the first r must have zero imaginary part.
  static KREElement from_coordinates(Signature sig, std::span<const Complex> coords);
  /// Projects an n-embedding tuple onto its first r+s coordinates.
  static KREElement from_embeddings(Signature sig, std::span<const Complex> tuple);
  static KREElement one(Signature sig);

  const Signature& signature() const { return sig_; }
  const std::vector<double>& real_part() const { return real_; }
  const std::vector<Complex>& complex_part() const { return complex_; }

  int size() const { return sig_.archimedean(); }
  Complex operator[](int i) const;
  std::vector<Complex> coordinates() const;

 private:
  Signature sig_{};
  std::vector<double> real_;
  std::vector<Complex> complex_;
};

/// An element of K_R whose r+s coordinates are all strictly positive reals.
class TotallyPositiveElement {
 public:
  TotallyPositiveElement() = default;
  TotallyPositiveElement(Signature sig, std::vector<double> coords);

  const Signature& signature() const { return sig_; }
  const std::vector<double>& coords() const { return coords_; }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(coords_.size()); }

  KREElement as_kre() const;

 private:
  Signature sig_{};
  std::vector<double> coords_;
};

KREElement kre_mul(const KREElement& a, const KREElement& b);
KREElement involution(const KREElement& a);

/// Sum over real coordinates plus twice the sum over complex ones (real parts).
double trace(const KREElement& a);
double trace(const TotallyPositiveElement& a);

/// Tr(a x x*), a positive-definite quadratic form in x.
double trace_form(const TotallyPositiveElement& a, const KREElement& x);

/// a * v v*, i.e. the action of a unit on a totally positive element.
TotallyPositiveElement scale_by_norm(const TotallyPositiveElement& a, const KREElement& v);

/// (log|x_1|, ..., log|x_r|, 2 log|x_{r+1}|, ..., 2 log|x_{r+s}|).
std::vector<double> log_embedding(const KREElement& x);

double weil_height(const KREElement& x, int degree);

/// True iff |u_1| > 1 and |u_j| < 1 for 2 <= j <= r+s, strict by 1e-9.
/// Coordinate order is taken as given.
bool is_pisot(const KREElement& u);

/// A lattice-free description of a Galois number field via embeddings.
class FieldData {
 public:
  struct Spec {
    std::string name;
    Signature signature;
    Eigen::MatrixXcd basis_embeddings;  ///< column j = all n embeddings of omega_j
    std::vector<EmbeddingTuple> unit_generators;
    int torsion_order = 2;
    std::vector<std::vector<int>> galois_perms;  ///< 0-based images of embedding indices
    int precision_digits = 17;
    std::optional<double> regulator_hint;
  };

  /// Validates every invariant of the field description and throws
  /// ValidationError naming the first one violated. Galois permutations are
  /// re-indexed so that automorphism i sends embedding 0 to embedding i.
  static FieldData create(Spec spec);

  const std::string& name() const { return spec_.name; }
  const Signature& signature() const { return spec_.signature; }
  int degree() const { return spec_.signature.degree(); }
  const Eigen::MatrixXcd& basis_embeddings() const { return spec_.basis_embeddings; }
  const std::vector<EmbeddingTuple>& unit_generators() const { return spec_.unit_generators; }
  int torsion_order() const { return spec_.torsion_order; }
  const std::vector<std::vector<int>>& galois_perms() const { return spec_.galois_perms; }
  int precision_digits() const { return spec_.precision_digits; }
  const std::optional<double>& regulator_hint() const { return spec_.regulator_hint; }
  /// Absolute discriminant |det(basis_embeddings)|^2, rounded.
  std::int64_t discriminant() const { return discriminant_; }
  /// Embeddings of the root of unity zeta with sigma_1(zeta) = exp(2 pi i / torsion_order).
  const EmbeddingTuple& torsion_generator() const { return torsion_generator_; }

  /// Coordinates of an embedding tuple over the integral basis (not rounded).
  Eigen::VectorXcd basis_coordinates(std::span<const Complex> tuple) const;

 private:
  explicit FieldData(Spec spec) : spec_(std::move(spec)) {}
  Spec spec_;
  std::int64_t discriminant_ = 0;
  EmbeddingTuple torsion_generator_;
};

/// An algebraic integer given by integer coordinates over the integral basis.
class IntegerElement {
 public:
  IntegerElement() = default;
  IntegerElement(const FieldData& field, std::vector<std::int64_t> coeffs);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  const EmbeddingTuple& embeddings() const { return embeddings_; }
  KREElement kre(const Signature& sig) const { return KREElement::from_embeddings(sig, embeddings_); }
  bool is_zero() const;

 private:
  std::vector<std::int64_t> coeffs_;
  EmbeddingTuple embeddings_;
};

/// Permutes a full embedding tuple by automorphism `index` (0-based):
/// result[j] = tuple[perm[j]].
EmbeddingTuple conjugate_tuple(const FieldData& field, int index, std::span<const Complex> tuple);

/// conjugate_tuple followed by projection to K_R.
KREElement apply_galois(const FieldData& field, int index, std::span<const Complex> tuple);

/// Product of |sigma_i(x)| over all n embeddings.
double norm_modulus(std::span<const Complex> tuple);

/// The Galois conjugate of `tuple` whose first coordinate has the largest
/// modulus among the r+s representatives.
EmbeddingTuple max_modulus_first(const FieldData& field, std::span<const Complex> tuple);

}  // namespace pisot
