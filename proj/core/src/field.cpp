#include "pisot/field.hpp"

#include "fincke_pohst.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace pisot {

namespace {

bool close(Complex a, Complex b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(a));
}

void require_same_signature(const Signature& a, const Signature& b) {
  if (!(a == b)) {
    throw ValidationError("signature mismatch: (" + std::to_string(a.r) + "," + std::to_string(a.s) +
                          ") vs (" + std::to_string(b.r) + "," + std::to_string(b.s) + ")");
  }
}

void require_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw ValidationError(std::string(what) + ": non-finite entry");
  }
}

// Checks the real-row and conjugate-row structure of an n-embedding tuple.
void check_embedding_structure(const Signature& sig, std::span<const Complex> tuple, const std::string& what) {
  if (static_cast<int>(tuple.size()) != sig.degree()) {
    throw ValidationError(what + ": expected " + std::to_string(sig.degree()) + " embeddings, got " +
                          std::to_string(tuple.size()));
  }
  for (const auto& z : tuple) require_finite(z, what.c_str());
  for (int i = 0; i < sig.r; ++i) {
    if (std::abs(tuple[i].imag()) > 1e-9 * std::max(1.0, std::abs(tuple[i]))) {
      throw ValidationError(what + ": real embedding " + std::to_string(i + 1) + " has nonzero imaginary part");
    }
  }
  for (int k = 0; k < sig.s; ++k) {
    const Complex z = tuple[sig.r + k];
    const Complex w = tuple[sig.r + sig.s + k];
    if (!close(std::conj(z), w, 1e-9)) {
      throw ValidationError(what + ": conjugate-row mismatch at embedding " + std::to_string(sig.r + sig.s + k + 1));
    }
  }
}

bool near_integer_vector(const Eigen::VectorXcd& v, double tol) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i].imag()) > tol) return false;
    if (std::abs(v[i].real() - std::round(v[i].real())) > tol) return false;
  }
  return true;
}

}  // namespace

// --- Signature -------------------------------------------------------------

Signature Signature::make(int r, int s) {
  if (r < 0 || s < 0) throw ValidationError("signature: r and s must be nonnegative");
  if (r + 2 * s < 2) throw ValidationError("signature: degree r+2s must be at least 2");
  return Signature{r, s};
}

// --- KREElement ------------------------------------------------------------

KREElement::KREElement(Signature sig, std::vector<double> real_part, std::vector<Complex> complex_part)
    : sig_(sig), real_(std::move(real_part)), complex_(std::move(complex_part)) {
  if (static_cast<int>(real_.size()) != sig_.r || static_cast<int>(complex_.size()) != sig_.s) {
    throw ValidationError("KREElement: component counts do not match the signature");
  }
  for (double x : real_) require_finite(x, "KREElement");
  for (const auto& z : complex_) require_finite(z, "KREElement");
}

KREElement KREElement::from_coordinates(Signature sig, std::span<const Complex> coords) {
  if (static_cast<int>(coords.size()) != sig.archimedean()) {
    throw ValidationError("KREElement: expected r+s coordinates");
  }
  std::vector<double> re;
  re.reserve(static_cast<std::size_t>(sig.r));
  for (int i = 0; i < sig.r; ++i) {
    if (std::abs(coords[i].imag()) > 1e-9 * std::max(1.0, std::abs(coords[i]))) {
      throw ValidationError("KREElement: real coordinate with nonzero imaginary part");
    }
    re.push_back(coords[i].real());
  }
  std::vector<Complex> cx(coords.begin() + sig.r, coords.end());
  return KREElement(sig, std::move(re), std::move(cx));
}

KREElement KREElement::from_embeddings(Signature sig, std::span<const Complex> tuple) {
  if (static_cast<int>(tuple.size()) < sig.archimedean()) {
    throw ValidationError("KREElement: embedding tuple too short");
  }
  return from_coordinates(sig, tuple.first(static_cast<std::size_t>(sig.archimedean())));
}

KREElement KREElement::one(Signature sig) {
  return KREElement(sig, std::vector<double>(static_cast<std::size_t>(sig.r), 1.0),
                    std::vector<Complex>(static_cast<std::size_t>(sig.s), Complex(1.0, 0.0)));
}

Complex KREElement::operator[](int i) const {
  if (i < sig_.r) return {real_[static_cast<std::size_t>(i)], 0.0};
  return complex_[static_cast<std::size_t>(i - sig_.r)];
}

std::vector<Complex> KREElement::coordinates() const {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) out.push_back((*this)[i]);
  return out;
}

// --- TotallyPositiveElement -----------------------------------------------

TotallyPositiveElement::TotallyPositiveElement(Signature sig, std::vector<double> coords)
    : sig_(sig), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != sig_.archimedean()) {
    throw ValidationError("totally positive element: expected r+s coordinates");
  }
  for (double x : coords_) {
    if (!std::isfinite(x) || !(x > 0.0)) {
      throw ValidationError("totally positive element: every coordinate must be finite and > 0");
    }
  }
}

KREElement TotallyPositiveElement::as_kre() const {
  std::vector<Complex> c(coords_.begin(), coords_.end());
  return KREElement::from_coordinates(sig_, c);
}

// --- operations -------------------------------------------------------------

KREElement kre_mul(const KREElement& a, const KREElement& b) {
  require_same_signature(a.signature(), b.signature());
  std::vector<double> re(a.real_part().size());
  for (std::size_t i = 0; i < re.size(); ++i) re[i] = a.real_part()[i] * b.real_part()[i];
  std::vector<Complex> cx(a.complex_part().size());
  for (std::size_t i = 0; i < cx.size(); ++i) cx[i] = a.complex_part()[i] * b.complex_part()[i];
  return KREElement(a.signature(), std::move(re), std::move(cx));
}

KREElement involution(const KREElement& a) {
  std::vector<Complex> cx(a.complex_part().size());
  std::transform(a.complex_part().begin(), a.complex_part().end(), cx.begin(),
                 [](Complex z) { return std::conj(z); });
  return KREElement(a.signature(), a.real_part(), std::move(cx));
}

double trace(const KREElement& a) {
  double t = 0.0;
  for (double x : a.real_part()) t += x;
  for (const auto& z : a.complex_part()) t += 2.0 * z.real();
  return t;
}

double trace(const TotallyPositiveElement& a) {
  double t = 0.0;
  for (int i = 0; i < a.size(); ++i) t += a.signature().weight(i) * a[i];
  return t;
}

double trace_form(const TotallyPositiveElement& a, const KREElement& x) {
  require_same_signature(a.signature(), x.signature());
  double t = 0.0;
  for (int i = 0; i < a.size(); ++i) t += a.signature().weight(i) * a[i] * std::norm(x[i]);
  return t;
}

TotallyPositiveElement scale_by_norm(const TotallyPositiveElement& a, const KREElement& v) {
  require_same_signature(a.signature(), v.signature());
  std::vector<double> out(a.coords());
  for (int i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(i)] *= std::norm(v[i]);
  return TotallyPositiveElement(a.signature(), std::move(out));
}

std::vector<double> log_embedding(const KREElement& x) {
  std::vector<double> out(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) {
    const double m = std::abs(x[i]);
    if (m == 0.0) throw ValidationError("log_embedding: zero coordinate");
    out[static_cast<std::size_t>(i)] = x.signature().weight(i) * std::log(m);
  }
  return out;
}

double weil_height(const KREElement& x, int degree) {
  if (degree <= 0) throw ValidationError("weil_height: degree must be positive");
  double h = 0.0;
  for (double l : log_embedding(x)) h += std::max(l, 0.0);
  return h / degree;
}

bool is_pisot(const KREElement& u) {
  if (u.size() < 1) return false;
  if (!(std::abs(u[0]) > 1.0 + kTolerance)) return false;
  for (int j = 1; j < u.size(); ++j) {
    if (!(std::abs(u[j]) < 1.0 - kTolerance)) return false;
  }
  return true;
}

double norm_modulus(std::span<const Complex> tuple) {
  double p = 1.0;
  for (const auto& z : tuple) p *= std::abs(z);
  return p;
}

// --- FieldData --------------------------------------------------------------

FieldData FieldData::create(Spec spec) {
  const Signature sig = Signature::make(spec.signature.r, spec.signature.s);
  const int n = sig.degree();
  const auto un = static_cast<std::size_t>(n);

  if (spec.basis_embeddings.rows() != n || spec.basis_embeddings.cols() != n) {
    throw ValidationError("integral basis: expected an n x n embedding matrix");
  }
  for (int j = 0; j < n; ++j) {
    EmbeddingTuple col(un);
    for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = spec.basis_embeddings(i, j);
    check_embedding_structure(sig, col, "integral basis column " + std::to_string(j + 1));
  }

  const Complex det = spec.basis_embeddings.determinant();
  const double disc = std::norm(det);
  if (!std::isfinite(disc) || disc < 1.0 - 1e-6 || std::abs(disc - std::round(disc)) > 1e-6 * std::max(1.0, disc)) {
    std::ostringstream os;
    os << "discriminant: |det(integral basis)|^2 = " << disc << " is not a positive integer";
    throw ValidationError(os.str());
  }

  if (static_cast<int>(spec.unit_generators.size()) != sig.unit_rank()) {
    throw ValidationError("unit generators: expected r+s-1 = " + std::to_string(sig.unit_rank()) + ", got " +
                          std::to_string(spec.unit_generators.size()));
  }
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(spec.basis_embeddings);
  for (std::size_t g = 0; g < spec.unit_generators.size(); ++g) {
    const auto& u = spec.unit_generators[g];
    const std::string what = "unit generator " + std::to_string(g + 1);
    check_embedding_structure(sig, u, what);
    const double nm = norm_modulus(u);
    if (!(std::abs(nm - 1.0) <= 1e-9)) {
      std::ostringstream os;
      os.precision(12);
      os << "generator norm: " << what << " has |norm| = " << nm << ", expected 1";
      throw ValidationError(os.str());
    }
    Eigen::VectorXcd coords = lu.solve(Eigen::Map<const Eigen::VectorXcd>(u.data(), n));
    if (!near_integer_vector(coords, 1e-6)) {
      throw ValidationError("generator integrality: " + what + " is not an integer combination of the basis");
    }
  }

  if (spec.torsion_order < 2 || spec.torsion_order % 2 != 0) {
    throw ValidationError("torsion order: must be a positive even integer");
  }
  if (spec.precision_digits < 1 || spec.precision_digits > 60) {
    throw ValidationError("precision_digits: must lie in [1, 60]");
  }

  // Galois permutations: a group of order n acting regularly on the embeddings.
  if (spec.galois_perms.size() != un) {
    throw ValidationError("galois permutations: expected n = " + std::to_string(n) + " permutations");
  }
  std::set<std::vector<int>> group;
  for (const auto& p : spec.galois_perms) {
    if (p.size() != un) throw ValidationError("galois permutations: wrong length");
    std::vector<int> sorted(p);
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) {
      if (sorted[static_cast<std::size_t>(i)] != i) throw ValidationError("galois permutations: not a permutation");
    }
    group.insert(p);
  }
  if (group.size() != un) throw ValidationError("galois permutations: duplicate permutations");
  std::vector<int> identity(un);
  std::iota(identity.begin(), identity.end(), 0);
  if (!group.contains(identity)) throw ValidationError("galois permutations: identity missing (not a group)");
  for (const auto& p : group) {
    for (const auto& q : group) {
      std::vector<int> pq(un);
      for (std::size_t j = 0; j < un; ++j) pq[j] = p[static_cast<std::size_t>(q[j])];
      if (!group.contains(pq)) throw ValidationError("galois permutations: not closed under composition");
    }
  }
  std::vector<std::vector<int>> ordered(un);
  for (const auto& p : group) {
    auto& slot = ordered[static_cast<std::size_t>(p[0])];
    if (!slot.empty()) throw ValidationError("galois permutations: action on embeddings is not regular");
    slot = p;
  }
  spec.galois_perms = std::move(ordered);

  for (const auto& p : spec.galois_perms) {
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXcd permuted(n);
      for (int i = 0; i < n; ++i) permuted[i] = spec.basis_embeddings(p[static_cast<std::size_t>(i)], j);
      if (!near_integer_vector(lu.solve(permuted), 1e-6)) {
        throw ValidationError("galois permutations: a permutation does not map the integral basis into the ring of integers");
      }
    }
  }

  // Roots of unity are exactly the nonzero integers with Tr(x x*) = n.
  const Eigen::MatrixXd gram = detail::weighted_gram(spec.basis_embeddings, Eigen::VectorXd::Ones(n));
  const Complex zeta1 = std::polar(1.0, 2.0 * std::acos(-1.0) / spec.torsion_order);
  std::vector<EmbeddingTuple> roots;
  EmbeddingTuple generator;
  const bool ok = detail::fincke_pohst(gram, n * (1.0 + 1e-7), [&](const std::vector<std::int64_t>& c, double) {
    EmbeddingTuple e(un, Complex(0.0, 0.0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(i)] += spec.basis_embeddings(i, j) * static_cast<double>(c[static_cast<std::size_t>(j)]);
    }
    roots.push_back(e);
    if (std::abs(e[0] - zeta1) < 1e-7) generator = e;
  });
  if (!ok) throw ValidationError("integral basis: trace form is not positive definite");
  if (static_cast<int>(roots.size()) != spec.torsion_order || generator.empty()) {
    throw ValidationError("torsion order: the ring contains " + std::to_string(roots.size()) +
                          " roots of unity, expected " + std::to_string(spec.torsion_order));
  }

  spec.signature = sig;
  FieldData out(std::move(spec));
  out.discriminant_ = static_cast<std::int64_t>(std::llround(disc));
  out.torsion_generator_ = std::move(generator);
  return out;
}

Eigen::VectorXcd FieldData::basis_coordinates(std::span<const Complex> tuple) const {
  if (static_cast<int>(tuple.size()) != degree()) throw ValidationError("basis_coordinates: wrong tuple length");
  return spec_.basis_embeddings.partialPivLu().solve(Eigen::Map<const Eigen::VectorXcd>(tuple.data(), degree()));
}

// --- IntegerElement ---------------------------------------------------------

IntegerElement::IntegerElement(const FieldData& field, std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  const int n = field.degree();
  if (static_cast<int>(coeffs_.size()) != n) throw ValidationError("IntegerElement: expected n coefficients");
  embeddings_.assign(static_cast<std::size_t>(n), Complex(0.0, 0.0));
  const auto& b = field.basis_embeddings();
  for (int i = 0; i < n; ++i) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < n; ++j) acc += b(i, j) * static_cast<double>(coeffs_[static_cast<std::size_t>(j)]);
    embeddings_[static_cast<std::size_t>(i)] = acc;
  }
}

bool IntegerElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

// --- Galois action ----------------------------------------------------------

EmbeddingTuple conjugate_tuple(const FieldData& field, int index, std::span<const Complex> tuple) {
  const int n = field.degree();
  if (index < 0 || index >= n) {
    throw ValidationError("apply_galois: automorphism index " + std::to_string(index + 1) + " out of range");
  }
  if (static_cast<int>(tuple.size()) != n) throw ValidationError("apply_galois: expected a full n-embedding tuple");
  const auto& perm = field.galois_perms()[static_cast<std::size_t>(index)];
  EmbeddingTuple out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
  return out;
}

KREElement apply_galois(const FieldData& field, int index, std::span<const Complex> tuple) {
  return KREElement::from_embeddings(field.signature(), conjugate_tuple(field, index, tuple));
}

EmbeddingTuple max_modulus_first(const FieldData& field, std::span<const Complex> tuple) {
  const int m = field.signature().archimedean();
  int best = 0;
  for (int i = 1; i < m; ++i) {
    if (std::abs(tuple[static_cast<std::size_t>(i)]) > std::abs(tuple[static_cast<std::size_t>(best)])) best = i;
  }
  // Automorphism `best` satisfies sigma_1 o tau = sigma_best.
  return conjugate_tuple(field, best, tuple);
}

}  // namespace pisot
