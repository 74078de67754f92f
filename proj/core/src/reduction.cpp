#include "pisot/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fincke_pohst.hpp"

namespace pisot {

namespace {

constexpr int kMaxRounds = 1'000'000;
constexpr double kTieTolerance = 1e-9;

double abs2(Complex z) { return std::norm(z); }

double max_tail_abs2(const KREElement& u) {
  double m = 0.0;
  for (int j = 1; j < u.size(); ++j) m = std::max(m, abs2(u[j]));
  return m;
}

void require_signature(const FieldData& field, const Signature& sig, const char* what) {
  if (!(sig == field.signature())) {
    throw ValidationError(std::string(what) + ": element signature does not match the field");
  }
}

// Row weights of Tr(a x x*) over the full tuple of n embeddings: the
// conjugate row of a complex place carries the same coefficient.
Eigen::VectorXd embedding_row_weights(const Signature& sig, const std::vector<double>& coords) {
  Eigen::VectorXd w(sig.degree());
  for (int row = 0; row < sig.degree(); ++row) {
    const int place = row < sig.archimedean() ? row : row - sig.s;
    w[row] = coords[static_cast<std::size_t>(place)];
  }
  return w;
}

// Keeps every vector within kTieTolerance of the running minimum so that the
// final choice (lexicographically smallest) does not depend on visit order.
class TieTracker {
 public:
  void offer(const std::vector<std::int64_t>& c, double value) {
    if (value < best_) {
      best_ = value;
      std::erase_if(ties_, [&](const auto& t) { return t.second > limit(); });
    }
    if (value <= limit()) ties_.emplace_back(c, value);
  }

  bool empty() const { return ties_.empty(); }

  std::vector<std::int64_t> argmin() const {
    auto it = std::min_element(ties_.begin(), ties_.end(),
                               [](const auto& x, const auto& y) { return x.first < y.first; });
    return it->first;
  }

 private:
  double limit() const { return best_ + kTieTolerance * std::abs(best_); }

  double best_ = std::numeric_limits<double>::infinity();
  std::vector<std::pair<std::vector<std::int64_t>, double>> ties_;
};

bool is_torsion(std::span<const Complex> tuple) {
  return std::all_of(tuple.begin(), tuple.end(), [](Complex z) { return std::abs(std::abs(z) - 1.0) <= 1e-9; });
}

}  // namespace

double t_k_of_unit(const KREElement& u) {
  if (!is_pisot(u)) throw ValidationError("t_k_of_unit: unit is not Pisot in the given ordering");
  return std::sqrt(1.0 + (abs2(u[0]) - 1.0) / (1.0 - max_tail_abs2(u)));
}

double t_k_delta(const KREElement& u, double delta) {
  if (!is_pisot(u)) throw ValidationError("t_k_delta: unit is not Pisot in the given ordering");
  const double tail = max_tail_abs2(u);
  if (!(delta > tail && delta <= 1.0)) {
    throw ValidationError("t_k_delta: delta must satisfy max_{j>=2}|u_j|^2 < delta <= 1");
  }
  return std::sqrt(1.0 + (abs2(u[0]) - delta) / (delta - tail));
}

ReductionCertificate reduce_unary(const FieldData& field, const TotallyPositiveElement& a,
                                  const UnitExponentVector& u, double delta) {
  const Signature& sig = field.signature();
  require_signature(field, a.signature(), "reduce_unary");
  const LogUnitLattice lattice = build_lattice(field);
  if (u.exponents.size() != static_cast<std::size_t>(lattice.rank())) {
    throw ValidationError("reduce_unary: unit exponent vector has the wrong length");
  }

  const EmbeddingTuple lead = max_modulus_first(field, unit_embeddings(field, u));
  const KREElement lead_kre = KREElement::from_embeddings(sig, lead);
  if (!is_pisot(lead_kre)) throw ValidationError("reduce_unary: unit is not Pisot");
  if (!(delta < 1.0)) throw ValidationError("reduce_unary: delta must be strictly less than 1");

  ReductionCertificate cert;
  cert.t_delta = t_k_delta(lead_kre, delta);

  // Conjugates with identical modulus patterns act identically on a.
  std::vector<KREElement> conj;
  std::vector<UnitExponentVector> conj_exponents;
  std::vector<std::vector<double>> patterns;
  for (int i = 0; i < field.degree(); ++i) {
    const EmbeddingTuple tuple = conjugate_tuple(field, i, lead);
    const KREElement v = KREElement::from_embeddings(sig, tuple);
    std::vector<double> pattern;
    for (int j = 0; j < v.size(); ++j) pattern.push_back(abs2(v[j]));
    if (std::find(patterns.begin(), patterns.end(), pattern) != patterns.end()) continue;
    patterns.push_back(std::move(pattern));
    conj.push_back(v);
    conj_exponents.push_back(exponents_of_unit(field, lattice, tuple));
  }
  cert.conjugates_checked = static_cast<int>(conj.size());

  TotallyPositiveElement current = a;
  double tr = trace(current);
  cert.trace_initial = tr;
  cert.applied = {std::vector<std::int64_t>(static_cast<std::size_t>(lattice.rank()), 0), 0};

  for (std::size_t j = 0; j < conj.size();) {
    TotallyPositiveElement candidate = scale_by_norm(current, conj[j]);
    const double tc = trace(candidate);
    if (tc < delta * tr) {
      current = std::move(candidate);
      tr = tc;
      cert.applied = compose(cert.applied, conj_exponents[j], field.torsion_order());
      if (++cert.rounds > kMaxRounds) throw std::runtime_error("reduce_unary: round limit exceeded");
      j = 0;
    } else {
      ++j;
    }
  }
  cert.reduced_element = std::move(current);
  cert.trace_final = tr;
  return cert;
}

int round_bound(const ReductionCertificate& cert, double delta) {
  const double ratio = std::log(cert.trace_initial / cert.trace_final) / std::log(1.0 / delta);
  if (ratio >= static_cast<double>(std::numeric_limits<int>::max() - 2)) return std::numeric_limits<int>::max();
  return static_cast<int>(std::ceil(ratio - 1e-9)) + 1;
}

IntegerMinimumResult integer_minimum(const FieldData& field, const TotallyPositiveElement& a,
                                     std::optional<double> bound) {
  const Signature& sig = field.signature();
  require_signature(field, a.signature(), "integer_minimum");
  const Eigen::MatrixXd gram = detail::weighted_gram(field.basis_embeddings(), embedding_row_weights(sig, a.coords()));

  double radius = bound.value_or(gram(0, 0));
  if (!(radius > 0.0) || !std::isfinite(radius)) throw ValidationError("integer_minimum: bound must be positive");
  const double cap = radius * std::ldexp(1.0, 10) * field.degree();

  TieTracker tracker;
  for (;;) {
    const bool ok = detail::fincke_pohst(gram, radius, [&](const std::vector<std::int64_t>& c, double value) {
      tracker.offer(c, value);
    });
    if (!ok) throw ValidationError("integer_minimum: Gram matrix is not positive definite");
    if (!tracker.empty()) break;
    if (radius > cap) throw std::runtime_error("integer_minimum: search radius cap reached without a vector");
    radius *= 2.0;
  }

  IntegerMinimumResult out;
  out.argmin = IntegerElement(field, tracker.argmin());
  const KREElement x = out.argmin.kre(sig);
  out.mu = trace_form(a, x);
  out.trace_xx = trace_form(TotallyPositiveElement(sig, std::vector<double>(static_cast<std::size_t>(sig.archimedean()), 1.0)), x);
  return out;
}

NonTorsionMinimum min_trace_nontorsion(const FieldData& field, double search_bound) {
  const Signature& sig = field.signature();
  if (!(search_bound >= field.degree())) throw ValidationError("min_trace_nontorsion: search bound must be at least the degree");
  const Eigen::MatrixXd gram =
      detail::weighted_gram(field.basis_embeddings(), Eigen::VectorXd::Ones(field.degree()));
  const double cap = search_bound * std::ldexp(1.0, 10) * field.degree();
  double radius = search_bound;
  TieTracker tracker;
  for (;;) {
    const bool ok = detail::fincke_pohst(gram, radius, [&](const std::vector<std::int64_t>& c, double value) {
      const Eigen::Map<const Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>> cv(c.data(), static_cast<Eigen::Index>(c.size()));
      const Eigen::VectorXcd emb = field.basis_embeddings() * cv.cast<double>().cast<Complex>();
      if (!is_torsion({emb.data(), static_cast<std::size_t>(emb.size())})) tracker.offer(c, value);
    });
    if (!ok) throw ValidationError("min_trace_nontorsion: Gram matrix is not positive definite");
    if (!tracker.empty()) break;
    if (radius > cap) throw std::runtime_error("min_trace_nontorsion: search radius cap reached");
    radius *= 2.0;
  }
  NonTorsionMinimum out;
  out.argmin = IntegerElement(field, tracker.argmin());
  const TotallyPositiveElement ones(sig, std::vector<double>(static_cast<std::size_t>(sig.archimedean()), 1.0));
  out.value = trace_form(ones, out.argmin.kre(sig));
  return out;
}

Theorem4Report verify_theorem4(const FieldData& field, const TotallyPositiveElement& a,
                               const UnitExponentVector& u, double delta) {
  Theorem4Report report;
  report.certificate = reduce_unary(field, a, u, delta);
  report.minimum = integer_minimum(field, report.certificate.reduced_element);
  // 2 is never torsion and has Tr(2 * 2) = 4n, so this radius is never empty.
  report.min_trace_nontorsion = min_trace_nontorsion(field, 4.0 * field.degree()).value;
  report.t_delta = report.certificate.t_delta;
  const double t2 = report.t_delta * report.t_delta;
  report.factor = std::max(t2 / report.min_trace_nontorsion, 1.0);
  report.trace_bound = report.factor * report.minimum.mu;
  const double rel = 1.0 + 1e-9;
  report.trace_inequality = report.certificate.trace_final <= report.trace_bound * rel;
  report.argmin_inequality = report.minimum.trace_xx <= t2 * rel;
  return report;
}

}  // namespace pisot
