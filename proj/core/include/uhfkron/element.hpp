#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "uhfkron/signature.hpp"
#include "uhfkron/tolerances.hpp"

namespace uhfkron {

using Complex = std::complex<double>;

/// Element of A_n(a): a finite complex combination of matrix-unit tensors.
///
/// The term map is always canonical: duplicate indices are merged and no stored
/// coefficient has magnitude at or below the prune threshold. Elements are
/// immutable values; every operation returns a new element.
class AlgebraElement {
 public:
  using TermMap = std::map<Unit, Complex>;

  /// The zero element over `sig`.
  explicit AlgebraElement(Signature sig) : sig_(std::move(sig)) {}
  /// Builds from raw 0-based terms; indices are validated, then canonicalized.
  AlgebraElement(Signature sig, const std::vector<std::pair<Unit, Complex>>& terms,
                 double prune = kDefaultPrune);

  static AlgebraElement matrix_unit(const Signature& sig, const MatrixUnitIndex& idx);
  static AlgebraElement identity(const Signature& sig);

  const Signature& signature() const noexcept { return sig_; }
  const TermMap& units() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of the given 1-based unit (0 when absent).
  Complex coefficient(const MatrixUnitIndex& idx) const;
  /// Terms with 1-based indices, lexicographically sorted.
  std::vector<std::pair<MatrixUnitIndex, Complex>> terms() const;

  /// Re-applies canonicalization with another threshold.
  AlgebraElement canonicalized(double prune = kDefaultPrune) const;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  struct Trusted {};
  AlgebraElement(Trusted, Signature sig, TermMap terms) : sig_(std::move(sig)), terms_(std::move(terms)) {}

  friend AlgebraElement make_trusted(Signature sig, TermMap terms, double prune);

  Signature sig_;
  TermMap terms_;
};

/// Wraps an already-valid term map (indices in range), pruning small coefficients.
/// For use by index-map operations that produce valid units by construction.
AlgebraElement make_trusted(Signature sig, AlgebraElement::TermMap terms, double prune = kDefaultPrune);

AlgebraElement elem_add(const AlgebraElement& x, const AlgebraElement& y, double prune = kDefaultPrune);
AlgebraElement elem_sub(const AlgebraElement& x, const AlgebraElement& y, double prune = kDefaultPrune);
AlgebraElement elem_scale(Complex c, const AlgebraElement& x, double prune = kDefaultPrune);
AlgebraElement elem_adjoint(const AlgebraElement& x);
/// Bilinear extension of the factorwise rule E_{jk} E_{lm} = delta_{kl} E_{jm}.
AlgebraElement elem_mul(const AlgebraElement& x, const AlgebraElement& y, double prune = kDefaultPrune);
/// Tensor product x (x) y over the concatenated signature.
AlgebraElement elem_tensor(const AlgebraElement& x, const AlgebraElement& y);

/// Max coefficient difference is at most `tol` and signatures agree.
bool approx_equal(const AlgebraElement& x, const AlgebraElement& y, double tol = kDefaultCompare);

inline AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) { return elem_add(x, y); }
inline AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) { return elem_sub(x, y); }
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return elem_mul(x, y); }
inline AlgebraElement operator*(Complex c, const AlgebraElement& x) { return elem_scale(c, x); }

}  // namespace uhfkron
