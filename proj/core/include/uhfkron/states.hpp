#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "uhfkron/dense.hpp"

namespace uhfkron {

/// Density matrix T in M_{d,+,1}: Hermitian, positive semidefinite, trace one.
class DensityFactor {
 public:
  /// Validates the matrix within `tol` (Hermiticity, min eigenvalue >= -tol, trace).
  explicit DensityFactor(DenseMatrix matrix, double tol = 1e-10);

  static DensityFactor diagonal(std::span<const double> weights, double tol = 1e-10);

  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  const DenseMatrix& matrix() const noexcept { return matrix_; }
  /// 0-based entry T(row, col).
  Complex operator()(int row, int col) const { return matrix_(row, col); }

 private:
  DenseMatrix matrix_;
};

/// Checks the density conditions without throwing.
bool density_validate(const DenseMatrix& matrix, double tol = 1e-10);

/// G G^dagger / tr(G G^dagger) with G complex Gaussian; deterministic per seed.
DensityFactor random_density(int dim, std::uint64_t seed);

/// T [x] R as a density factor.
DensityFactor factor_boxtimes(const DensityFactor& t, const DensityFactor& r);

/// Level-n data (T^(1), ..., T^(n)) of the product state omega_T.
class ProductState {
 public:
  explicit ProductState(std::vector<DensityFactor> factors);

  const Signature& signature() const noexcept { return sig_; }
  std::size_t level() const noexcept { return factors_.size(); }
  const std::vector<DensityFactor>& factors() const noexcept { return factors_; }
  const DensityFactor& factor(std::size_t slot) const { return factors_.at(slot); }

 private:
  std::vector<DensityFactor> factors_;
  Signature sig_;
};

/// omega_T(E_{j1k1} (x) ... (x) E_{jnkn}) = T1_{k1 j1} ... Tn_{kn jn}, extended linearly.
Complex state_evaluate(const ProductState& s, const AlgebraElement& x);

/// (omega_S (x) omega_R)(y) for y over the concatenated signature (sig S, sig R).
Complex state_evaluate_tensor(const ProductState& s, const ProductState& r, const AlgebraElement& y);

/// Componentwise Kronecker product (T1 [x] R1, T2 [x] R2, ...).
ProductState state_boxtimes(const ProductState& s, const ProductState& r);

/// (omega_S (x)_phi omega_R)(x) = (omega_S (x) omega_R)(phi_{a,b}(x)).
Complex state_tensor_phi_eval(const ProductState& s, const ProductState& r, const AlgebraElement& x);

/// D = T1 [x] ... [x] Tn, the unique matrix with omega(x) = tr(D dense(x)).
DenseMatrix state_density_level(const ProductState& s, std::size_t guard = kDenseGuard);

/// Trace-norm distance ||D1 - D2||_1 of the level-n densities.
double state_trace_distance(const ProductState& s1, const ProductState& s2, std::size_t guard = kDenseGuard);

/// A linear functional on A_n(sig), not necessarily of product form.
class StateFunctional {
 public:
  using Fn = std::function<Complex(const AlgebraElement&)>;

  StateFunctional(Signature sig, Fn fn) : sig_(std::move(sig)), fn_(std::move(fn)) {}

  const Signature& signature() const noexcept { return sig_; }
  /// Throws a signature-mismatch error when x is not over signature().
  Complex operator()(const AlgebraElement& x) const;

 private:
  Signature sig_;
  Fn fn_;
};

StateFunctional as_functional(const ProductState& s);

/// rho1 (x)_phi rho2 = (rho1 (x) rho2) o phi_{a,b}; levels of the operands must agree.
StateFunctional tensor_phi(const StateFunctional& rho1, const StateFunctional& rho2);

}  // namespace uhfkron
