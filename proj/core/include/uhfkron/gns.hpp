#pragma once

#include <functional>
#include <vector>

#include "uhfkron/states.hpp"

namespace uhfkron {

inline constexpr double kGnsEigenCutoff = 1e-12;
inline constexpr double kCommutantRankCutoff = 1e-8;
/// Largest representation space handed to the commutant solver by default.
inline constexpr std::size_t kCommutantGuard = 16;

/// GNS data of a single density factor, realized by purification:
/// space C^d (x) C^r, representation x -> x (x) I_r, cyclic vector
/// sum_i sqrt(lambda_i) v_i (x) e_i over the r eigenvalues above the cutoff.
struct FactorGns {
  int algebra_dim = 0;
  int rank = 0;
  DenseVector cyclic;

  std::size_t space_dim() const noexcept { return static_cast<std::size_t>(algebra_dim) * rank; }
};

FactorGns gns_factor(const DensityFactor& t, double cutoff = kGnsEigenCutoff);

/// Finite-level GNS triplet (H, pi, Omega) of a product state: the tensor product
/// of the factor purifications.
class GnsTriplet {
 public:
  std::size_t space_dim() const noexcept { return space_dim_; }
  const DenseVector& cyclic() const noexcept { return cyclic_; }
  const ProductState& source_state() const noexcept { return source_; }
  const Signature& signature() const noexcept { return source_.signature(); }
  const std::vector<FactorGns>& factors() const noexcept { return factors_; }

  /// pi(x) as a dense matrix on H.
  DenseMatrix rep(const AlgebraElement& x) const;
  /// pi(x) v without materializing pi(x).
  DenseVector apply(const AlgebraElement& x, const DenseVector& v) const;

 private:
  friend GnsTriplet gns_build(const ProductState&, double, std::size_t);

  GnsTriplet(ProductState source, std::vector<FactorGns> factors);

  ProductState source_;
  std::vector<FactorGns> factors_;
  std::size_t space_dim_ = 0;
  DenseVector cyclic_;
};

GnsTriplet gns_build(const ProductState& s, double cutoff = kGnsEigenCutoff, std::size_t guard = kDenseGuard);

/// Lambda(x) = pi(x) Omega.
DenseVector gns_lambda(const GnsTriplet& g, const AlgebraElement& x);

/// (Lambda_T (x) Lambda_R)(y) for y over the concatenated signature (a, b).
DenseVector tensor_lambda(const GnsTriplet& t, const GnsTriplet& r, const AlgebraElement& y);

/// U pi(x) U^dagger, exploiting that pi(E_u) is a partial permutation.
DenseMatrix conjugate_rep(const GnsTriplet& g, const AlgebraElement& x, const DenseMatrix& u);

/// (pi_T (x) pi_R)(y) for y over the concatenated signature (a, b).
DenseMatrix tensor_rep(const GnsTriplet& t, const GnsTriplet& r, const AlgebraElement& y);

/// (pi_T (x)_phi pi_R)(x) = (pi_T (x) pi_R)(phi_{a,b}(x)) for x over a.b.
DenseMatrix tensor_phi_rep(const GnsTriplet& t, const GnsTriplet& r, const AlgebraElement& x);

/// The unitary U: H_{T[x]R} -> H_T (x) H_R with U Lambda_{T[x]R}(x) = (Lambda_T (x) Lambda_R)(phi(x)),
/// together with the three GNS triplets it connects.
struct Intertwiner {
  GnsTriplet product;  // GNS of omega_{T [x] R}
  GnsTriplet left;     // GNS of omega_T
  GnsTriplet right;    // GNS of omega_R
  DenseMatrix unitary;
  double gram_error = 0.0;  // max |<Lambda(x), Lambda(y)> - <Lambda'(x), Lambda'(y)>|
};

/// Builds U by least-squares extension from the images of all matrix units.
/// Throws a consistency error when the two Gram matrices disagree beyond `gram_tol`.
Intertwiner gns_intertwiner(const ProductState& t, const ProductState& r, double gram_tol = 1e-8,
                            std::size_t guard = 256);

using Representation = std::function<DenseMatrix(const AlgebraElement&)>;

/// Dimension of {X : [rep(E_u), X] = 0 for every matrix unit E_u of sig}, decided
/// by counting singular values of the stacked commutator system at or below `rank_cutoff`.
std::size_t commutant_dimension(const Signature& sig, std::size_t space_dim, const Representation& rep,
                                double rank_cutoff = kCommutantRankCutoff, std::size_t guard = kCommutantGuard);

std::size_t commutant_dimension(const GnsTriplet& g, double rank_cutoff = kCommutantRankCutoff,
                                std::size_t guard = kCommutantGuard);

}  // namespace uhfkron
