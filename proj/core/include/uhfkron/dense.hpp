#pragma once

#include <Eigen/Dense>

#include "uhfkron/element.hpp"

namespace uhfkron {

/// Square complex matrix used as the brute-force oracle representation.
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/// Standard lexicographic Kronecker product:
/// (A [x] B)(m*i + i', m*j + j') = A(i, j) B(i', j'), m = rows(B), 0-based.
DenseMatrix kron_box(const DenseMatrix& a, const DenseMatrix& b);

/// Flat 0-based row (or column) index of a tensor index tuple, last slot fastest.
std::size_t flat_index(const Signature& sig, std::span<const int> digits);

/// Materializes x as a prod(a_i)-square matrix, so that
/// dense(E_{j1k1} (x) ... (x) E_{jnkn}) = E_{j1k1} [x] ... [x] E_{jnkn}.
/// Throws a resource error when the total dimension exceeds `guard`.
DenseMatrix to_dense(const AlgebraElement& x, std::size_t guard = kDenseGuard);

/// Permutation P with to_dense(coproduct_phi(x, a, b)) = P to_dense(x) P^T.
DenseMatrix block_permutation(const Signature& a, const Signature& b, std::size_t guard = kDenseGuard);

/// Largest absolute entrywise difference.
double max_abs_diff(const DenseMatrix& x, const DenseMatrix& y);

}  // namespace uhfkron
