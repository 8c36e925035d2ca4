#include "uhfkron/dense.hpp"

#include "uhfkron/error.hpp"

namespace uhfkron {

DenseMatrix kron_box(const DenseMatrix& a, const DenseMatrix& b) {
  const Eigen::Index br = b.rows();
  const Eigen::Index bc = b.cols();
  DenseMatrix out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

std::size_t flat_index(const Signature& sig, std::span<const int> digits) {
  std::size_t flat = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    flat = flat * static_cast<std::size_t>(sig.dim(i)) + static_cast<std::size_t>(digits[i]);
  }
  return flat;
}

DenseMatrix to_dense(const AlgebraElement& x, std::size_t guard) {
  const auto dim = static_cast<Eigen::Index>(x.signature().total_dim(guard));
  DenseMatrix out = DenseMatrix::Zero(dim, dim);
  for (const auto& [unit, coeff] : x.units()) {
    out(static_cast<Eigen::Index>(flat_index(x.signature(), unit.rows)),
        static_cast<Eigen::Index>(flat_index(x.signature(), unit.cols))) += coeff;
  }
  return out;
}

DenseMatrix block_permutation(const Signature& a, const Signature& b, std::size_t guard) {
  if (a.level() != b.level()) {
    throw Error(ErrorCode::signature_mismatch,
                "block permutation needs equal levels: " + a.to_string() + " vs " + b.to_string());
  }
  const std::size_t n = a.level();
  const Signature ab = a * b;
  const Signature blocked = a.concat(b);
  const auto dim = static_cast<Eigen::Index>(ab.total_dim(guard));
  DenseMatrix p = DenseMatrix::Zero(dim, dim);

  std::vector<int> interleaved(n, 0);
  std::vector<int> split(2 * n, 0);
  for (Eigen::Index flat = 0; flat < dim; ++flat) {
    for (std::size_t i = 0; i < n; ++i) {
      split[i] = interleaved[i] / b.dim(i);
      split[n + i] = interleaved[i] % b.dim(i);
    }
    p(static_cast<Eigen::Index>(flat_index(blocked, split)), flat) = 1.0;
    for (std::size_t pos = n; pos-- > 0;) {
      if (++interleaved[pos] < ab.dim(pos)) break;
      interleaved[pos] = 0;
    }
  }
  return p;
}

double max_abs_diff(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw Error(ErrorCode::signature_mismatch, "dense shapes differ");
  }
  if (x.size() == 0) return 0.0;
  return (x - y).cwiseAbs().maxCoeff();
}

}  // namespace uhfkron
