#pragma once

// Brute-force reference computations for the tests. Nothing here calls into the
// library's dense or coproduct code paths; index arithmetic is written out from
// the definitions so that it can disagree with the implementation.

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "uhfkron/element.hpp"

namespace oracle {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// (A [x] B) entry by entry: row m*i + i', column m*j + j', value A_ij B_i'j'.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  const auto n = a.rows();
  const auto m = b.rows();
  Matrix out = Matrix::Zero(n * m, n * m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index ip = 0; ip < m; ++ip)
        for (Eigen::Index jp = 0; jp < m; ++jp) out(m * i + ip, m * j + jp) = a(i, j) * b(ip, jp);
  return out;
}

/// E^{(d)}_{jk} with 0-based j, k.
inline Matrix unit(int d, int j, int k) {
  Matrix e = Matrix::Zero(d, d);
  e(j, k) = 1.0;
  return e;
}

/// Dense form of an element as a sum of Kronecker chains of single-slot units.
inline Matrix dense(const uhfkron::AlgebraElement& x) {
  const auto& sig = x.signature();
  Eigen::Index dim = 1;
  for (int d : sig.dims()) dim *= d;
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& [u, c] : x.units()) {
    Matrix chain = unit(sig.dim(0), u.rows[0], u.cols[0]);
    for (std::size_t i = 1; i < sig.level(); ++i) chain = kron(chain, unit(sig.dim(i), u.rows[i], u.cols[i]));
    out += c * chain;
  }
  return out;
}

inline Matrix identity(Eigen::Index d) { return Matrix::Identity(d, d); }

/// Permutation taking the interleaved tensor ordering (a1, b1, ..., an, bn) to the
/// blocked ordering (a1, ..., an, b1, ..., bn), by enumerating digit tuples.
inline Matrix block_permutation(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t n = a.size();
  std::vector<int> radix_interleaved, radix_blocked;
  for (std::size_t i = 0; i < n; ++i) {
    radix_interleaved.push_back(a[i]);
    radix_interleaved.push_back(b[i]);
  }
  radix_blocked = a;
  radix_blocked.insert(radix_blocked.end(), b.begin(), b.end());
  Eigen::Index dim = 1;
  for (int r : radix_blocked) dim *= r;

  Matrix p = Matrix::Zero(dim, dim);
  std::vector<int> primes(n, 0), seconds(n, 0);  // j'_i, j''_i
  for (Eigen::Index count = 0; count < dim; ++count) {
    Eigen::Index from = 0, to = 0;
    for (std::size_t i = 0; i < n; ++i) from = (from * a[i] + primes[i]) * b[i] + seconds[i];
    for (std::size_t i = 0; i < n; ++i) to = to * a[i] + primes[i];
    for (std::size_t i = 0; i < n; ++i) to = to * b[i] + seconds[i];
    p(to, from) = 1.0;
    // advance (primes..., seconds...) as an odometer
    for (std::size_t pos = 2 * n; pos-- > 0;) {
      int& digit = pos < n ? primes[pos] : seconds[pos - n];
      const int limit = pos < n ? a[pos] : b[pos - n];
      if (++digit < limit) break;
      digit = 0;
    }
  }
  return p;
}

inline Matrix random_matrix(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  return m;
}

/// Expands a dense matrix in the units of a single M_d factor.
inline uhfkron::AlgebraElement expand_level1(const Matrix& m) {
  const int d = static_cast<int>(m.rows());
  std::vector<std::pair<uhfkron::Unit, uhfkron::Complex>> terms;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) terms.push_back({uhfkron::Unit{{j}, {k}}, m(j, k)});
  return uhfkron::AlgebraElement(uhfkron::Signature{d}, terms);
}

inline double max_diff(const Matrix& x, const Matrix& y) { return (x - y).cwiseAbs().maxCoeff(); }

}  // namespace oracle
