#include "uhfkron/states.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "uhfkron/coproduct.hpp"
#include "uhfkron/error.hpp"
#include "uhfkron/random.hpp"

namespace uhfkron {

namespace {

std::vector<int> dims_of(const std::vector<DensityFactor>& factors) {
  std::vector<int> dims;
  dims.reserve(factors.size());
  for (const auto& f : factors) dims.push_back(f.dim());
  return dims;
}

// prod_i T_i(k_i, j_i) over slots [first, first + count) of the unit, reading
// state factors from index 0.
Complex unit_value(const ProductState& s, const Unit& u, std::size_t first) {
  Complex value(1.0, 0.0);
  for (std::size_t i = 0; i < s.level(); ++i) {
    value *= s.factor(i)(u.cols[first + i], u.rows[first + i]);
    if (value == Complex{}) break;
  }
  return value;
}

}  // namespace

bool density_validate(const DenseMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() < 2) return false;
  if (!m.allFinite()) return false;
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > tol) return false;
  const DenseMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(herm, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff() >= -tol;
}

DensityFactor::DensityFactor(DenseMatrix matrix, double tol) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw Error(ErrorCode::validation, "density factor must be square");
  if (matrix_.rows() < 2) throw Error(ErrorCode::validation, "density factor dimension must be >= 2");
  if (!density_validate(matrix_, tol)) {
    throw Error(ErrorCode::validation, "matrix of dimension " + std::to_string(matrix_.rows()) +
                                           " is not Hermitian, positive semidefinite with trace 1");
  }
}

DensityFactor DensityFactor::diagonal(std::span<const double> weights, double tol) {
  const auto d = static_cast<Eigen::Index>(weights.size());
  DenseMatrix m = DenseMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m(i, i) = weights[static_cast<std::size_t>(i)];
  return DensityFactor(std::move(m), tol);
}

DensityFactor random_density(int dim, std::uint64_t seed) {
  if (dim < 2) throw Error(ErrorCode::validation, "random density needs dim >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  DenseMatrix g(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) g(r, c) = Complex(normal(rng), normal(rng));
  }
  DenseMatrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  return DensityFactor(std::move(rho));
}

DensityFactor factor_boxtimes(const DensityFactor& t, const DensityFactor& r) {
  return DensityFactor(kron_box(t.matrix(), r.matrix()));
}

ProductState::ProductState(std::vector<DensityFactor> factors)
    : factors_(std::move(factors)), sig_(dims_of(factors_)) {}

Complex state_evaluate(const ProductState& s, const AlgebraElement& x) {
  if (x.signature() != s.signature()) {
    throw Error(ErrorCode::signature_mismatch, "state over " + s.signature().to_string() +
                                                   " evaluated on element over " + x.signature().to_string());
  }
  Complex total{};
  for (const auto& [unit, coeff] : x.units()) total += coeff * unit_value(s, unit, 0);
  return total;
}

Complex state_evaluate_tensor(const ProductState& s, const ProductState& r, const AlgebraElement& y) {
  if (y.signature() != s.signature().concat(r.signature())) {
    throw Error(ErrorCode::signature_mismatch, "tensor state over " + s.signature().to_string() + " (x) " +
                                                   r.signature().to_string() + " evaluated on element over " +
                                                   y.signature().to_string());
  }
  Complex total{};
  for (const auto& [unit, coeff] : y.units()) {
    total += coeff * unit_value(s, unit, 0) * unit_value(r, unit, s.level());
  }
  return total;
}

ProductState state_boxtimes(const ProductState& s, const ProductState& r) {
  if (s.level() != r.level()) {
    throw Error(ErrorCode::signature_mismatch, "boxtimes needs equal levels: " + s.signature().to_string() +
                                                   " vs " + r.signature().to_string());
  }
  std::vector<DensityFactor> out;
  out.reserve(s.level());
  for (std::size_t i = 0; i < s.level(); ++i) out.push_back(factor_boxtimes(s.factor(i), r.factor(i)));
  return ProductState(std::move(out));
}

Complex state_tensor_phi_eval(const ProductState& s, const ProductState& r, const AlgebraElement& x) {
  if (s.level() != r.level()) {
    throw Error(ErrorCode::signature_mismatch, "tensor product needs equal levels: " + s.signature().to_string() +
                                                   " vs " + r.signature().to_string());
  }
  return state_evaluate_tensor(s, r, coproduct_phi(x, s.signature(), r.signature()));
}

DenseMatrix state_density_level(const ProductState& s, std::size_t guard) {
  (void)s.signature().total_dim(guard);
  DenseMatrix d = s.factor(0).matrix();
  for (std::size_t i = 1; i < s.level(); ++i) d = kron_box(d, s.factor(i).matrix());
  return d;
}

double state_trace_distance(const ProductState& s1, const ProductState& s2, std::size_t guard) {
  if (s1.signature() != s2.signature()) {
    throw Error(ErrorCode::signature_mismatch, "trace distance needs equal signatures: " +
                                                   s1.signature().to_string() + " vs " + s2.signature().to_string());
  }
  const DenseMatrix diff = state_density_level(s1, guard) - state_density_level(s2, guard);
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(0.5 * (diff + diff.adjoint()), Eigen::EigenvaluesOnly);
  return eig.eigenvalues().cwiseAbs().sum();
}

Complex StateFunctional::operator()(const AlgebraElement& x) const {
  if (x.signature() != sig_) {
    throw Error(ErrorCode::signature_mismatch, "functional over " + sig_.to_string() +
                                                   " evaluated on element over " + x.signature().to_string());
  }
  return fn_(x);
}

StateFunctional as_functional(const ProductState& s) {
  return StateFunctional(s.signature(), [s](const AlgebraElement& x) { return state_evaluate(s, x); });
}

StateFunctional tensor_phi(const StateFunctional& rho1, const StateFunctional& rho2) {
  const Signature a = rho1.signature();
  const Signature b = rho2.signature();
  return StateFunctional(a * b, [rho1, rho2, a, b](const AlgebraElement& x) {
    const std::size_t n = a.level();
    Complex total{};
    const AlgebraElement y = coproduct_phi(x, a, b);
    for (const auto& [unit, coeff] : y.units()) {
      AlgebraElement::TermMap left, right;
      left.emplace(Unit{{unit.rows.begin(), unit.rows.begin() + static_cast<std::ptrdiff_t>(n)},
                        {unit.cols.begin(), unit.cols.begin() + static_cast<std::ptrdiff_t>(n)}},
                   Complex(1.0, 0.0));
      right.emplace(Unit{{unit.rows.begin() + static_cast<std::ptrdiff_t>(n), unit.rows.end()},
                         {unit.cols.begin() + static_cast<std::ptrdiff_t>(n), unit.cols.end()}},
                    Complex(1.0, 0.0));
      total += coeff * rho1(make_trusted(a, std::move(left))) * rho2(make_trusted(b, std::move(right)));
    }
    return total;
  });
}

AlgebraElement random_element(const Signature& sig, std::mt19937_64& rng, std::size_t terms) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::pair<Unit, Complex>> out;
  out.reserve(terms);
  for (std::size_t t = 0; t < terms; ++t) {
    Unit u{std::vector<int>(sig.level()), std::vector<int>(sig.level())};
    for (std::size_t i = 0; i < sig.level(); ++i) {
      std::uniform_int_distribution<int> pick(0, sig.dim(i) - 1);
      u.rows[i] = pick(rng);
      u.cols[i] = pick(rng);
    }
    const double re = normal(rng);
    const double im = normal(rng);
    out.emplace_back(std::move(u), Complex(re, im));
  }
  return AlgebraElement(sig, out);
}

ProductState random_product_state(const Signature& sig, std::uint64_t seed) {
  std::mt19937_64 seeder(seed);
  std::vector<DensityFactor> factors;
  factors.reserve(sig.level());
  for (int d : sig.dims()) factors.push_back(random_density(d, seeder()));
  return ProductState(std::move(factors));
}

}  // namespace uhfkron
