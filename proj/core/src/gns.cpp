#include "uhfkron/gns.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "uhfkron/coproduct.hpp"
#include "uhfkron/error.hpp"

namespace uhfkron {

namespace {

// Visits every (row, col) position where a matrix unit acts on the tensor product of
// factor purifications: slot i maps (k_i, s) to (j_i, s) for s < rank_i. Slots of the
// unit are read starting at `first`.
template <class Fn>
void for_each_unit_entry(std::span<const FactorGns> factors, const Unit& u, std::size_t first, Fn&& fn) {
  const std::size_t n = factors.size();
  std::vector<int> s(n, 0);
  while (true) {
    std::size_t row = 0;
    std::size_t col = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto radix = factors[i].space_dim();
      const auto r = static_cast<std::size_t>(factors[i].rank);
      row = row * radix + static_cast<std::size_t>(u.rows[first + i]) * r + static_cast<std::size_t>(s[i]);
      col = col * radix + static_cast<std::size_t>(u.cols[first + i]) * r + static_cast<std::size_t>(s[i]);
    }
    fn(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++s[pos] < factors[pos].rank) break;
      s[pos] = 0;
      if (pos == 0) return;
    }
  }
}

std::size_t space_dim_of(std::span<const FactorGns> factors) {
  std::size_t dim = 1;
  for (const auto& f : factors) dim *= f.space_dim();
  return dim;
}

// pi(E_u) Omega for the slots [first, first + factors.size()) of u.
DenseVector unit_lambda(std::span<const FactorGns> factors, const DenseVector& cyclic, const Unit& u,
                        std::size_t first) {
  DenseVector out = DenseVector::Zero(cyclic.size());
  for_each_unit_entry(factors, u, first, [&](Eigen::Index row, Eigen::Index col) { out(row) += cyclic(col); });
  return out;
}

DenseMatrix unit_rep(std::span<const FactorGns> factors, const Unit& u, std::size_t first) {
  const auto dim = static_cast<Eigen::Index>(space_dim_of(factors));
  DenseMatrix out = DenseMatrix::Zero(dim, dim);
  for_each_unit_entry(factors, u, first, [&](Eigen::Index row, Eigen::Index col) { out(row, col) += 1.0; });
  return out;
}

void require_sig(const GnsTriplet& g, const AlgebraElement& x) {
  if (x.signature() != g.signature()) {
    throw Error(ErrorCode::signature_mismatch, "GNS triplet over " + g.signature().to_string() +
                                                   " applied to element over " + x.signature().to_string());
  }
}

void require_pair_sig(const GnsTriplet& t, const GnsTriplet& r, const AlgebraElement& y) {
  if (y.signature() != t.signature().concat(r.signature())) {
    throw Error(ErrorCode::signature_mismatch, "tensor representation over " + t.signature().to_string() +
                                                   " (x) " + r.signature().to_string() + " applied to element over " +
                                                   y.signature().to_string());
  }
}

}  // namespace

FactorGns gns_factor(const DensityFactor& t, double cutoff) {
  const DenseMatrix herm = 0.5 * (t.matrix() + t.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(herm);
  const auto& values = eig.eigenvalues();
  const auto& vectors = eig.eigenvectors();

  // Keep eigenvalues above the cutoff, largest first; ties keep the solver's vector order.
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) > cutoff) kept.push_back(i);
  }
  std::stable_sort(kept.begin(), kept.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return values(x) > values(y) + kGnsEigenCutoff; });
  if (kept.empty()) throw Error(ErrorCode::consistency, "density factor has no eigenvalue above the GNS cutoff");

  FactorGns out;
  out.algebra_dim = t.dim();
  out.rank = static_cast<int>(kept.size());
  out.cyclic = DenseVector::Zero(static_cast<Eigen::Index>(out.space_dim()));
  for (std::size_t s = 0; s < kept.size(); ++s) {
    DenseVector v = vectors.col(kept[s]);
    // Fix the phase: largest-magnitude component real and positive.
    Eigen::Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    v *= std::conj(v(arg)) / std::abs(v(arg));
    const double weight = std::sqrt(values(kept[s]));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      out.cyclic(i * out.rank + static_cast<Eigen::Index>(s)) = weight * v(i);
    }
  }
  return out;
}

GnsTriplet::GnsTriplet(ProductState source, std::vector<FactorGns> factors)
    : source_(std::move(source)), factors_(std::move(factors)), space_dim_(space_dim_of(factors_)) {
  cyclic_ = factors_.front().cyclic;
  for (std::size_t i = 1; i < factors_.size(); ++i) cyclic_ = kron_box(cyclic_, factors_[i].cyclic);
}

DenseMatrix GnsTriplet::rep(const AlgebraElement& x) const {
  require_sig(*this, x);
  const auto dim = static_cast<Eigen::Index>(space_dim_);
  DenseMatrix out = DenseMatrix::Zero(dim, dim);
  for (const auto& [unit, coeff] : x.units()) {
    for_each_unit_entry(factors_, unit, 0, [&](Eigen::Index row, Eigen::Index col) { out(row, col) += coeff; });
  }
  return out;
}

DenseVector GnsTriplet::apply(const AlgebraElement& x, const DenseVector& v) const {
  require_sig(*this, x);
  if (v.size() != static_cast<Eigen::Index>(space_dim_)) {
    throw Error(ErrorCode::validation, "vector length does not match the GNS space");
  }
  DenseVector out = DenseVector::Zero(v.size());
  for (const auto& [unit, coeff] : x.units()) {
    for_each_unit_entry(factors_, unit, 0, [&](Eigen::Index row, Eigen::Index col) { out(row) += coeff * v(col); });
  }
  return out;
}

DenseMatrix conjugate_rep(const GnsTriplet& g, const AlgebraElement& x, const DenseMatrix& u) {
  require_sig(g, x);
  if (u.cols() != static_cast<Eigen::Index>(g.space_dim())) {
    throw Error(ErrorCode::validation, "conjugating matrix does not match the GNS space");
  }
  DenseMatrix out = DenseMatrix::Zero(u.rows(), u.rows());
  for (const auto& [unit, coeff] : x.units()) {
    for_each_unit_entry(g.factors(), unit, 0, [&](Eigen::Index row, Eigen::Index col) {
      out.noalias() += coeff * u.col(row) * u.col(col).adjoint();
    });
  }
  return out;
}

GnsTriplet gns_build(const ProductState& s, double cutoff, std::size_t guard) {
  std::vector<FactorGns> factors;
  factors.reserve(s.level());
  std::size_t dim = 1;
  for (const auto& t : s.factors()) {
    factors.push_back(gns_factor(t, cutoff));
    dim *= factors.back().space_dim();
    if (dim > guard) {
      throw Error(ErrorCode::resource, "GNS space of state over " + s.signature().to_string() +
                                           " exceeds the guard " + std::to_string(guard));
    }
  }
  return GnsTriplet(s, std::move(factors));
}

DenseVector gns_lambda(const GnsTriplet& g, const AlgebraElement& x) { return g.apply(x, g.cyclic()); }

DenseVector tensor_lambda(const GnsTriplet& t, const GnsTriplet& r, const AlgebraElement& y) {
  require_pair_sig(t, r, y);
  DenseVector out = DenseVector::Zero(static_cast<Eigen::Index>(t.space_dim() * r.space_dim()));
  for (const auto& [unit, coeff] : y.units()) {
    const DenseVector left = unit_lambda(t.factors(), t.cyclic(), unit, 0);
    const DenseVector right = unit_lambda(r.factors(), r.cyclic(), unit, t.signature().level());
    out += coeff * kron_box(left, right);
  }
  return out;
}

DenseMatrix tensor_rep(const GnsTriplet& t, const GnsTriplet& r, const AlgebraElement& y) {
  require_pair_sig(t, r, y);
  const auto dim = static_cast<Eigen::Index>(t.space_dim() * r.space_dim());
  DenseMatrix out = DenseMatrix::Zero(dim, dim);
  for (const auto& [unit, coeff] : y.units()) {
    out += coeff * kron_box(unit_rep(t.factors(), unit, 0), unit_rep(r.factors(), unit, t.signature().level()));
  }
  return out;
}

DenseMatrix tensor_phi_rep(const GnsTriplet& t, const GnsTriplet& r, const AlgebraElement& x) {
  return tensor_rep(t, r, coproduct_phi(x, t.signature(), r.signature()));
}

Intertwiner gns_intertwiner(const ProductState& t, const ProductState& r, double gram_tol, std::size_t guard) {
  if (t.level() != r.level()) {
    throw Error(ErrorCode::signature_mismatch, "intertwiner needs equal levels: " + t.signature().to_string() +
                                                   " vs " + r.signature().to_string());
  }
  Intertwiner out{gns_build(state_boxtimes(t, r), kGnsEigenCutoff, guard), gns_build(t, kGnsEigenCutoff, guard),
                  gns_build(r, kGnsEigenCutoff, guard), DenseMatrix(), 0.0};
  const std::size_t dim = out.product.space_dim();
  if (dim != out.left.space_dim() * out.right.space_dim()) {
    throw Error(ErrorCode::consistency, "GNS dimensions disagree: " + std::to_string(dim) + " vs " +
                                            std::to_string(out.left.space_dim()) + "*" +
                                            std::to_string(out.right.space_dim()));
  }

  const Signature& ab = out.product.signature();
  const auto units = static_cast<Eigen::Index>(unit_count(ab));
  DenseMatrix source(static_cast<Eigen::Index>(dim), units);
  DenseMatrix target(static_cast<Eigen::Index>(dim), units);
  Eigen::Index col = 0;
  for_each_unit(ab, [&](const Unit& u) {
    AlgebraElement::TermMap term;
    term.emplace(u, Complex(1.0, 0.0));
    const AlgebraElement e = make_trusted(ab, std::move(term));
    source.col(col) = gns_lambda(out.product, e);
    target.col(col) = tensor_lambda(out.left, out.right, coproduct_phi(e, t.signature(), r.signature()));
    ++col;
  });

  const DenseMatrix gram_source = source.adjoint() * source;
  const DenseMatrix gram_target = target.adjoint() * target;
  out.gram_error = max_abs_diff(gram_source, gram_target);
  if (out.gram_error > gram_tol) {
    throw Error(ErrorCode::consistency,
                "Gram matrices of the two spanning families differ by " + std::to_string(out.gram_error));
  }

  out.unitary = target * source.completeOrthogonalDecomposition().pseudoInverse();
  return out;
}

std::size_t commutant_dimension(const Signature& sig, std::size_t space_dim, const Representation& rep,
                                double rank_cutoff, std::size_t guard) {
  if (space_dim > guard) {
    throw Error(ErrorCode::resource, "commutant of a " + std::to_string(space_dim) +
                                         "-dimensional representation exceeds the guard " + std::to_string(guard));
  }
  const auto n = static_cast<Eigen::Index>(space_dim);
  const Eigen::Index unknowns = n * n;

  // Rows of the system [A, X] = 0 in vec(X) (column-major), compressed to an
  // upper-triangular factor whenever the buffer fills up.
  DenseMatrix buffer = DenseMatrix::Zero(2 * unknowns, unknowns);
  Eigen::Index filled = 0;
  auto compress = [&] {
    Eigen::HouseholderQR<DenseMatrix> qr(buffer.topRows(filled));
    const Eigen::Index keep = std::min(filled, unknowns);
    DenseMatrix r = qr.matrixQR().topRows(keep).triangularView<Eigen::Upper>();
    buffer.setZero();
    buffer.topRows(keep) = r;
    filled = keep;
  };

  for_each_unit(sig, [&](const Unit& u) {
    AlgebraElement::TermMap term;
    term.emplace(u, Complex(1.0, 0.0));
    const DenseMatrix a = rep(make_trusted(sig, std::move(term)));
    if (a.rows() != n || a.cols() != n) {
      throw Error(ErrorCode::validation, "representation returned a matrix of the wrong size");
    }
    std::vector<bool> row_used(static_cast<std::size_t>(n)), col_used(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (a(i, j) != Complex{}) {
          row_used[static_cast<std::size_t>(i)] = true;
          col_used[static_cast<std::size_t>(j)] = true;
        }
      }
    }
    for (Eigen::Index q = 0; q < n; ++q) {
      for (Eigen::Index p = 0; p < n; ++p) {
        if (!row_used[static_cast<std::size_t>(p)] && !col_used[static_cast<std::size_t>(q)]) continue;
        if (filled == buffer.rows()) compress();
        auto row = buffer.row(filled);
        for (Eigen::Index t = 0; t < n; ++t) {
          row(t + n * q) += a(p, t);   // (A X)(p, q)
          row(p + n * t) -= a(t, q);   // (X A)(p, q)
        }
        ++filled;
      }
    }
  });

  if (filled == 0) return static_cast<std::size_t>(unknowns);
  Eigen::BDCSVD<DenseMatrix> svd(buffer.topRows(filled));
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > rank_cutoff) ++rank;
  }
  return static_cast<std::size_t>(unknowns - rank);
}

std::size_t commutant_dimension(const GnsTriplet& g, double rank_cutoff, std::size_t guard) {
  return commutant_dimension(
      g.signature(), g.space_dim(), [&g](const AlgebraElement& x) { return g.rep(x); }, rank_cutoff, guard);
}

}  // namespace uhfkron
