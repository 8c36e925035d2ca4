#include "uhfkron/element.hpp"

#include <cmath>

#include "uhfkron/error.hpp"

namespace uhfkron {

namespace {

void require_same(const AlgebraElement& x, const AlgebraElement& y, const char* op) {
  if (x.signature() != y.signature()) {
    throw Error(ErrorCode::signature_mismatch, std::string(op) + ": signatures differ, " +
                                                   x.signature().to_string() + " vs " + y.signature().to_string());
  }
}

void prune_in_place(AlgebraElement::TermMap& terms, double prune) {
  std::erase_if(terms, [prune](const auto& kv) { return std::abs(kv.second) <= prune; });
}

bool valid_unit(const Signature& sig, const Unit& u) {
  if (u.rows.size() != sig.level() || u.cols.size() != sig.level()) return false;
  for (std::size_t i = 0; i < sig.level(); ++i) {
    if (u.rows[i] < 0 || u.rows[i] >= sig.dim(i) || u.cols[i] < 0 || u.cols[i] >= sig.dim(i)) return false;
  }
  return true;
}

}  // namespace

AlgebraElement make_trusted(Signature sig, AlgebraElement::TermMap terms, double prune) {
  prune_in_place(terms, prune);
  return AlgebraElement(AlgebraElement::Trusted{}, std::move(sig), std::move(terms));
}

AlgebraElement::AlgebraElement(Signature sig, const std::vector<std::pair<Unit, Complex>>& terms, double prune)
    : sig_(std::move(sig)) {
  for (const auto& [unit, coeff] : terms) {
    if (!valid_unit(sig_, unit)) {
      // Re-run the public validation for a message naming the factor.
      (void)to_unit(sig_, to_public(unit));
      throw Error(ErrorCode::validation, "invalid matrix unit for " + sig_.to_string());
    }
    terms_[unit] += coeff;
  }
  prune_in_place(terms_, prune);
}

AlgebraElement AlgebraElement::matrix_unit(const Signature& sig, const MatrixUnitIndex& idx) {
  TermMap terms;
  terms.emplace(to_unit(sig, idx), Complex(1.0, 0.0));
  return AlgebraElement(Trusted{}, sig, std::move(terms));
}

AlgebraElement AlgebraElement::identity(const Signature& sig) {
  TermMap terms;
  const std::size_t n = sig.level();
  std::vector<int> digits(n, 0);
  while (true) {
    terms.emplace(Unit{digits, digits}, Complex(1.0, 0.0));
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < sig.dim(pos)) break;
      digits[pos] = 0;
      if (pos == 0) return AlgebraElement(Trusted{}, sig, std::move(terms));
    }
  }
}

Complex AlgebraElement::coefficient(const MatrixUnitIndex& idx) const {
  const auto it = terms_.find(to_unit(sig_, idx));
  return it == terms_.end() ? Complex{} : it->second;
}

std::vector<std::pair<MatrixUnitIndex, Complex>> AlgebraElement::terms() const {
  std::vector<std::pair<MatrixUnitIndex, Complex>> out;
  out.reserve(terms_.size());
  for (const auto& [unit, coeff] : terms_) out.emplace_back(to_public(unit), coeff);
  return out;
}

AlgebraElement AlgebraElement::canonicalized(double prune) const { return make_trusted(sig_, terms_, prune); }

AlgebraElement elem_add(const AlgebraElement& x, const AlgebraElement& y, double prune) {
  require_same(x, y, "add");
  AlgebraElement::TermMap terms = x.units();
  for (const auto& [unit, coeff] : y.units()) terms[unit] += coeff;
  return make_trusted(x.signature(), std::move(terms), prune);
}

AlgebraElement elem_sub(const AlgebraElement& x, const AlgebraElement& y, double prune) {
  require_same(x, y, "subtract");
  AlgebraElement::TermMap terms = x.units();
  for (const auto& [unit, coeff] : y.units()) terms[unit] -= coeff;
  return make_trusted(x.signature(), std::move(terms), prune);
}

AlgebraElement elem_scale(Complex c, const AlgebraElement& x, double prune) {
  AlgebraElement::TermMap terms = x.units();
  for (auto& [unit, coeff] : terms) coeff *= c;
  return make_trusted(x.signature(), std::move(terms), prune);
}

AlgebraElement elem_adjoint(const AlgebraElement& x) {
  AlgebraElement::TermMap terms;
  for (const auto& [unit, coeff] : x.units()) terms.emplace(Unit{unit.cols, unit.rows}, std::conj(coeff));
  return make_trusted(x.signature(), std::move(terms), 0.0);
}

AlgebraElement elem_mul(const AlgebraElement& x, const AlgebraElement& y, double prune) {
  require_same(x, y, "multiply");
  AlgebraElement::TermMap terms;
  for (const auto& [ux, cx] : x.units()) {
    for (const auto& [uy, cy] : y.units()) {
      if (ux.cols != uy.rows) continue;
      terms[Unit{ux.rows, uy.cols}] += cx * cy;
    }
  }
  return make_trusted(x.signature(), std::move(terms), prune);
}

AlgebraElement elem_tensor(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement::TermMap terms;
  for (const auto& [ux, cx] : x.units()) {
    for (const auto& [uy, cy] : y.units()) {
      Unit u{ux.rows, ux.cols};
      u.rows.insert(u.rows.end(), uy.rows.begin(), uy.rows.end());
      u.cols.insert(u.cols.end(), uy.cols.begin(), uy.cols.end());
      terms.emplace(std::move(u), cx * cy);
    }
  }
  return make_trusted(x.signature().concat(y.signature()), std::move(terms));
}

bool approx_equal(const AlgebraElement& x, const AlgebraElement& y, double tol) {
  if (x.signature() != y.signature()) return false;
  AlgebraElement::TermMap diff = x.units();
  for (const auto& [unit, coeff] : y.units()) diff[unit] -= coeff;
  for (const auto& [unit, coeff] : diff) {
    if (std::abs(coeff) > tol) return false;
  }
  return true;
}

}  // namespace uhfkron
