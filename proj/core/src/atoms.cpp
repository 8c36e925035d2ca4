#include "uhfkron/atoms.hpp"

#include <algorithm>

#include "uhfkron/error.hpp"

namespace uhfkron {

namespace {

void check_entry(int base, int value, const std::string& where) {
  if (value < 1 || value > base) {
    throw Error(ErrorCode::validation, "atom label entry " + std::to_string(value) + " at " + where +
                                           " out of range 1.." + std::to_string(base));
  }
}

}  // namespace

AtomLabel::AtomLabel(int base, std::vector<int> prefix, std::optional<int> tail)
    : base_(base), prefix_(std::move(prefix)), tail_(tail) {
  if (base_ < 2) throw Error(ErrorCode::validation, "atom label base must be >= 2");
  if (prefix_.empty()) throw Error(ErrorCode::validation, "atom label prefix must be non-empty");
  for (std::size_t l = 0; l < prefix_.size(); ++l) check_entry(base_, prefix_[l], "position " + std::to_string(l + 1));
  if (tail_) check_entry(base_, *tail_, "tail");
}

std::optional<std::size_t> AtomLabel::defined_length() const noexcept {
  if (tail_) return std::nullopt;
  return prefix_.size();
}

bool AtomLabel::defined_up_to(std::size_t level) const noexcept { return tail_ || level <= prefix_.size(); }

int AtomLabel::at(std::size_t position) const {
  if (position == 0) throw Error(ErrorCode::validation, "atom label positions are 1-based");
  if (position <= prefix_.size()) return prefix_[position - 1];
  if (tail_) return *tail_;
  throw Error(ErrorCode::validation, "atom label of length " + std::to_string(prefix_.size()) +
                                         " has no entry at position " + std::to_string(position));
}

ProductState atom_state(const AtomLabel& label, std::size_t level) {
  if (level == 0) throw Error(ErrorCode::validation, "atom state level must be >= 1");
  if (!label.defined_up_to(level)) {
    throw Error(ErrorCode::validation, "atom label of length " + std::to_string(label.prefix().size()) +
                                           " without tail cannot reach level " + std::to_string(level));
  }
  std::vector<DensityFactor> factors;
  factors.reserve(level);
  for (std::size_t l = 1; l <= level; ++l) {
    DenseMatrix f = DenseMatrix::Zero(label.base(), label.base());
    const int j = label.at(l) - 1;
    f(j, j) = 1.0;
    factors.emplace_back(std::move(f));
  }
  return ProductState(std::move(factors));
}

AtomLabel atom_label_product(const AtomLabel& j, const AtomLabel& k) {
  const int m = k.base();
  const auto jl = j.defined_length();
  const auto kl = k.defined_length();
  std::size_t length = 0;
  if (jl && kl) {
    if (*jl != *kl) {
      throw Error(ErrorCode::validation, "atom labels have different lengths " + std::to_string(*jl) + " and " +
                                             std::to_string(*kl) + " and no tails");
    }
    length = *jl;
  } else if (jl) {
    length = *jl;
  } else if (kl) {
    length = *kl;
  } else {
    length = std::max(j.prefix().size(), k.prefix().size());
  }
  std::vector<int> prefix(length);
  for (std::size_t l = 1; l <= length; ++l) prefix[l - 1] = m * (j.at(l) - 1) + k.at(l);
  std::optional<int> tail;
  if (j.tail() && k.tail()) tail = m * (*j.tail() - 1) + *k.tail();
  return AtomLabel(j.base() * m, std::move(prefix), tail);
}

AtomCheck atom_check_product(const AtomLabel& j, const AtomLabel& k, const AtomLabel& claimed, std::size_t level) {
  AtomCheck out;
  if (claimed.base() != j.base() * k.base()) {
    out.ok = false;
    out.diagnostic = "claimed base " + std::to_string(claimed.base()) + " differs from " +
                     std::to_string(j.base() * k.base());
    return out;
  }
  const ProductState tj = atom_state(j, level);
  const ProductState tk = atom_state(k, level);
  const ProductState tjk = atom_state(claimed, level);
  const ProductState boxed = state_boxtimes(tj, tk);

  // Atom factors are 0/1 matrices, so the comparison is exact.
  for (std::size_t l = 0; l < level; ++l) {
    if (boxed.factor(l).matrix() != tjk.factor(l).matrix()) {
      out.ok = false;
      out.diagnostic = "factor mismatch at position " + std::to_string(l + 1) + ": T(J)[x]T(K) has entry " +
                       std::to_string(k.base() * (j.at(l + 1) - 1) + k.at(l + 1)) + ", claimed label has " +
                       std::to_string(claimed.at(l + 1));
      return out;
    }
  }

  const Signature& sig = tjk.signature();
  for_each_unit(sig, [&](const Unit& u) {
    if (!out.ok) return;
    AlgebraElement::TermMap term;
    term.emplace(u, Complex(1.0, 0.0));
    const AlgebraElement e = make_trusted(sig, std::move(term));
    const Complex lhs = state_tensor_phi_eval(tj, tk, e);
    const Complex rhs = state_evaluate(tjk, e);
    ++out.units_checked;
    if (lhs != rhs) {
      out.ok = false;
      const MatrixUnitIndex idx = to_public(u);
      std::string where;
      for (std::size_t i = 0; i < idx.rows.size(); ++i) {
        where += (i ? "," : "") + std::to_string(idx.rows[i]) + ":" + std::to_string(idx.cols[i]);
      }
      out.diagnostic = "tensor evaluation mismatch on unit (" + where + ")";
    }
  });
  return out;
}

AtomCheck atom_check_product(const AtomLabel& j, const AtomLabel& k, std::size_t level) {
  return atom_check_product(j, k, atom_label_product(j, k), level);
}

}  // namespace uhfkron
