#include "uhfkron/coproduct.hpp"

#include "uhfkron/error.hpp"

namespace uhfkron {

AlgebraElement coproduct_phi_block(const AlgebraElement& x, std::size_t offset, const Signature& a,
                                   const Signature& b) {
  const Signature& sig = x.signature();
  const std::size_t n = a.level();
  if (b.level() != n) {
    throw Error(ErrorCode::signature_mismatch,
                "coproduct factors need equal levels: " + a.to_string() + " vs " + b.to_string());
  }
  if (offset + n > sig.level()) {
    throw Error(ErrorCode::signature_mismatch, "coproduct block [" + std::to_string(offset) + ", " +
                                                   std::to_string(offset + n) + ") exceeds " + sig.to_string());
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sig.dim(offset + i) != a.dim(i) * b.dim(i)) {
      throw Error(ErrorCode::signature_mismatch,
                  "factor " + std::to_string(offset + i + 1) + " of " + sig.to_string() + " is not " +
                      std::to_string(a.dim(i)) + "*" + std::to_string(b.dim(i)));
    }
  }

  std::vector<int> dims(sig.dims().begin(), sig.dims().begin() + static_cast<std::ptrdiff_t>(offset));
  dims.insert(dims.end(), a.dims().begin(), a.dims().end());
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  dims.insert(dims.end(), sig.dims().begin() + static_cast<std::ptrdiff_t>(offset + n), sig.dims().end());
  Signature out_sig(std::move(dims));

  // 0-based split: j = b*j' + j'', so j' = j div b and j'' = j mod b.
  auto split = [&](const std::vector<int>& in) {
    std::vector<int> out;
    out.reserve(in.size() + n);
    out.insert(out.end(), in.begin(), in.begin() + static_cast<std::ptrdiff_t>(offset));
    for (std::size_t i = 0; i < n; ++i) out.push_back(in[offset + i] / b.dim(i));
    for (std::size_t i = 0; i < n; ++i) out.push_back(in[offset + i] % b.dim(i));
    out.insert(out.end(), in.begin() + static_cast<std::ptrdiff_t>(offset + n), in.end());
    return out;
  };

  AlgebraElement::TermMap terms;
  for (const auto& [unit, coeff] : x.units()) terms.emplace(Unit{split(unit.rows), split(unit.cols)}, coeff);
  return make_trusted(std::move(out_sig), std::move(terms), 0.0);
}

AlgebraElement coproduct_phi(const AlgebraElement& x, const Signature& a, const Signature& b) {
  if (a.level() != x.signature().level()) {
    throw Error(ErrorCode::signature_mismatch,
                "coproduct factor " + a.to_string() + " does not match level of " + x.signature().to_string());
  }
  return coproduct_phi_block(x, 0, a, b);
}

AlgebraElement coproduct_inverse(const AlgebraElement& y, std::size_t split) {
  const Signature& sig = y.signature();
  if (split == 0 || sig.level() != 2 * split) {
    throw Error(ErrorCode::signature_mismatch, "cannot split " + sig.to_string() + " into two blocks of level " +
                                                   std::to_string(split));
  }
  const Signature a = sig.slice(0, split);
  const Signature b = sig.slice(split, split);

  auto merge = [&](const std::vector<int>& in) {
    std::vector<int> out(split);
    for (std::size_t i = 0; i < split; ++i) out[i] = b.dim(i) * in[i] + in[split + i];
    return out;
  };

  AlgebraElement::TermMap terms;
  for (const auto& [unit, coeff] : y.units()) terms.emplace(Unit{merge(unit.rows), merge(unit.cols)}, coeff);
  return make_trusted(a * b, std::move(terms), 0.0);
}

AlgebraElement embed_identity_at(const AlgebraElement& x, std::size_t position, int dim) {
  const Signature& sig = x.signature();
  if (position > sig.level()) {
    throw Error(ErrorCode::validation, "identity slot " + std::to_string(position) + " beyond level of " +
                                           sig.to_string());
  }
  std::vector<int> dims(sig.dims().begin(), sig.dims().end());
  dims.insert(dims.begin() + static_cast<std::ptrdiff_t>(position), dim);
  Signature out_sig(std::move(dims));  // validates dim >= 2

  AlgebraElement::TermMap terms;
  for (const auto& [unit, coeff] : x.units()) {
    Unit u = unit;
    u.rows.insert(u.rows.begin() + static_cast<std::ptrdiff_t>(position), 0);
    u.cols.insert(u.cols.begin() + static_cast<std::ptrdiff_t>(position), 0);
    for (int m = 0; m < dim; ++m) {
      u.rows[position] = m;
      u.cols[position] = m;
      terms.emplace(u, coeff);
    }
  }
  return make_trusted(std::move(out_sig), std::move(terms), 0.0);
}

AlgebraElement embed_psi(const AlgebraElement& x, int next_dim) {
  return embed_identity_at(x, x.signature().level(), next_dim);
}

AlgebraElement embed_psi_blocks(const AlgebraElement& y, std::size_t split, int next_a, int next_b) {
  if (split == 0 || y.signature().level() != 2 * split) {
    throw Error(ErrorCode::signature_mismatch, "cannot split " + y.signature().to_string() +
                                                   " into two blocks of level " + std::to_string(split));
  }
  // Append to the b-block first so the a-block insertion point stays valid.
  return embed_identity_at(embed_identity_at(y, 2 * split, next_b), split, next_a);
}

}  // namespace uhfkron
