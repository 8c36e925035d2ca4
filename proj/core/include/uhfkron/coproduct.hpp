#pragma once

#include "uhfkron/element.hpp"

namespace uhfkron {

/// The Kronecker coproduct phi_{a,b}: A_n(a.b) -> A_n(a) (x) A_n(b).
///
/// Each 1-based index j in {1..a_i b_i} is split as j = b_i (j' - 1) + j''.
/// The result lives over the concatenated signature (a_1..a_n, b_1..b_n),
/// a-block first. Coefficients are carried over unchanged.
AlgebraElement coproduct_phi(const AlgebraElement& x, const Signature& a, const Signature& b);

/// Applies phi_{a,b} to the slots [offset, offset + level(a)) of x and leaves the
/// remaining slots in place. This realizes phi (x) id and id (x) phi on tensor
/// products of stages.
AlgebraElement coproduct_phi_block(const AlgebraElement& x, std::size_t offset, const Signature& a,
                                   const Signature& b);

/// Inverse of coproduct_phi. `split` is the level n of each block; the level of y
/// must be exactly 2n.
AlgebraElement coproduct_inverse(const AlgebraElement& y, std::size_t split);

/// psi: A -> A (x) I, extending the signature by `next_dim`.
AlgebraElement embed_psi(const AlgebraElement& x, int next_dim);

/// Inserts an identity factor of dimension `dim` at slot `position` (0..level).
AlgebraElement embed_identity_at(const AlgebraElement& x, std::size_t position, int dim);

/// psi_a (x) psi_b on an element over the concatenated signature (a, b) with
/// block level `split`.
AlgebraElement embed_psi_blocks(const AlgebraElement& y, std::size_t split, int next_a, int next_b);

}  // namespace uhfkron
