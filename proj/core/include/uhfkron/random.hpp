#pragma once

#include <cstdint>
#include <random>

#include "uhfkron/states.hpp"

namespace uhfkron {

/// Element with `terms` uniformly drawn units and complex Gaussian coefficients.
AlgebraElement random_element(const Signature& sig, std::mt19937_64& rng, std::size_t terms);

/// Product state whose factors are random_density draws seeded from `seed`.
ProductState random_product_state(const Signature& sig, std::uint64_t seed);

}  // namespace uhfkron
