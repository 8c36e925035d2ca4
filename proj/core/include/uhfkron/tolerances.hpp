#pragma once

#include <cstddef>

namespace uhfkron {

/// Coefficients with magnitude at or below this are dropped during canonicalization.
inline constexpr double kDefaultPrune = 1e-14;
/// Default tolerance for comparing elements, values and dense matrices.
inline constexpr double kDefaultCompare = 1e-12;
/// Largest total dimension that may be materialized as a dense matrix.
inline constexpr std::size_t kDenseGuard = 4096;

struct Tolerances {
  double prune = kDefaultPrune;
  double compare = kDefaultCompare;
};

}  // namespace uhfkron
