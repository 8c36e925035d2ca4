#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uhfkron/signature.hpp"
#include "uhfkron/tolerances.hpp"

namespace uhfkron {

/// Outcome of a property suite: one item per enumerated unit, label pair or sample.
struct CheckReport {
  explicit CheckReport(std::string name = {}) : suite(std::move(name)) {}

  std::string suite;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double max_error = 0.0;
  std::vector<std::string> failures;  // first few failing items

  bool ok() const noexcept { return failed == 0; }
  void record(bool pass, const std::string& what);
};

/// (phi_{a,b} (x) id_c) o phi_{a.b,c} == (id_a (x) phi_{b,c}) o phi_{a,b.c} on every unit of A_n(a.b.c). Exact.
CheckReport check_coassociativity(const Signature& a, const Signature& b, const Signature& c);

/// (psi_a (x) psi_b) o phi^(n) == phi^(n+1) o psi_{a.b} on every unit of A_n(a.b). Exact.
CheckReport check_compatibility(const Signature& a, const Signature& b, int next_a, int next_b);

/// phi is a bijection on matrix units and coproduct_inverse undoes it. Exact.
CheckReport check_bijection(const Signature& a, const Signature& b);

/// phi(x+y), phi(xy), phi(x*) laws on random elements.
CheckReport check_star_isomorphism(const Signature& a, const Signature& b, std::uint64_t seed, std::size_t samples,
                                   double tol = kDefaultCompare);

/// omega_S (x)_phi omega_R == omega_{S [x] R} on every unit, random S and R.
CheckReport check_tensor_formula(const Signature& a, const Signature& b, std::uint64_t seed,
                                 double tol = kDefaultCompare);

/// (rho1 (x)_phi rho2) (x)_phi rho3 == rho1 (x)_phi (rho2 (x)_phi rho3) on every unit, random product states.
CheckReport check_associativity(const Signature& a, const Signature& b, const Signature& c, std::uint64_t seed,
                                double tol = kDefaultCompare);

/// T(J) [x] T(K) == T(J.K) for every pair of labels of the given level.
CheckReport check_atom_semigroup(int n, int m, std::size_t level);

/// <Omega, pi(E_u) Omega> == omega(E_u) on every unit for a random product state.
CheckReport check_gns(const Signature& sig, std::uint64_t seed, double tol = 1e-10);

/// U pi_{T[x]R}(E_u) U* == (pi_T (x)_phi pi_R)(E_u) on every unit, random T and R.
CheckReport check_intertwiner(const Signature& a, const Signature& b, std::uint64_t seed, double tol = 1e-8);

}  // namespace uhfkron
