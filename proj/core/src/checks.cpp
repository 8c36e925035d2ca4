#include "uhfkron/checks.hpp"

#include <random>
#include <set>

#include "uhfkron/atoms.hpp"
#include "uhfkron/coproduct.hpp"
#include "uhfkron/expr.hpp"
#include "uhfkron/gns.hpp"
#include "uhfkron/random.hpp"

namespace uhfkron {

namespace {

constexpr std::size_t kMaxRecordedFailures = 8;

AlgebraElement unit_element(const Signature& sig, const Unit& u) {
  AlgebraElement::TermMap term;
  term.emplace(u, Complex(1.0, 0.0));
  return make_trusted(sig, std::move(term));
}


std::string unit_label(const Signature& sig, const Unit& u) { return format_element(unit_element(sig, u)); }

}  // namespace

void CheckReport::record(bool pass, const std::string& what) {
  if (pass) {
    ++passed;
    return;
  }
  ++failed;
  if (failures.size() < kMaxRecordedFailures) failures.push_back(what);
}

CheckReport check_coassociativity(const Signature& a, const Signature& b, const Signature& c) {
  CheckReport report("coassociativity");
  const Signature abc = (a * b) * c;
  const std::size_t n = a.level();
  for_each_unit(abc, [&](const Unit& u) {
    const AlgebraElement x = unit_element(abc, u);
    const AlgebraElement left = coproduct_phi_block(coproduct_phi(x, a * b, c), 0, a, b);
    const AlgebraElement right = coproduct_phi_block(coproduct_phi(x, a, b * c), n, b, c);
    report.record(left == right, unit_label(abc, u));
  });
  return report;
}

CheckReport check_compatibility(const Signature& a, const Signature& b, int next_a, int next_b) {
  CheckReport report("compatibility");
  const Signature ab = a * b;
  const Signature a1 = a.extended(next_a);
  const Signature b1 = b.extended(next_b);
  for_each_unit(ab, [&](const Unit& u) {
    const AlgebraElement x = unit_element(ab, u);
    const AlgebraElement left = embed_psi_blocks(coproduct_phi(x, a, b), a.level(), next_a, next_b);
    const AlgebraElement right = coproduct_phi(embed_psi(x, next_a * next_b), a1, b1);
    report.record(left == right, unit_label(ab, u));
  });
  return report;
}

CheckReport check_bijection(const Signature& a, const Signature& b) {
  CheckReport report("bijection");
  const Signature ab = a * b;
  std::set<Unit> images;
  for_each_unit(ab, [&](const Unit& u) {
    const AlgebraElement x = unit_element(ab, u);
    const AlgebraElement y = coproduct_phi(x, a, b);
    bool ok = y.size() == 1 && y.units().begin()->second == Complex(1.0, 0.0);
    ok = ok && images.insert(y.units().begin()->first).second;
    ok = ok && coproduct_inverse(y, a.level()) == x;
    report.record(ok, unit_label(ab, u));
  });
  report.record(images.size() == unit_count(a.concat(b)), "surjectivity onto units of " + a.concat(b).to_string());
  return report;
}

CheckReport check_star_isomorphism(const Signature& a, const Signature& b, std::uint64_t seed, std::size_t samples,
                                   double tol) {
  CheckReport report("star-isomorphism");
  const Signature ab = a * b;
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const AlgebraElement x = random_element(ab, rng, 6);
    const AlgebraElement y = random_element(ab, rng, 6);
    const AlgebraElement px = coproduct_phi(x, a, b);
    const AlgebraElement py = coproduct_phi(y, a, b);
    const bool ok = approx_equal(coproduct_phi(x + y, a, b), px + py, tol) &&
                    approx_equal(coproduct_phi(x * y, a, b), px * py, tol) &&
                    approx_equal(coproduct_phi(elem_adjoint(x), a, b), elem_adjoint(px), tol);
    report.record(ok, "sample " + std::to_string(s));
  }
  return report;
}

CheckReport check_tensor_formula(const Signature& a, const Signature& b, std::uint64_t seed, double tol) {
  CheckReport report("tensor-formula");
  const ProductState s = random_product_state(a, seed);
  const ProductState r = random_product_state(b, seed + 1);
  const ProductState boxed = state_boxtimes(s, r);
  const Signature ab = a * b;
  for_each_unit(ab, [&](const Unit& u) {
    const AlgebraElement x = unit_element(ab, u);
    const double err = std::abs(state_tensor_phi_eval(s, r, x) - state_evaluate(boxed, x));
    report.max_error = std::max(report.max_error, err);
    report.record(err <= tol, unit_label(ab, u));
  });
  return report;
}

CheckReport check_associativity(const Signature& a, const Signature& b, const Signature& c, std::uint64_t seed,
                                double tol) {
  CheckReport report("associativity");
  const StateFunctional r1 = as_functional(random_product_state(a, seed));
  const StateFunctional r2 = as_functional(random_product_state(b, seed + 1));
  const StateFunctional r3 = as_functional(random_product_state(c, seed + 2));
  const StateFunctional left = tensor_phi(tensor_phi(r1, r2), r3);
  const StateFunctional right = tensor_phi(r1, tensor_phi(r2, r3));
  const Signature abc = (a * b) * c;
  for_each_unit(abc, [&](const Unit& u) {
    const AlgebraElement x = unit_element(abc, u);
    const double err = std::abs(left(x) - right(x));
    report.max_error = std::max(report.max_error, err);
    report.record(err <= tol, unit_label(abc, u));
  });
  return report;
}

CheckReport check_atom_semigroup(int n, int m, std::size_t level) {
  CheckReport report("atom-semigroup");
  std::vector<int> j(level, 1);
  auto next = [level](std::vector<int>& label, int base) {
    for (std::size_t pos = level; pos-- > 0;) {
      if (++label[pos] <= base) return true;
      label[pos] = 1;
    }
    return false;
  };
  do {
    std::vector<int> k(level, 1);
    do {
      const AtomCheck check = atom_check_product(AtomLabel(n, j), AtomLabel(m, k), level);
      std::string what = "J=";
      for (int v : j) what += std::to_string(v);
      what += " K=";
      for (int v : k) what += std::to_string(v);
      report.record(check.ok, check.ok ? what : what + ": " + check.diagnostic);
    } while (next(k, m));
  } while (next(j, n));
  return report;
}

CheckReport check_gns(const Signature& sig, std::uint64_t seed, double tol) {
  CheckReport report("gns");
  const ProductState s = random_product_state(sig, seed);
  const GnsTriplet g = gns_build(s);
  for_each_unit(sig, [&](const Unit& u) {
    const AlgebraElement x = unit_element(sig, u);
    const double err = std::abs(g.cyclic().dot(gns_lambda(g, x)) - state_evaluate(s, x));
    report.max_error = std::max(report.max_error, err);
    report.record(err <= tol, unit_label(sig, u));
  });
  return report;
}

CheckReport check_intertwiner(const Signature& a, const Signature& b, std::uint64_t seed, double tol) {
  CheckReport report("intertwiner");
  const Intertwiner it = gns_intertwiner(random_product_state(a, seed), random_product_state(b, seed + 1));
  const DenseMatrix& u = it.unitary;
  const double unitarity = max_abs_diff(u.adjoint() * u, DenseMatrix::Identity(u.rows(), u.cols()));
  report.max_error = unitarity;
  report.record(unitarity <= tol, "unitarity");
  const Signature ab = a * b;
  for_each_unit(ab, [&](const Unit& e) {
    const AlgebraElement x = unit_element(ab, e);
    const double err = max_abs_diff(conjugate_rep(it.product, x, u), tensor_phi_rep(it.left, it.right, x));
    report.max_error = std::max(report.max_error, err);
    report.record(err <= tol, unit_label(ab, e));
  });
  return report;
}

}  // namespace uhfkron
