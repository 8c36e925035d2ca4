#include <doctest.h>

#include <random>

#include "oracle/dense_oracle.hpp"
#include "uhfkron/coproduct.hpp"
#include "uhfkron/error.hpp"
#include "uhfkron/random.hpp"
#include "uhfkron/states.hpp"

using namespace uhfkron;

namespace {

DensityFactor diag(std::vector<double> w) { return DensityFactor::diagonal(w); }

ProductState level1(DensityFactor f) { return ProductState({std::move(f)}); }

AlgebraElement witness() {
  const Signature s{4};
  return AlgebraElement::matrix_unit(s, {{2}, {2}}) - AlgebraElement::matrix_unit(s, {{3}, {3}});
}

// omega(x) = tr(D dense(x)) computed without the library's density code.
Complex oracle_eval(const ProductState& s, const AlgebraElement& x) {
  oracle::Matrix d = oracle::Matrix::Ones(1, 1);
  for (const auto& f : s.factors()) d = oracle::kron(d, f.matrix());
  return (d * oracle::dense(x)).trace();
}

}  // namespace

TEST_SUITE("states") {
  TEST_CASE("density validation") {
    CHECK_NOTHROW(diag({0.5, 0.5}));
    CHECK_THROWS_AS(diag({0.5, 0.6}), Error);
    CHECK_THROWS_AS(diag({1.5, -0.5}), Error);
    DenseMatrix nh(2, 2);
    nh << 0.5, 0.1, 0.2, 0.5;
    CHECK_FALSE(density_validate(nh));
    CHECK_THROWS_AS(DensityFactor{nh}, Error);
  }

  TEST_CASE("single-factor evaluation reads the transposed entry") {
    CHECK(state_evaluate(level1(diag({1, 0})), AlgebraElement::matrix_unit(Signature{2}, {{1}, {1}})) ==
          Complex(1.0, 0.0));
    DenseMatrix t(2, 2);
    t << 0.5, 0.25, 0.25, 0.5;
    const ProductState s = level1(DensityFactor(t));
    CHECK(state_evaluate(s, AlgebraElement::matrix_unit(Signature{2}, {{1}, {2}})) == Complex(0.25, 0.0));

    DenseMatrix c(2, 2);
    c << Complex(0.5, 0), Complex(0.1, 0.2), Complex(0.1, -0.2), Complex(0.5, 0);
    const ProductState sc = level1(DensityFactor(c));
    // E_12 picks T_21.
    CHECK(state_evaluate(sc, AlgebraElement::matrix_unit(Signature{2}, {{1}, {2}})) == Complex(0.1, -0.2));
  }

  TEST_CASE("boxtimes of the witnesses") {
    const ProductState p = state_boxtimes(level1(diag({1, 0})), level1(diag({0, 1})));
    CHECK(p.signature() == Signature{4});
    CHECK(p.factor(0).matrix() == diag({0, 1, 0, 0}).matrix());
    const ProductState q = state_boxtimes(level1(diag({0.5, 0.5})), level1(diag({0.5, 0.5})));
    CHECK(q.factor(0).matrix().isApprox(DenseMatrix::Identity(4, 4) / 4.0));
    CHECK_THROWS_AS(state_boxtimes(level1(diag({1, 0})), ProductState({diag({1, 0}), diag({1, 0})})), Error);
  }

  TEST_CASE("non-symmetry witness") {
    const ProductState t = level1(diag({1, 0}));
    const ProductState r = level1(diag({0, 1}));
    CHECK(std::abs(state_tensor_phi_eval(t, r, witness()) - Complex(1.0, 0.0)) <= 1e-12);
    CHECK(std::abs(state_tensor_phi_eval(r, t, witness()) - Complex(-1.0, 0.0)) <= 1e-12);
    CHECK(std::abs(state_tensor_phi_eval(t, r, AlgebraElement::identity(Signature{4})) - 1.0) <= 1e-12);
    CHECK_THROWS_AS(state_tensor_phi_eval(t, r, AlgebraElement::identity(Signature{6})), Error);
  }

  TEST_CASE("tensor formula against an independent density oracle") {
    std::mt19937_64 rng(43);
    const Signature a{2, 3}, b{3, 2};
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const ProductState s = random_product_state(a, seed);
      const ProductState r = random_product_state(b, seed + 100);
      const ProductState sr = state_boxtimes(s, r);
      for (int trial = 0; trial < 10; ++trial) {
        const AlgebraElement x = random_element(a * b, rng, 10);
        const Complex lhs = state_tensor_phi_eval(s, r, x);
        CHECK(std::abs(lhs - state_evaluate(sr, x)) <= 1e-10);
        CHECK(std::abs(lhs - oracle_eval(sr, x)) <= 1e-10);
      }
    }
  }

  TEST_CASE("positivity, unitality and psi consistency") {
    std::mt19937_64 rng(47);
    const Signature sig{2, 3};
    const ProductState s = random_product_state(sig, 5);
    CHECK(std::abs(state_evaluate(s, AlgebraElement::identity(sig)) - 1.0) <= 1e-12);
    for (int trial = 0; trial < 30; ++trial) {
      const AlgebraElement x = random_element(sig, rng, 8);
      const Complex v = state_evaluate(s, elem_adjoint(x) * x);
      CHECK(v.real() >= -1e-12);
      CHECK(std::abs(v.imag()) <= 1e-12);
      CHECK(std::abs(state_evaluate(s, elem_adjoint(x)) - std::conj(state_evaluate(s, x))) <= 1e-12);
    }
    const ProductState s3({s.factor(0), s.factor(1), random_density(4, 9)});
    for (int trial = 0; trial < 10; ++trial) {
      const AlgebraElement x = random_element(sig, rng, 8);
      CHECK(std::abs(state_evaluate(s3, embed_psi(x, 4)) - state_evaluate(s, x)) <= 1e-12);
    }
  }

  TEST_CASE("level densities") {
    const ProductState s({diag({1, 0}), diag({1, 0})});
    CHECK(state_density_level(s) == diag({1, 0, 0, 0}).matrix());
    const ProductState r = random_product_state(Signature{2, 3}, 3);
    std::mt19937_64 rng(53);
    const DenseMatrix d = state_density_level(r);
    for (int trial = 0; trial < 10; ++trial) {
      const AlgebraElement x = random_element(Signature{2, 3}, rng, 6);
      CHECK(std::abs((d * oracle::dense(x)).trace() - state_evaluate(r, x)) <= 1e-12);
    }
  }

  TEST_CASE("trace distance") {
    const ProductState s = random_product_state(Signature{2, 2}, 1);
    CHECK(state_trace_distance(s, s) <= 1e-12);
    for (std::size_t level = 1; level <= 3; ++level) {
      const ProductState t(std::vector<DensityFactor>(level, diag({1, 0})));
      const ProductState r(std::vector<DensityFactor>(level, diag({0, 1})));
      const ProductState tr = state_boxtimes(t, r), rt = state_boxtimes(r, t);
      CHECK(std::abs(state_trace_distance(tr, rt) - 2.0) <= 1e-12);
    }
    const ProductState a = random_product_state(Signature{2, 3}, 10);
    const ProductState b = random_product_state(Signature{2, 3}, 20);
    const ProductState c = random_product_state(Signature{2, 3}, 30);
    CHECK(state_trace_distance(a, c) <= state_trace_distance(a, b) + state_trace_distance(b, c) + 1e-12);
    CHECK(state_trace_distance(a, b) <= 2.0 + 1e-12);
    CHECK_THROWS_AS(state_trace_distance(a, random_product_state(Signature{3, 2}, 1)), Error);
  }

  TEST_CASE("random densities are deterministic and valid") {
    CHECK(random_density(2, 42).matrix() == random_density(2, 42).matrix());
    CHECK(random_density(2, 42).matrix() != random_density(2, 43).matrix());
    DenseMatrix mean = DenseMatrix::Zero(3, 3);
    const int draws = 2000;
    for (int i = 0; i < draws; ++i) {
      const DensityFactor f = random_density(3, static_cast<std::uint64_t>(i));
      CHECK(density_validate(f.matrix()));
      mean += f.matrix();
    }
    mean /= draws;
    CHECK(oracle::max_diff(mean, oracle::identity(3) / 3.0) <= 0.1);
  }

  TEST_CASE("functional tensor_phi matches the product-state formula") {
    const ProductState s = random_product_state(Signature{2}, 4);
    const ProductState r = random_product_state(Signature{3}, 5);
    const StateFunctional f = tensor_phi(as_functional(s), as_functional(r));
    CHECK(f.signature() == Signature{6});
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 10; ++trial) {
      const AlgebraElement x = random_element(Signature{6}, rng, 6);
      CHECK(std::abs(f(x) - state_tensor_phi_eval(s, r, x)) <= 1e-12);
    }
    CHECK_THROWS_AS(f(AlgebraElement::identity(Signature{4})), Error);
  }
}
