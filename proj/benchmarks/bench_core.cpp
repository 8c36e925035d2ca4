#include <benchmark/benchmark.h>

#include <random>

#include "uhfkron/coproduct.hpp"
#include "uhfkron/gns.hpp"
#include "uhfkron/random.hpp"

using namespace uhfkron;

namespace {

void BM_CoproductPhi(benchmark::State& state) {
  const auto level = static_cast<std::size_t>(state.range(0));
  const Signature a = Signature::constant(2, level), b = Signature::constant(3, level);
  std::mt19937_64 rng(1);
  const AlgebraElement x = random_element(a * b, rng, 256);
  for (auto _ : state) benchmark::DoNotOptimize(coproduct_phi(x, a, b));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_CoproductPhi)->DenseRange(1, 4);

void BM_TensorPhiEval(benchmark::State& state) {
  const auto level = static_cast<std::size_t>(state.range(0));
  const Signature a = Signature::constant(2, level), b = Signature::constant(3, level);
  const ProductState s = random_product_state(a, 1), r = random_product_state(b, 2);
  std::mt19937_64 rng(3);
  const AlgebraElement x = random_element(a * b, rng, 256);
  for (auto _ : state) benchmark::DoNotOptimize(state_tensor_phi_eval(s, r, x));
}
BENCHMARK(BM_TensorPhiEval)->DenseRange(1, 4);

void BM_Intertwiner(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const ProductState t = random_product_state(Signature{dim}, 4);
  const ProductState r = random_product_state(Signature{dim}, 5);
  for (auto _ : state) benchmark::DoNotOptimize(gns_intertwiner(t, r).unitary.data());
}
BENCHMARK(BM_Intertwiner)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Commutant(benchmark::State& state) {
  const GnsTriplet g = gns_build(random_product_state(Signature{2, 2}, 6), kGnsEigenCutoff);
  for (auto _ : state) benchmark::DoNotOptimize(commutant_dimension(g, kCommutantRankCutoff, 16));
}
BENCHMARK(BM_Commutant)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
