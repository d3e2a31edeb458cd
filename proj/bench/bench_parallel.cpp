#include <benchmark/benchmark.h>

#include "qmanin/algebras.hpp"
#include "qmanin/lax.hpp"
#include "qmanin/tensorrep.hpp"

using namespace qm;

namespace {

// arg 0: serial reference, 1: OpenMP path
void BM_completion_rq3(benchmark::State& st) {
  AlgebraHandle A = right_quantum(3, 3);
  CompletionOptions o;
  o.max_degree = int(st.range(1));
  o.parallel = st.range(0) != 0;
  for (auto _ : st) {
    RuleSet rs = complete(A.presentation().relations, A.alphabet(), o);
    benchmark::DoNotOptimize(rs.size());
  }
}
BENCHMARK(BM_completion_rq3)->Args({0, 5})->Args({1, 5})->Args({0, 6})->Args({1, 6})->Unit(benchmark::kMillisecond);

void BM_completion_localized(benchmark::State& st) {
  AlgebraHandle A = localize_matrix(right_quantum(2, 2), "M", "U", Side::both);
  CompletionOptions o;
  o.max_degree = 7;
  o.parallel = st.range(0) != 0;
  for (auto _ : st) {
    RuleSet rs = complete(A.presentation().relations, A.alphabet(), o);
    benchmark::DoNotOptimize(rs.size());
  }
}
BENCHMARK(BM_completion_localized)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_rll_residual(benchmark::State& st) {
  set_tensor_parallel(st.range(0) != 0);
  LaxMatrix L(3, {RatQ(1), RatQ::q(1)});
  for (auto _ : st) benchmark::DoNotOptimize(rll_residual(L).is_zero());
  set_tensor_parallel(true);
}
BENCHMARK(BM_rll_residual)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_fusion(benchmark::State& st) {
  set_tensor_parallel(st.range(0) != 0);
  std::vector<RatQ> pts;
  for (int k = 0; k < 4; ++k) pts.push_back(RatQ::q(2 * k));
  for (auto _ : st) benchmark::DoNotOptimize(big_r<RatQ>(3, pts).nnz());
  set_tensor_parallel(true);
}
BENCHMARK(BM_fusion)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
