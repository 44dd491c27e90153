#include "qweyl/formal_uq.hpp"
#include "qweyl/random_ops.hpp"
#include "qweyl/realization.hpp"
#include "qweyl/root_vectors.hpp"
#include "qweyl/weyl.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace qweyl;

static void BM_QBinom(benchmark::State& state) {
    const int a = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(q_binom(a, a / 2));
    }
}
BENCHMARK(BM_QBinom)->Arg(8)->Arg(16)->Arg(32);

static void BM_ExactDiv(benchmark::State& state) {
    const auto num = q_fact(static_cast<int>(state.range(0)));
    const auto den = q_fact(static_cast<int>(state.range(0)) / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_div(num, den));
    }
}
BENCHMARK(BM_ExactDiv)->Arg(8)->Arg(16);

static void BM_MulMonomial(benchmark::State& state) {
    const MultiIndex a{3, 1, 2};
    const MultiIndex b{2, 4, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul_monomial(a, b));
    }
}
BENCHMARK(BM_MulMonomial);

static void BM_ApplyGenerator(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto r = build_realization(n);
    const auto mons = monomials_up_to(static_cast<std::size_t>(n), 6);
    for (auto _ : state) {
        for (const auto& beta : mons) {
            benchmark::DoNotOptimize(apply(r.e.back(), beta));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(mons.size()));
}
BENCHMARK(BM_ApplyGenerator)->DenseRange(1, 3);

static void BM_Normalize(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<Operator> ops;
    for (int k = 0; k < 64; ++k) {
        ops.push_back(random_operator(rng, 3, static_cast<int>(state.range(0))));
    }
    for (auto _ : state) {
        for (const auto& op : ops) {
            benchmark::DoNotOptimize(normalize(op));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(ops.size()));
}
BENCHMARK(BM_Normalize)->Arg(3)->Arg(5)->Arg(8);

static void BM_VerifyWeyl(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_weyl_relations(static_cast<int>(state.range(0)), 6));
    }
}
BENCHMARK(BM_VerifyWeyl)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_VerifySerre(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_serre(static_cast<int>(state.range(0)), 5));
    }
}
BENCHMARK(BM_VerifySerre)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_BraidRootVectors(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(theorem33_check(n, 4));
    }
}
BENCHMARK(BM_BraidRootVectors)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
