#include <random>

#include <benchmark/benchmark.h>

#include "qschur/algebra.hpp"
#include "qschur/oracle.hpp"
#include "qschur/tensor.hpp"

using namespace qschur;

static Laurent random_poly(std::mt19937& rng, int len)
{
    std::vector<Laurent::Term> t;
    for (int k = 0; k < len; ++k)
        t.emplace_back(static_cast<int>(rng() % 41) - 20, static_cast<std::int64_t>(rng() % 19) - 9);
    return Laurent::from_terms(t);
}

static void BM_LaurentMul(benchmark::State& state)
{
    std::mt19937 rng(1);
    const Laurent a = random_poly(rng, static_cast<int>(state.range(0)));
    const Laurent b = random_poly(rng, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LaurentMul)->Arg(4)->Arg(16)->Arg(64);

static void BM_EnumerateXi(benchmark::State& state)
{
    const SetTag tag{SetKind::Xi, static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate(tag));
}
BENCHMARK(BM_EnumerateXi)->Args({1, 4})->Args({2, 3})->Args({3, 2});

// all products [A][B] with co(A) = ro(B), caches cleared each round
static void BM_FullProductTable(benchmark::State& state)
{
    const Algebra alg(Context{Family::SchurJ, 1, static_cast<int>(state.range(0))});
    const auto labels = enumerate(alg.labels());
    for (auto _ : state) {
        alg.clear_caches();
        for (const auto& a : labels)
            for (const auto& b : labels)
                if (a.co() == b.ro())
                    benchmark::DoNotOptimize(alg.mul(alg.std(a), alg.std(b)));
    }
    state.counters["labels"] = static_cast<double>(labels.size());
}
BENCHMARK(BM_FullProductTable)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_CanonicalBasis(benchmark::State& state)
{
    const Algebra alg(Context{Family::SchurJ, static_cast<int>(state.range(0)), static_cast<int>(state.range(1))});
    const auto labels = enumerate(alg.labels());
    for (auto _ : state) {
        alg.clear_caches();
        for (const auto& a : labels)
            benchmark::DoNotOptimize(alg.canonical(a));
    }
}
BENCHMARK(BM_CanonicalBasis)->Args({1, 2})->Args({1, 3})->Args({2, 2})->Unit(benchmark::kMillisecond);

static void BM_StableCanonical(benchmark::State& state)
{
    const Algebra kj(Context{Family::Kj, 1, 0});
    const ThetaMatrix a = ThetaMatrix::from_rows(1, {{1, 2, 1}, {1, 1, 1}, {1, 2, 1}});
    for (auto _ : state) {
        kj.clear_caches();
        benchmark::DoNotOptimize(kj.canonical(a));
    }
}
BENCHMARK(BM_StableCanonical)->Unit(benchmark::kMillisecond);

static void BM_HeckeAction(benchmark::State& state)
{
    const TensorSpace sp{2, static_cast<int>(state.range(0)), false};
    const auto words = sp.words();
    for (auto _ : state)
        for (const Word& w : words)
            for (int j = 1; j <= sp.d; ++j)
                benchmark::DoNotOptimize(hecke_act(sp, TensorElement::basis(w), j));
}
BENCHMARK(BM_HeckeAction)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

static void BM_OracleConvolution(benchmark::State& state)
{
    const int q = static_cast<int>(state.range(0));
    for (auto _ : state) {
        oracle::Geometry g(oracle::FieldConfig{q, 5, oracle::Form::Symmetric});
        const auto flags = oracle::enumerate_flags(g, 3, oracle::FlagShape::Any);
        benchmark::DoNotOptimize(oracle::convolution_table(g, flags));
    }
}
BENCHMARK(BM_OracleConvolution)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
