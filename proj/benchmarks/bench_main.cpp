#include <benchmark/benchmark.h>

#include <random>

#include "lct/extremal.hpp"
#include "lct/facet_cone.hpp"
#include "lct/greedy.hpp"

using namespace lct;

namespace {

Decomposition random_combo(std::mt19937_64& gen, int terms) {
    std::uniform_int_distribution<int> shift(-6, 6);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> power(1, 6);
    std::uniform_int_distribution<int> num(1, 20);
    Decomposition dec;
    for (int i = 0; i < terms; ++i) {
        ExtremalLabel label;
        switch (kind(gen)) {
            case 0:
                label = label_k(shift(gen));
                break;
            case 1:
                label = label_kx(shift(gen));
                break;
            case 2:
                label = label_r(shift(gen));
                break;
            default:
                label = label_m_power(power(gen), shift(gen));
                break;
        }
        dec.terms.push_back({Rational(num(gen)) / Rational(num(gen)), label});
    }
    dec.canonicalize();
    return dec;
}

void BM_greedy_decompose(benchmark::State& state) {
    std::mt19937_64 gen(42);
    std::vector<DeltaTable> tables;
    for (int i = 0; i < 64; ++i) {
        tables.push_back(recombine(random_combo(gen, static_cast<int>(state.range(0)))));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(tables[i++ % tables.size()]));
    }
}
BENCHMARK(BM_greedy_decompose)->Arg(2)->Arg(8)->Arg(32);

void BM_membership(benchmark::State& state) {
    std::mt19937_64 gen(43);
    std::vector<MPoint> points;
    for (int i = 0; i < 64; ++i) {
        points.push_back(
            MPoint::from_delta(recombine(random_combo(gen, static_cast<int>(state.range(0))))));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(membership(points[i++ % points.size()]));
    }
}
BENCHMARK(BM_membership)->Arg(2)->Arg(8)->Arg(32);

void BM_facet_decompose(benchmark::State& state) {
    std::mt19937_64 gen(44);
    std::vector<MPoint> points;
    for (int i = 0; i < 64; ++i) {
        points.push_back(
            MPoint::from_delta(recombine(random_combo(gen, static_cast<int>(state.range(0))))));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(facet_decompose(points[i++ % points.size()]));
    }
}
BENCHMARK(BM_facet_decompose)->Arg(2)->Arg(8)->Arg(32);

void BM_incidence(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(incidence(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_incidence)->Arg(4)->Arg(6)->Arg(8);

void BM_monomial_ideal_table(benchmark::State& state) {
    const int t = static_cast<int>(state.range(0));
    MonomialIdealSpec spec;
    for (int i = 0; i <= t; ++i) {
        spec.generators.emplace_back(i, t - i);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(monomial_ideal_table(spec));
    }
}
BENCHMARK(BM_monomial_ideal_table)->Arg(4)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
