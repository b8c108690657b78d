#include <benchmark/benchmark.h>

#include "ffcond/conductor.hpp"
#include "ffcond/delsarte.hpp"
#include "ffcond/enumeration.hpp"
#include "ffcond/xn_model.hpp"

namespace {

using namespace ffcond;

void bm_count_conductor_p(benchmark::State& state) {
    LocalField F(2, 1);
    PrimaryType T(2, {3, 2, 1});
    long n = state.range(0);
    for (auto _ : state) {
        CountBreakdown bd = count_conductor_p(F, T, n);
        benchmark::DoNotOptimize(bd.Z);
    }
}
BENCHMARK(bm_count_conductor_p)->Arg(50)->Arg(500)->Arg(5000);

void bm_inj_count(benchmark::State& state) {
    PrimaryType T(2, {3, 2, 1});
    RankVector A{2, {12, 9, 5, 2}};
    for (auto _ : state) {
        BigInt v = inj_count(T, A);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_inj_count);

void bm_count_injections(benchmark::State& state) {
    ExplicitGroup A(std::vector<std::uint64_t>(8, 2), 1 << 14);
    PrimaryType T(2, {1, 1});
    for (auto _ : state) {
        BigInt v = count_injections(A, T, std::uint64_t(1) << 32);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_count_injections);

void bm_count_surjections(benchmark::State& state) {
    LocalField F(2, 1);
    AbelianGroup G(std::vector<std::uint64_t>{4, 2});
    XnModel X(F, G.exponent(), 10, 1 << 14);
    std::vector<std::uint64_t> moduli;
    for (std::size_t i = 0; i < X.group().num_coords(); ++i)
        moduli.push_back(X.group().modulus(i));
    SubgroupLattice L(ExplicitGroup(G.invariant_factors(), 1 << 14), 200000);
    for (auto _ : state) {
        BigInt v = count_surjections(moduli, L);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_count_surjections);

} // namespace

BENCHMARK_MAIN();
