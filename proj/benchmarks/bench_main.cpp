#include <benchmark/benchmark.h>

#include <random>

#include "hecke/config.hpp"
#include "hecke/transfer.hpp"

namespace {

using namespace hecke;

HeckeParams params() {
    RunConfig cfg;
    cfg.specializations = 1;
    return sample_params(cfg).front();
}

PolyMatrix random_matrix(std::mt19937_64& rng, const Layout& layout, int density) {
    PolyMatrix m(layout);
    std::uniform_int_distribution<int> coin(0, 99);
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c) {
            if (coin(rng) >= density) continue;
            m.set(r, c, LaurentPoly::from_coeffs(0, {sample_rational(rng), sample_rational(rng)}));
        }
    }
    return m;
}

void BM_MatMul(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const Layout layout(static_cast<std::size_t>(state.range(0)), 2);
    const PolyMatrix a = random_matrix(rng, layout, 10);
    const PolyMatrix b = random_matrix(rng, layout, 10);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MatMul)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_OneBoundaryPipeline(benchmark::State& state) {
    const HeckeRep rep = HeckeRep::build_glN(2, static_cast<int>(state.range(0)), params());
    for (auto _ : state) benchmark::DoNotOptimize(verify_murphy_B(rep));
}
BENCHMARK(BM_OneBoundaryPipeline)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_DualSolve(benchmark::State& state) {
    const HeckeRep rep = HeckeRep::build_glN(static_cast<int>(state.range(0)), 2, params());
    for (auto _ : state) benchmark::DoNotOptimize(solve_dual(rep, DualSide::Minus));
}
BENCHMARK(BM_DualSolve)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_TwoBoundaryMain(benchmark::State& state) {
    const DualKit kit =
        DualKit::prepare(BaxterKit::calibrate(HeckeRep::build_glN(2, static_cast<int>(state.range(0)), params())));
    for (auto _ : state) benchmark::DoNotOptimize(build_t_two_boundary(kit, TwoBoundaryKind::Minus, EvalPoint::Main));
}
BENCHMARK(BM_TwoBoundaryMain)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
