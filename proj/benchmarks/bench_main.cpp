// Microbenchmarks for the three hot paths: exact elimination, filtration
// construction, and circle quadrature.

#include <benchmark/benchmark.h>

#include "defectlab/filtration.hpp"
#include "defectlab/matrix.hpp"
#include "defectlab/nevanlinna.hpp"
#include "defectlab/rng.hpp"
#include "defectlab/unipoly.hpp"

namespace {

using namespace defectlab;

RatMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    Rng rng(seed);
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(rng.next_int(-9, 9));
    return m;
}

void BM_rref_rank(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const RatMatrix m = random_matrix(n, n + 4, 42);
    for (auto _ : state) {
        auto [r, rank] = rref_rank(m);
        benchmark::DoNotOptimize(rank);
    }
}
BENCHMARK(BM_rref_rank)->Arg(8)->Arg(16)->Arg(32);

void BM_build_filtration(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const HomPoly P = HomPoly::monomial(1, {1, 1}, Rational(1)); // x0 x1, d = 2
    for (auto _ : state) {
        FiltrationTable t = build_filtration({P}, N, false);
        benchmark::DoNotOptimize(t.u);
    }
}
BENCHMARK(BM_build_filtration)->Arg(8)->Arg(16)->Arg(24);

void BM_characteristic(benchmark::State& state) {
    MeromorphicCurve f;
    f.n = 1;
    f.components = {widen(QPoly({Rational(1)})), widen(QPoly({Rational(0), Rational(1)}))};
    const RGrid grid =
        RGrid::geometric(2.0, 64.0, 8, 1.0, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto T = characteristic(f, grid);
        benchmark::DoNotOptimize(T.back());
    }
}
BENCHMARK(BM_characteristic)->Arg(1024)->Arg(4096);

} // namespace

#ifdef DEFECTLAB_BENCH_OWN_MAIN
BENCHMARK_MAIN();
#endif
