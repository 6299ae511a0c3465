#include <benchmark/benchmark.h>

#include "toric/bases.hpp"
#include "toric/encoders.hpp"
#include "toric/parallel.hpp"

using namespace toric;

namespace {

// medium positively graded instance: Graver completion has real work here
IntegerMatrix completion_instance() {
    return IntegerMatrix(2, 5, {{Int(3), Int(5), Int(7), Int(11), Int(13)}, {Int(1), Int(2), Int(3), Int(5), Int(8)}});
}

void bm_graver(benchmark::State& state, bool parallel) {
    IntegerMatrix M = completion_instance();
    for (auto _ : state) {
        set_parallel(parallel);
        BasisSet b = graver(M);
        benchmark::DoNotOptimize(b.vectors.size());
    }
    set_parallel(true);
}

void bm_box_scan(benchmark::State& state, bool parallel) {
    auto [h, f] = gadget_hd(2);
    IntegerMatrix M = incidence_matrix(h);
    for (auto _ : state) {
        set_parallel(parallel);
        BasisSet b = graver_brute_force(M, 1);
        benchmark::DoNotOptimize(b.vectors.size());
    }
    set_parallel(true);
}

void bm_markov(benchmark::State& state, bool parallel) {
    StableEncoding enc = encode_stable(IntegerMatrix(1, 3, {{Int(3), Int(4), Int(5)}}));
    for (auto _ : state) {
        set_parallel(parallel);
        MarkovResult r = minimal_markov(enc.matrix);
        benchmark::DoNotOptimize(r.basis.vectors.size());
    }
    set_parallel(true);
}

}  // namespace

BENCHMARK_CAPTURE(bm_graver, serial, false);
BENCHMARK_CAPTURE(bm_graver, openmp, true);
BENCHMARK_CAPTURE(bm_box_scan, serial, false);
BENCHMARK_CAPTURE(bm_box_scan, openmp, true);
BENCHMARK_CAPTURE(bm_markov, serial, false);
BENCHMARK_CAPTURE(bm_markov, openmp, true);

BENCHMARK_MAIN();
