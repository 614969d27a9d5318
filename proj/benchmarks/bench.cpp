#include <benchmark/benchmark.h>

#include "eqg/partition.hpp"
#include "eqg/weingarten.hpp"

namespace {

using namespace eqg;

void BM_EnumeratePairings(benchmark::State& state) {
    const Family f{Family::Tag::P2};
    Word w = plainWord(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(countFamily(f, Word{}, w));
}
BENCHMARK(BM_EnumeratePairings)->Arg(8)->Arg(12)->Arg(16);

void BM_EnumerateNoncrossing(benchmark::State& state) {
    const Family f{Family::Tag::NC};
    Word w = plainWord(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(countFamily(f, Word{}, w));
}
BENCHMARK(BM_EnumerateNoncrossing)->Arg(8)->Arg(10)->Arg(12);

void BM_GramMatrix(benchmark::State& state) {
    const Family f{Family::Tag::P};
    auto basis = enumerateFamily(f, Word{}, plainWord(static_cast<int>(state.range(0))));
    const int n = static_cast<int>(basis.size());
    for (auto _ : state) {
        RatMatrix g(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                g.at(a, b) = Rat(intPow(Int(7), static_cast<unsigned>(joinBlockCount(
                                                    basis[static_cast<size_t>(a)],
                                                    basis[static_cast<size_t>(b)]))));
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_GramMatrix)->Arg(4)->Arg(5);

void BM_WeingartenInverse(benchmark::State& state) {
    const Family f{Family::Tag::P};
    Word w = plainWord(static_cast<int>(state.range(0)));
    RatMatrix g = gram(f, w, 7).entries;
    for (auto _ : state) benchmark::DoNotOptimize(g.inverse());
}
BENCHMARK(BM_WeingartenInverse)->Arg(4)->Arg(5);

void BM_Integrate(benchmark::State& state) {
    const Family f{Family::Tag::P};
    int k = static_cast<int>(state.range(0));
    Monomial m;
    m.word = plainWord(k);
    m.i.assign(static_cast<size_t>(k), 1);
    m.j.assign(static_cast<size_t>(k), 1);
    weingartenData(f, m.word, 7); // warm the shared cache once
    for (auto _ : state) benchmark::DoNotOptimize(integrate(f, 7, m));
}
BENCHMARK(BM_Integrate)->Arg(4)->Arg(5);

} // namespace

BENCHMARK_MAIN();
