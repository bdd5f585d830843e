#include <benchmark/benchmark.h>

#include "qtri/reflection.hpp"
#include "qtri/spectra.hpp"

namespace {

qtri::Params benchParams() {
    qtri::Params p;
    p.s = {1.17, 0.08};
    p.c0 = {1.1, 0.2};
    p.kappa = {0.9, 0.1};
    p.kappaStar = {1.2, -0.3};
    return p;
}

qtri::ChainSpec homogeneousChain(int n, qtri::Cplx v) {
    qtri::ChainSpec chain;
    for (int i = 0; i < n; ++i) chain.sites.push_back(qtri::Site{1, v});
    return chain;
}

void BM_Kron(benchmark::State& state) {
    qtri::Params p = benchParams();
    qtri::SpinRep rep = qtri::buildSpinRep(4, p);
    for (auto _ : state) benchmark::DoNotOptimize(qtri::kron(rep.Sp, rep.Sm));
}
BENCHMARK(BM_Kron);

void BM_TensorEmbed(benchmark::State& state) {
    qtri::Params p = benchParams();
    qtri::SpinRep rep = qtri::buildSpinRep(1, p);
    std::vector<int> dims{2, 2, 2, 2};
    for (auto _ : state) benchmark::DoNotOptimize(qtri::tensorEmbed(rep.Sp, 2, dims));
}
BENCHMARK(BM_TensorEmbed);

void BM_BuildPair_N3(benchmark::State& state) {
    qtri::Params p = benchParams();
    qtri::ChainSpec chain = homogeneousChain(3, {0.9, 0.3});
    for (auto _ : state) benchmark::DoNotOptimize(qtri::buildTDPair(chain, p));
}
BENCHMARK(BM_BuildPair_N3);

void BM_DressBoundary_N2(benchmark::State& state) {
    qtri::Params p = benchParams();
    qtri::Cplx k{1.05, 0.15};
    qtri::ChainSpec chain = homogeneousChain(2, k * p.qq(1));
    for (auto _ : state) benchmark::DoNotOptimize(qtri::dressK(chain, k, p));
}
BENCHMARK(BM_DressBoundary_N2);

void BM_Transfer_N2(benchmark::State& state) {
    qtri::Params p = benchParams();
    p.kappaStar = 1.0 / p.kappa;
    qtri::Cplx k{1.05, 0.15};
    qtri::ChainSpec chain = homogeneousChain(2, k * p.qq(1));
    qtri::AuxLaurent K = qtri::dressK(chain, k, p);
    qtri::KPlus kplus = qtri::buildKplus(p);
    for (auto _ : state)
        benchmark::DoNotOptimize(qtri::buildTransfer(K, kplus, chain, k, p));
}
BENCHMARK(BM_Transfer_N2);

void BM_SolveSpectrum_TwoJ4(benchmark::State& state) {
    qtri::Params p = benchParams();
    qtri::DifferenceOperator op = qtri::buildDifferenceOperator(4, {0.9, 0.3}, p);
    for (auto _ : state) benchmark::DoNotOptimize(qtri::solveSpectrum(op));
}
BENCHMARK(BM_SolveSpectrum_TwoJ4);

}  // namespace

BENCHMARK_MAIN();
