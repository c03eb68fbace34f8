#include <benchmark/benchmark.h>

#include "trimap/automorphic_map.hpp"
#include "trimap/verify.hpp"

namespace {

using trimap::ComplexValue;

const trimap::HypParams& p334() {
    static const trimap::HypParams p =
        trimap::params_from_signature(trimap::validate_signature(3, 3, 4));
    return p;
}

const trimap::TriangleEmbedding& emb334() {
    static const trimap::TriangleEmbedding emb = trimap::build_embedding(p334());
    return emb;
}

void BM_GammaComplex(benchmark::State& state) {
    const ComplexValue z(0.5, 3.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(trimap::gamma(z));
}
BENCHMARK(BM_GammaComplex);

void BM_Hyp2f1Direct(benchmark::State& state) {
    const trimap::HypParams& p = p334();
    const ComplexValue xi(0.3, 0.1);
    for (auto _ : state)
        benchmark::DoNotOptimize(trimap::hyp2f1(p.alpha, p.beta, p.gamma_, xi));
}
BENCHMARK(BM_Hyp2f1Direct);

void BM_Hyp2f1Connection(benchmark::State& state) {
    const trimap::HypParams& p = p334();
    const ComplexValue xi(0.0, 3.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(trimap::hyp2f1(p.alpha, p.beta, p.gamma_, xi));
}
BENCHMARK(BM_Hyp2f1Connection);

void BM_Hyp2f1Crown(benchmark::State& state) {
    const trimap::HypParams& p = p334();
    const ComplexValue xi(0.7, 0.7);
    for (auto _ : state)
        benchmark::DoNotOptimize(trimap::hyp2f1(p.alpha, p.beta, p.gamma_, xi));
}
BENCHMARK(BM_Hyp2f1Crown);

void BM_Uniformizer(benchmark::State& state) {
    const ComplexValue xi(0.3, 0.2);
    for (auto _ : state)
        benchmark::DoNotOptimize(trimap::uniformizer_w(emb334(), xi));
}
BENCHMARK(BM_Uniformizer);

void BM_DxiDwClosed(benchmark::State& state) {
    const ComplexValue xi(0.3, 0.2);
    for (auto _ : state)
        benchmark::DoNotOptimize(trimap::dxi_dw_closed(emb334(), xi));
}
BENCHMARK(BM_DxiDwClosed);

void BM_InvertXi(benchmark::State& state) {
    const ComplexValue w = trimap::uniformizer_w(emb334(), ComplexValue(0.3, 0.2));
    for (auto _ : state)
        benchmark::DoNotOptimize(trimap::invert_xi(emb334(), w));
}
BENCHMARK(BM_InvertXi);

void BM_BuildEmbedding(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(trimap::build_embedding(p334()));
}
BENCHMARK(BM_BuildEmbedding)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
