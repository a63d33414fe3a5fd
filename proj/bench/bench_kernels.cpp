// Serial reference against the OpenMP path for the three kernel entry points,
// on D(k[S_3]) (dim 36).
#include <array>

#include <benchmark/benchmark.h>

#include "ydt/dcp.hpp"
#include "ydt/kernel/exec.hpp"

using namespace ydt;
using kernel::ExecPolicy;

namespace {

const HopfAlgebra& double_s3() {
    static const DrinfeldDouble d = build_drinfeld_double(symmetric_group_s3());
    return *d.hopf;
}

ExecPolicy policy(const benchmark::State& state) {
    return state.range(0) == 0 ? ExecPolicy::serial : ExecPolicy::parallel;
}

void BM_apply_map(benchmark::State& state) {
    const HopfAlgebra& d = double_s3();
    Tensor t(Shape{d.leg(), d.leg()});
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = Scalar(static_cast<long long>(i % 7) - 3);
    const std::array<std::size_t, 2> pos{0, 1};
    for (auto _ : state) benchmark::DoNotOptimize(apply_map(t, pos, d.mul(), policy(state)));
}

// Δ(xy) = Δ(x)Δ(y) over all 36² basis pairs
void BM_verify(benchmark::State& state) {
    const HopfAlgebra& d = double_s3();
    Plan l({"x", "y"}), r({"x", "y"});
    l.apply(d.mul(), {"x", "y"}, {"z"}).apply(d.comul(), {"z"}, {"u", "v"});
    r.apply(d.comul(), {"x"}, {"x1", "x2"})
        .apply(d.comul(), {"y"}, {"y1", "y2"})
        .apply(d.mul(), {"x1", "y1"}, {"u"})
        .apply(d.mul(), {"x2", "y2"}, {"v"});
    const Identity id{"bialgebra_comul", "Δ(xy) = Δ(x)Δ(y)", {d.leg(), d.leg()}, {d.basis(), d.basis()}, l, r,
                      {"x", "y"}};
    for (auto _ : state) benchmark::DoNotOptimize(kernel::verify(id, policy(state)));
}

// matrix of m∘(m⊗id), 36³ columns
void BM_realize(benchmark::State& state) {
    const HopfAlgebra& d = double_s3();
    Plan p({"a", "b", "c"});
    p.apply(d.mul(), {"a", "b"}, {"x"}).apply(d.mul(), {"x", "c"}, {"y"});
    for (auto _ : state) benchmark::DoNotOptimize(realize(p, {d.leg(), d.leg(), d.leg()}, {d.leg()}, policy(state)));
}

}  // namespace

BENCHMARK(BM_apply_map)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_realize)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
    double_s3();   // build outside the timed region
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
