#include "vtxalg/suite.hpp"

#include <benchmark/benchmark.h>

using namespace vtx;

namespace {

AlgebraFile load(const std::string &name)
{
    return parse_algebra_file(std::string(VTXALG_FIXTURE_DIR) + "/" + name + ".json");
}

void delta_identity(benchmark::State &state)
{
    const int r = static_cast<int>(state.range(0));
    const Window w = Window::cube({"x0", "x1", "x2"}, -r, r);
    for (auto _ : state) {
        auto lhs = delta_three_term(DeltaSide::left, w);
        auto rhs = delta_three_term(DeltaSide::right, w);
        benchmark::DoNotOptimize(window_equal(lhs, rhs, w));
    }
}
BENCHMARK(delta_identity)->Arg(4)->Arg(8)->Arg(12);

void nth_product_m2_a3(benchmark::State &state)
{
    const auto alg = load("m2_a3").algebra;
    const auto mod = adjoint_module(alg);
    const auto a = module_operator(mod, alg.e(1));
    const auto b = module_operator(mod, alg.e(2));
    for (auto _ : state)
        for (int n = -3; n <= 0; ++n)
            benchmark::DoNotOptimize(nth_product(a, b, n));
}
BENCHMARK(nth_product_m2_a3);

void closure_a3(benchmark::State &state)
{
    const auto alg = load("a3").algebra;
    const auto mod = adjoint_module(alg);
    const auto yt = module_operator(mod, alg.e(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(closure({yt}, alg.dim()));
}
BENCHMARK(closure_a3);

void suite_all(benchmark::State &state, const char *name)
{
    const auto f = load(name);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_suite(f, "all"));
}
BENCHMARK_CAPTURE(suite_all, a3, "a3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(suite_all, m2_a3, "m2_a3")->Unit(benchmark::kMillisecond)->Iterations(1);

} // namespace

BENCHMARK_MAIN();
