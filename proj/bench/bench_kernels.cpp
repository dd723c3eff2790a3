// Serial vs OpenMP timings for the parallel kernels. Thread count follows
// EIGENCOUNT_THREADS.
#include <benchmark/benchmark.h>

#include <random>

#include "eigencount/corpus.hpp"
#include "eigencount/kernels.hpp"

using namespace eigencount;

namespace {

CMatrix gaussian(std::mt19937_64& rng, int rows, int cols)
{
    std::normal_distribution<double> n(0.0, std::sqrt(0.5));
    CMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = cplx(n(rng), n(rng));
    return m;
}

struct DetFixture
{
    CMatrix l, f;
    std::vector<cplx> points;

    explicit DetFixture(int dim)
    {
        std::mt19937_64 rng(17);
        l = gaussian(rng, dim, dim) / std::sqrt(double(dim));
        f = gaussian(rng, dim, 3) * gaussian(rng, 3, dim) / double(dim);
        points = kernels::circle_points({0.0, 3.0}, 512);
    }
};

template <bool Parallel>
void determinant_samples(benchmark::State& state)
{
    const DetFixture fx(static_cast<int>(state.range(0)));
    const PerturbationDeterminant d(fx.l, fx.f, 2.0);
    for (auto _ : state) {
        auto out = Parallel ? kernels::sample_determinant(d, fx.points)
                            : kernels::sample_determinant_serial(d, fx.points);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(fx.points.size()));
}

template <bool Parallel>
void resolvent_sup(benchmark::State& state)
{
    const DetFixture fx(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const double v = Parallel ? kernels::max_resolvent_norm(fx.l, fx.points, NormKind::L2)
                                  : kernels::max_resolvent_norm_serial(fx.l, fx.points, NormKind::L2);
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(fx.points.size()));
}

template <bool Parallel>
void soundness(benchmark::State& state)
{
    std::vector<PreparedModel> models;
    std::vector<kernels::SweepCase> cases;
    for (const auto& e : regression_corpus()) {
        models.push_back(prepare(e.model));
        for (double p : {0.5, 1.0, 2.0})
            for (double s : sweep_radii(models.back(), 10)) cases.push_back({models.size() - 1, p, s});
    }
    for (auto _ : state) {
        auto out = Parallel ? kernels::soundness_sweep(models, cases) : kernels::soundness_sweep_serial(models, cases);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(cases.size()));
}

} // namespace

BENCHMARK(determinant_samples<false>)->Name("sample_determinant/serial")->Arg(32)->Arg(128)->UseRealTime();
BENCHMARK(determinant_samples<true>)->Name("sample_determinant/omp")->Arg(32)->Arg(128)->UseRealTime();
BENCHMARK(resolvent_sup<false>)->Name("max_resolvent_norm/serial")->Arg(32)->Arg(128)->UseRealTime();
BENCHMARK(resolvent_sup<true>)->Name("max_resolvent_norm/omp")->Arg(32)->Arg(128)->UseRealTime();
BENCHMARK(soundness<false>)->Name("soundness_sweep/serial")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(soundness<true>)->Name("soundness_sweep/omp")->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
