#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "splitlab/algorithms.hpp"
#include "splitlab/cone.hpp"
#include "splitlab/diagnostics.hpp"
#include "splitlab/kernels.hpp"

using namespace splitlab;

namespace {

// Cone with default grid step for a given truncation level.
const ConeApprox& cone_for(std::size_t dim) {
    static std::map<std::size_t, ConeApprox> cache;
    auto it = cache.find(dim);
    if (it == cache.end()) {
        it = cache.emplace(dim, build_cone(static_cast<double>(dim) - 3.0, 1.0 / 32.0, dim)).first;
    }
    return it->second;
}

Eigen::VectorXd random_residual(std::size_t dim) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::VectorXd r(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < r.size(); ++i) r[i] = u(rng);
    return r;
}

void BM_DualVector(benchmark::State& state, Backend backend) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const ConeApprox& cone = cone_for(dim);
    const Eigen::VectorXd r = random_residual(dim);
    Eigen::VectorXd w;
    for (auto _ : state) {
        kernels::dual_vector(backend, cone.generators(), r, w);
        benchmark::DoNotOptimize(w.data());
    }
    state.counters["generators"] = static_cast<double>(cone.size());
}

void BM_ProjectCone(benchmark::State& state, Backend backend) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const ConeApprox& cone = cone_for(dim);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> c(dim);
    for (double& v : c) v = u(rng);
    const HilbertVector x(std::move(c));
    NnlsOptions opts;
    opts.backend = backend;
    for (auto _ : state) benchmark::DoNotOptimize(project_cone(cone, x, opts));
}

void BM_FirmAudit(benchmark::State& state, Backend backend) {
    const ConeApprox& cone = cone_for(16);
    for (auto _ : state) {
        benchmark::DoNotOptimize(firm_nonexpansiveness_audit(cone, static_cast<std::size_t>(state.range(0)), 42, backend));
    }
}

void BM_AltProjReference(benchmark::State& state) {
    const ConeApprox& cone = cone_for(64);
    const std::vector<std::size_t> probes = {0, 1, 2, 3, 4, 5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(cone, Algorithm::altproj, basis_vector(1, 64), static_cast<std::size_t>(state.range(0)), probes));
    }
}

} // namespace

BENCHMARK_CAPTURE(BM_DualVector, serial, Backend::serial)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(BM_DualVector, parallel, Backend::parallel)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(BM_ProjectCone, serial, Backend::serial)->Arg(16)->Arg(64);
BENCHMARK_CAPTURE(BM_ProjectCone, parallel, Backend::parallel)->Arg(16)->Arg(64);
BENCHMARK_CAPTURE(BM_FirmAudit, serial, Backend::serial)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FirmAudit, parallel, Backend::parallel)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AltProjReference)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
