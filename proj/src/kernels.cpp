#include "eigencount/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <string>

namespace eigencount::kernels {

int thread_cap()
{
    const int available = omp_get_max_threads();
    if (const char* env = std::getenv("EIGENCOUNT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, available));
    }
    return available;
}

namespace {

// Evaluates f(i) for i in [0, n) into slot i. Exceptions are captured per
// index and the lowest-index one is rethrown, as in a serial loop.
template <class Result, class F>
std::vector<Result> parallel_map(std::size_t n, const F& f)
{
    std::vector<Result> out(n);
    std::vector<std::exception_ptr> errors(n);
    const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(thread_cap())
    for (long i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

template <class Result, class F>
std::vector<Result> serial_map(std::size_t n, const F& f)
{
    std::vector<Result> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
}

SweepRecord sweep_one(std::span<const PreparedModel> models, const SweepCase& c)
{
    const auto& m = models[c.model];
    SweepRecord rec;
    rec.input = c;
    rec.oracle = eigen_count_outside(m.spectrum, c.s, m.cluster_radius);
    BoundOptions opts;
    opts.with_oracle = false;
    rec.bounds.push_back({BoundKind::Disk, count_bound_disk(m, c.p, c.s, opts).bound});
    rec.bounds.push_back({BoundKind::DiskSimple, count_bound_disk_simple(m, c.p, c.s, opts).bound});
    rec.bounds.push_back({BoundKind::Region, count_bound_region(m, c.p, {std::nullopt, ExteriorDisk{c.s}}, opts).bound});
    if (m.compact()) {
        rec.bounds.push_back({BoundKind::Koenig, koenig_report(m, c.p, c.s, opts).bound});
        rec.bounds.push_back({BoundKind::Compact, compact_report(m, c.p, c.s, opts).bound});
    }
    for (const auto& b : rec.bounds) rec.violated = rec.violated || !(rec.oracle <= b.value);
    return rec;
}

} // namespace

std::vector<cplx> circle_points(const Circle& circle, int count)
{
    std::vector<cplx> pts(static_cast<std::size_t>(std::max(count, 0)));
    for (int k = 0; k < count; ++k)
        pts[static_cast<std::size_t>(k)] = circle.center + std::polar(circle.radius, 2.0 * std::numbers::pi * k / count);
    return pts;
}

std::vector<DetSample> sample_determinant(const PerturbationDeterminant& det, std::span<const cplx> points)
{
    return parallel_map<DetSample>(points.size(), [&](std::size_t i) { return det(points[i]); });
}

std::vector<DetSample> sample_determinant_serial(const PerturbationDeterminant& det, std::span<const cplx> points)
{
    return serial_map<DetSample>(points.size(), [&](std::size_t i) { return det(points[i]); });
}

double max_resolvent_norm(const CMatrix& m, std::span<const cplx> points, NormKind norm, const Tolerances& tol)
{
    const auto v =
        parallel_map<double>(points.size(), [&](std::size_t i) { return resolvent_norm(m, points[i], norm, tol); });
    return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

double max_resolvent_norm_serial(const CMatrix& m, std::span<const cplx> points, NormKind norm, const Tolerances& tol)
{
    const auto v =
        serial_map<double>(points.size(), [&](std::size_t i) { return resolvent_norm(m, points[i], norm, tol); });
    return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

std::vector<SweepRecord> soundness_sweep(std::span<const PreparedModel> models, std::span<const SweepCase> cases)
{
    return parallel_map<SweepRecord>(cases.size(), [&](std::size_t i) { return sweep_one(models, cases[i]); });
}

std::vector<SweepRecord> soundness_sweep_serial(std::span<const PreparedModel> models,
                                                std::span<const SweepCase> cases)
{
    return serial_map<SweepRecord>(cases.size(), [&](std::size_t i) { return sweep_one(models, cases[i]); });
}

} // namespace eigencount::kernels
