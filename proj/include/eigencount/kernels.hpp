#pragma once

// OpenMP kernels. Every parallel entry point has a `_serial` twin computing the
// same values in the same order; results are bit-identical because each index
// is evaluated independently and written to its own slot.

#include <span>
#include <vector>

#include "eigencount/bounds.hpp"
#include "eigencount/determinants.hpp"
#include "eigencount/oracle.hpp"

namespace eigencount::kernels {

/// Worker count: EIGENCOUNT_THREADS when set to a positive integer, capped by
/// the OpenMP default.
int thread_cap();

/// `count` equispaced points on the circle, counter-clockwise from angle 0.
std::vector<cplx> circle_points(const Circle& circle, int count);

std::vector<DetSample> sample_determinant(const PerturbationDeterminant& det, std::span<const cplx> points);
std::vector<DetSample> sample_determinant_serial(const PerturbationDeterminant& det, std::span<const cplx> points);

/// max_k ||(points[k] - m)^{-1}|| in `norm`.
double max_resolvent_norm(const CMatrix& m, std::span<const cplx> points, NormKind norm, const Tolerances& tol = {});
double max_resolvent_norm_serial(const CMatrix& m, std::span<const cplx> points, NormKind norm,
                                 const Tolerances& tol = {});

struct SweepCase
{
    std::size_t model = 0;
    double p = 1.0;
    double s = 1.0;
};

struct SweepBound
{
    BoundKind kind;
    double value;
};

struct SweepRecord
{
    SweepCase input;
    int oracle = 0;
    std::vector<SweepBound> bounds;
    bool violated = false;
};

/// Oracle count against every applicable bound (disk, disk_simple, region,
/// and the compact-case bounds when L0 = 0) for each case.
std::vector<SweepRecord> soundness_sweep(std::span<const PreparedModel> models, std::span<const SweepCase> cases);
std::vector<SweepRecord> soundness_sweep_serial(std::span<const PreparedModel> models,
                                                std::span<const SweepCase> cases);

} // namespace eigencount::kernels
