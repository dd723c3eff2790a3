#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "eigencount/config.hpp"
#include "eigencount/determinants.hpp"
#include "eigencount/numerics.hpp"
#include "eigencount/operators.hpp"

namespace eigencount {

// ---------------------------------------------------------------------------
// Eigenvalue counting

/// n(s): eigenvalues with |lambda| > s, with multiplicity. Eigenvalues within
/// `on_circle` of the circle |lambda| = s count as on it, hence not outside.
int eigen_count_outside(const Spectrum& spectrum, double s, double on_circle = 0.0);
/// Uses the clustering radius of `eigenvalues` as the on-circle tolerance.
int eigen_count_outside(const CMatrix& m, double s, const Tolerances& tol = {});

/// Multiplicity of `point` in the spectrum: clusters within `radius`.
int multiplicity_at(const Spectrum& spectrum, cplx point, double radius);

struct Breakpoint
{
    double radius;
    /// n(s) for s in [radius, next radius).
    int count;
};

/// The step function s -> n(s).
struct CountCurve
{
    int total = 0;
    std::vector<Breakpoint> breakpoints;

    int at(double s) const;
};

CountCurve count_curve(const Spectrum& spectrum);
CountCurve count_curve(const CMatrix& m, const Tolerances& tol = {});

/// sum over |lambda| > base of (|lambda| - base)^q.
double moment_sum(const Spectrum& spectrum, double base, double q);

/// q * integral_base^inf n(s) (s - base)^{q-1} ds, exactly, for the step
/// function.
double curve_moment_integral(const CountCurve& curve, double base, double q);

// ---------------------------------------------------------------------------
// Contours

struct Circle
{
    cplx center = 0.0;
    double radius = 1.0;
};

using SampleFunction = std::function<DetSample(cplx)>;

/// Wraps a plain complex function as a sampler.
SampleFunction as_sampler(std::function<cplx(cplx)> f);

/// Samples on the circle, counter-clockwise, adaptively bisecting arcs until
/// every consecutive phase step is below pi/2. The returned contour is closed
/// implicitly (last sample connects to the first).
std::vector<DetSample> sample_contour(const SampleFunction& f, const Circle& circle, const Tolerances& tol = {});

/// Total phase change / 2 pi along a closed counter-clockwise contour, i.e.
/// zeros minus poles enclosed. Throws ContourError when a sample is a zero or
/// a phase step is not below pi/2.
int winding_count(std::span<const DetSample> closed, const Tolerances& tol = {});

int winding_number(const SampleFunction& f, const Circle& circle, const Tolerances& tol = {});

/// Zeros inside `outer`. With `pole_reference` (a circle inside `outer`
/// enclosing every pole), counts the zeros in the annulus between them:
/// winding(outer) - winding(reference).
int zero_count(const SampleFunction& f, const Circle& outer, const std::optional<Circle>& pole_reference,
               const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Jensen

struct JensenRow
{
    double r;
    int zeros_inside;
    double lhs; // n(h; r) log(1/r)
    double rhs; // log sup |h|
    bool ok;
};

struct JensenVerdict
{
    bool ok = true;
    double log_sup = 0.0;
    std::vector<JensenRow> rows;
};

/// Checks n(h; r) log(1/r) <= log sup_{|w|<=1} |h| for each r. The supremum is
/// taken over `boundary_samples` points of the unit circle. Requires
/// |h(0)| = 1.
JensenVerdict jensen_check(const std::function<cplx(cplx)>& h, std::span<const cplx> zeros,
                           std::span<const double> radii, int boundary_samples = 4096,
                           const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Shift example on l^1

/// L0 = forward shift, K f = <f, b> e_1 on (C^dim, l^1). For |lambda| > 1,
/// det_1(1 - K (lambda - L0)^{-1}) = 1 - sum_{k<=dim} b_k lambda^{-k}.
struct ShiftExample
{
    OperatorModel model;
    std::vector<cplx> b;

    cplx analytic_d(cplx lambda) const;
};

ShiftExample shift_example(std::span<const cplx> b, int dim);

using CoefficientFamily = std::function<std::vector<cplx>(int dim)>;

/// "single": b = (2); "zero": b = 0; "lacunary": b_k = 1 for k a power of two
/// (a heuristic stand-in for bounded coefficients with many zeros near the
/// circle, not a proven Blaschke-violating h).
CoefficientFamily coefficient_family(std::string_view name);

struct ProbeRow
{
    int dim;
    /// sum over |lambda| > 1 of (|lambda| - 1).
    double excess;
    int outside;
};

struct ProbeResult
{
    std::vector<ProbeRow> rows;
    /// excess at the largest dim / excess at the smallest; empty when the
    /// smallest is zero.
    std::optional<double> growth;
    bool non_decreasing = true;
};

ProbeResult blaschke_divergence_probe(const CoefficientFamily& family, std::span<const int> dims,
                                      const Tolerances& tol = {});

} // namespace eigencount
