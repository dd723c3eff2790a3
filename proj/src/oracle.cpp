#include "eigencount/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "eigencount/error.hpp"

namespace eigencount {

int eigen_count_outside(const Spectrum& spectrum, double s, double on_circle)
{
    int n = 0;
    for (const auto& e : spectrum.entries())
        if (std::abs(e.value) > s + on_circle) n += e.multiplicity;
    return n;
}

int eigen_count_outside(const CMatrix& m, double s, const Tolerances& tol)
{
    return eigen_count_outside(eigenvalues(m, tol), s, tol.cluster_rel * std::max(1.0, m.norm()));
}

int multiplicity_at(const Spectrum& spectrum, cplx point, double radius)
{
    int n = 0;
    for (const auto& e : spectrum.entries())
        if (std::abs(e.value - point) <= radius) n += e.multiplicity;
    return n;
}

int CountCurve::at(double s) const
{
    int n = total;
    for (const auto& b : breakpoints) {
        if (b.radius > s) break;
        n = b.count;
    }
    return n;
}

CountCurve count_curve(const Spectrum& spectrum)
{
    CountCurve curve;
    curve.total = spectrum.size();
    std::vector<std::pair<double, int>> moduli;
    for (const auto& e : spectrum.entries()) moduli.emplace_back(std::abs(e.value), e.multiplicity);
    std::sort(moduli.begin(), moduli.end());
    int remaining = curve.total;
    for (std::size_t i = 0; i < moduli.size();) {
        const double r = moduli[i].first;
        while (i < moduli.size() && moduli[i].first == r) remaining -= moduli[i++].second;
        curve.breakpoints.push_back({r, remaining});
    }
    return curve;
}

CountCurve count_curve(const CMatrix& m, const Tolerances& tol)
{
    return count_curve(eigenvalues(m, tol));
}

double moment_sum(const Spectrum& spectrum, double base, double q)
{
    double s = 0.0;
    for (const auto& e : spectrum.entries()) {
        const double d = std::abs(e.value) - base;
        if (d > 0.0) s += e.multiplicity * std::pow(d, q);
    }
    return s;
}

double curve_moment_integral(const CountCurve& curve, double base, double q)
{
    // n(s) is constant on [lo, hi); integral of q (s - base)^{q-1} over it is
    // (hi - base)^q - (lo - base)^q.
    double acc = 0.0;
    double lo = base;
    int level = curve.at(base);
    for (const auto& b : curve.breakpoints) {
        if (b.radius <= base) continue;
        acc += level * (std::pow(b.radius - base, q) - std::pow(lo - base, q));
        lo = b.radius;
        level = b.count;
    }
    return acc;
}

// ---------------------------------------------------------------------------

SampleFunction as_sampler(std::function<cplx(cplx)> f)
{
    return [f = std::move(f)](cplx z) {
        const cplx v = f(z);
        DetSample s;
        s.lambda = z;
        s.value = v;
        s.log_abs = std::log(std::abs(v));
        s.phase = std::arg(v);
        return s;
    };
}

namespace {

double phase_step(const DetSample& a, const DetSample& b)
{
    return std::remainder(b.phase - a.phase, 2.0 * std::numbers::pi);
}

void require_off_zero(const DetSample& s, const Tolerances& tol)
{
    if (!(s.log_abs > std::log(tol.contour_min_abs)))
        throw ContourError(ContourError::Kind::ZeroOnContour,
                           "contour passes through a zero at (" + std::to_string(s.lambda.real()) + ", " +
                               std::to_string(s.lambda.imag()) + ")");
}

} // namespace

std::vector<DetSample> sample_contour(const SampleFunction& f, const Circle& circle, const Tolerances& tol)
{
    if (!(circle.radius > 0.0)) throw InvalidArgument("sample_contour: radius must be positive");
    const double two_pi = 2.0 * std::numbers::pi;
    struct Node
    {
        double theta;
        DetSample sample;
    };
    auto eval = [&](double theta) {
        auto s = f(circle.center + std::polar(circle.radius, theta));
        require_off_zero(s, tol);
        return Node{theta, s};
    };

    const int m = std::max(8, tol.contour_initial);
    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) nodes.push_back(eval(two_pi * k / m));
    int evaluations = m;

    for (;;) {
        std::vector<Node> next;
        next.reserve(nodes.size() * 2);
        bool refined = false;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const auto& a = nodes[i];
            const auto& b = nodes[(i + 1) % nodes.size()];
            next.push_back(a);
            if (std::abs(phase_step(a.sample, b.sample)) >= std::numbers::pi / 2.0) {
                const double hi = i + 1 == nodes.size() ? b.theta + two_pi : b.theta;
                if (++evaluations > tol.contour_budget)
                    throw ContourError(ContourError::Kind::RefinementBudget,
                                       "contour refinement exceeded " + std::to_string(tol.contour_budget) +
                                           " evaluations");
                next.push_back(eval(0.5 * (a.theta + hi)));
                refined = true;
            }
        }
        nodes = std::move(next);
        if (!refined) break;
    }

    std::vector<DetSample> out;
    out.reserve(nodes.size());
    for (auto& n : nodes) out.push_back(n.sample);
    return out;
}

int winding_count(std::span<const DetSample> closed, const Tolerances& tol)
{
    if (closed.size() < 3) throw InvalidArgument("winding_count: need at least three samples");
    double total = 0.0;
    for (std::size_t i = 0; i < closed.size(); ++i) {
        const auto& a = closed[i];
        const auto& b = closed[(i + 1) % closed.size()];
        require_off_zero(a, tol);
        const double step = phase_step(a, b);
        if (std::abs(step) >= std::numbers::pi / 2.0)
            throw ContourError(ContourError::Kind::RefinementBudget,
                               "phase step of " + std::to_string(step) + " rad between consecutive samples; refine");
        total += step;
    }
    const double turns = total / (2.0 * std::numbers::pi);
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) > 0.25)
        throw ContourError(ContourError::Kind::RefinementBudget, "phase change is not close to a whole turn");
    return static_cast<int>(rounded);
}

int winding_number(const SampleFunction& f, const Circle& circle, const Tolerances& tol)
{
    const auto samples = sample_contour(f, circle, tol);
    return winding_count(samples, tol);
}

int zero_count(const SampleFunction& f, const Circle& outer, const std::optional<Circle>& pole_reference,
               const Tolerances& tol)
{
    const int w = winding_number(f, outer, tol);
    if (!pole_reference) return w;
    if (!(pole_reference->radius < outer.radius))
        throw InvalidArgument("zero_count: reference circle must lie inside the outer circle");
    return w - winding_number(f, *pole_reference, tol);
}

// ---------------------------------------------------------------------------

JensenVerdict jensen_check(const std::function<cplx(cplx)>& h, std::span<const cplx> zeros,
                           std::span<const double> radii, int boundary_samples, const Tolerances& tol)
{
    const double at0 = std::abs(h(0.0));
    if (!(std::abs(at0 - 1.0) <= tol.normalization))
        throw InvalidArgument("jensen_check: normalization |h(0)| = 1 violated (|h(0)| = " + std::to_string(at0) +
                              ")");
    JensenVerdict v;
    double sup = 0.0;
    for (int k = 0; k < boundary_samples; ++k)
        sup = std::max(sup, std::abs(h(std::polar(1.0, 2.0 * std::numbers::pi * k / boundary_samples))));
    v.log_sup = std::log(sup);
    for (double r : radii) {
        if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("jensen_check: radii must lie in (0, 1)");
        JensenRow row{r, 0, 0.0, v.log_sup, true};
        for (auto z : zeros) row.zeros_inside += std::abs(z) <= r;
        row.lhs = row.zeros_inside * std::log(1.0 / r);
        row.ok = row.lhs <= row.rhs + 1e-9;
        v.ok = v.ok && row.ok;
        v.rows.push_back(row);
    }
    return v;
}

// ---------------------------------------------------------------------------

cplx ShiftExample::analytic_d(cplx lambda) const
{
    // 1 - sum_k b_k w^k with w = 1/lambda, Horner in w.
    const cplx w = 1.0 / lambda;
    cplx acc = 0.0;
    for (auto it = b.rbegin(); it != b.rend(); ++it) acc = (acc + *it) * w;
    return 1.0 - acc;
}

ShiftExample shift_example(std::span<const cplx> b, int dim)
{
    if (dim <= 0) throw InvalidArgument("shift_example: dim must be positive");
    ShiftExample ex;
    ex.b.assign(static_cast<std::size_t>(dim), 0.0);
    for (std::size_t k = 0; k < std::min(b.size(), ex.b.size()); ++k) {
        if (!std::isfinite(b[k].real()) || !std::isfinite(b[k].imag()))
            throw InvalidArgument("shift_example: coefficients must be finite");
        ex.b[k] = b[k];
    }
    std::vector<cplx> e1(static_cast<std::size_t>(dim), 0.0);
    e1[0] = 1.0;
    ex.model.dim = dim;
    ex.model.norm = NormKind::L1;
    ex.model.base = ShiftOp{};
    ex.model.perturbation = RankOneOp{std::move(e1), ex.b};
    return ex;
}

CoefficientFamily coefficient_family(std::string_view name)
{
    if (name == "single") return [](int) { return std::vector<cplx>{2.0}; };
    if (name == "zero") return [](int dim) { return std::vector<cplx>(static_cast<std::size_t>(dim), 0.0); };
    if (name == "lacunary")
        return [](int dim) {
            std::vector<cplx> b(static_cast<std::size_t>(dim), 0.0);
            for (int k = 1; k <= dim; k *= 2) b[static_cast<std::size_t>(k - 1)] = 1.0;
            return b;
        };
    throw InvalidArgument("unknown coefficient family '" + std::string(name) + "'");
}

ProbeResult blaschke_divergence_probe(const CoefficientFamily& family, std::span<const int> dims, const Tolerances& tol)
{
    ProbeResult out;
    for (int dim : dims) {
        const auto coeffs = family(dim);
        const auto ex = shift_example(coeffs, dim);
        const CMatrix l = materialize(ex.model).full();
        const auto spec = eigenvalues(l, tol);
        out.rows.push_back(
            {dim, moment_sum(spec, 1.0, 1.0), eigen_count_outside(spec, 1.0, tol.cluster_rel * std::max(1.0, l.norm()))});
    }
    for (std::size_t i = 1; i < out.rows.size(); ++i)
        out.non_decreasing = out.non_decreasing && out.rows[i].excess >= out.rows[i - 1].excess - 1e-12;
    if (!out.rows.empty() && out.rows.front().excess > 0.0)
        out.growth = out.rows.back().excess / out.rows.front().excess;
    return out;
}

} // namespace eigencount
