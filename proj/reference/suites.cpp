#include "reference/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "eigencount/bounds.hpp"
#include "eigencount/corpus.hpp"
#include "eigencount/error.hpp"
#include "eigencount/kernels.hpp"
#include "eigencount/oracle.hpp"
#include "reference/oracles.hpp"

namespace eigencount::ref {

using nlohmann::json;

namespace {

json cjson(cplx z)
{
    return json::array({z.real(), z.imag()});
}

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double rel_diff(double a, double b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

struct NamedModel
{
    std::string name;
    PreparedModel model;
};

const std::vector<NamedModel>& prepared_corpus()
{
    static const std::vector<NamedModel> models = [] {
        std::vector<NamedModel> out;
        for (auto& e : regression_corpus()) out.push_back({e.name, prepare(e.model)});
        return out;
    }();
    return models;
}

const double sweep_p[] = {0.5, 1.0, 2.0};

} // namespace

bool SuiteResult::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok(); });
}

std::optional<json> SuiteResult::first_counterexample() const
{
    for (const auto& c : checks) {
        if (c.counterexample) return json{{"check", c.name}, {"suite", suite}, {"instance", *c.counterexample}};
        if (c.run == 0) return json{{"check", c.name}, {"suite", suite}, {"instance", "no instances ran"}};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Special functions

Check check_lambert_residual()
{
    Check c{"lambert_residual"};
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double x = i == 0 ? 0.0 : std::pow(10.0, -12.0 + 18.0 * (i - 1) / 998.0);
        const double w = lambert_w(x);
        const double res = std::abs(w * std::exp(w) - x) / std::max(1.0, x);
        worst = std::max(worst, res);
        c.expect(res <= 1e-13, [&] { return json{{"x", x}, {"w", w}, {"scaled_residual", res}}; });
    }
    c.summary = "max scaled residual " + fmt("%.3g", worst);
    return c;
}

Check check_lambert_vs_bisection()
{
    Check c{"lambert_vs_bisection"};
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double x = std::pow(10.0, -8.0 + 14.0 * i / 199.0);
        const double a = lambert_w(x), b = lambert_w_bisection(x);
        worst = std::max(worst, rel_diff(a, b));
        c.expect(rel_diff(a, b) <= 1e-12, [&] { return json{{"x", x}, {"halley", a}, {"bisection", b}}; });
    }
    c.summary = "max relative difference " + fmt("%.3g", worst);
    return c;
}

Check check_phi_vs_maximization()
{
    Check c{"phi_vs_maximization"};
    double worst = 0.0;
    for (double p : {0.5, 1.0, 2.0, 3.0})
        for (int k = 1; k <= 9; ++k) {
            const double x = 0.1 * k;
            const double closed = phi_p(p, x), direct = phi_by_maximization(p, x);
            worst = std::max(worst, rel_diff(closed, direct));
            c.expect(rel_diff(closed, direct) <= 1e-6,
                     [&] { return json{{"p", p}, {"x", x}, {"closed_form", closed}, {"maximization", direct}}; });
        }
    c.summary = "max relative difference " + fmt("%.3g", worst);
    return c;
}

Check check_phi_dominance()
{
    Check c{"phi_dominance"};
    double tightest = 1e300;
    for (double p : {0.5, 1.0, 2.0, 3.0})
        for (int k = 1; k <= 9; ++k) {
            const double x = 0.1 * k;
            const double phi = phi_p(p, x);
            const double cap = std::pow(p + 1.0, p + 1.0) / std::pow(p, p) * std::pow(1.0 - x, -(p + 1.0));
            tightest = std::min(tightest, cap / phi);
            c.expect(phi <= cap + 1e-9, [&] { return json{{"p", p}, {"x", x}, {"phi", phi}, {"cap", cap}}; });
        }
    c.summary = "min cap / phi " + fmt("%.4g", tightest);
    return c;
}

Check check_t_star(std::uint64_t seed)
{
    Check c{"t_star"};
    {
        const double p = 1.0, a = 1.0, s = 1.5, t = t_star(p, a, s);
        const double d = -std::pow(t - a, p) / t + p * std::log(s / t) * std::pow(t - a, p - 1.0);
        c.expect(std::abs(d) <= 1e-8, [&] { return json{{"p", p}, {"a", a}, {"s", s}, {"t", t}, {"derivative", d}}; });
    }
    c.expect(std::abs(t_star(1.0, 0.0, 1.0) - std::exp(-1.0)) <= 1e-15,
             [&] { return json{{"limit", t_star(1.0, 0.0, 1.0)}}; });
    Rng rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double p = 0.25 + 3.75 * u(rng), s = 0.1 + 10.0 * u(rng), a = s * 0.98 * u(rng);
        const double t = t_star(p, a, s);
        auto f = [&](double x) { return std::log(s / x) * std::pow(x - a, p); };
        const double ft = f(t);
        bool ok = t > a && t < s;
        for (int k = 1; k <= 100 && ok; ++k) ok = ft >= f(a + (s - a) * k / 101.0) * (1.0 - 1e-12);
        c.expect(ok, [&] { return json{{"p", p}, {"a", a}, {"s", s}, {"t", t}}; });
    }
    c.summary = "stationarity and grid maximality";
    return c;
}

// ---------------------------------------------------------------------------
// Koenig

Check check_koenig_trials(std::uint64_t seed, int trials)
{
    Check c{"koenig_trials"};
    Rng rng(seed);
    std::uniform_int_distribution<int> dims(2, 16);
    double tightest = 1e300;
    for (int i = 0; i < trials; ++i) {
        const double p = sweep_p[i % 3];
        const int n = dims(rng);
        CMatrix k = random_matrix(rng, n, n);
        if (i % 3 == 1) k = k.triangularView<Eigen::Upper>(); // non-normal
        if (i % 5 == 2) k = random_matrix(rng, n, 1) * random_matrix(rng, 1, n) + 0.01 * k;
        const auto sides = koenig_check(k, p);
        if (sides.lhs > 0.0) tightest = std::min(tightest, sides.rhs / sides.lhs);
        c.expect(sides.lhs <= sides.rhs,
                 [&] { return json{{"trial", i}, {"p", p}, {"dim", n}, {"lhs", sides.lhs}, {"rhs", sides.rhs}}; });
    }
    c.summary = std::to_string(trials) + " trials, min rhs/lhs " + fmt("%.4g", tightest);
    return c;
}

Check check_koenig_random(std::uint64_t seed, int matrices)
{
    Check c{"koenig_random"};
    Rng rng(seed + 1000);
    std::uniform_int_distribution<int> dims(4, 16);
    for (int i = 0; i < matrices; ++i) {
        const int n = dims(rng);
        const CMatrix k = random_matrix(rng, n, n) / std::sqrt(static_cast<double>(n));
        const auto spec = eigenvalues(k);
        const double rho = spec.spectral_radius();
        for (double p : sweep_p)
            for (int j = 1; j <= 10; ++j) {
                const double s = rho * 1.2 * j / 10.0;
                const int count = eigen_count_outside(spec, s);
                const double bound = koenig_count_bound(k, p, s);
                c.expect(count <= bound, [&] {
                    return json{{"matrix", i}, {"dim", n}, {"p", p}, {"s", s}, {"oracle", count}, {"bound", bound}};
                });
            }
    }
    c.summary = std::to_string(matrices) + " random matrices";
    return c;
}

// ---------------------------------------------------------------------------
// Determinants and contours

Check check_shift_determinant(std::uint64_t seed)
{
    Check c{"shift_determinant"};
    double worst = 0.0;
    auto compare = [&](const ShiftExample& ex, const char* label, Rng& rng, int points) {
        const auto mat = materialize(ex.model);
        const PerturbationDeterminant det(mat.full(), mat.k, 1.0);
        for (int i = 0; i < points; ++i) {
            const cplx lambda = random_point(rng, 1.2, 6.0);
            const cplx got = det(lambda).value, want = ex.analytic_d(lambda);
            const double err = std::abs(got - want);
            worst = std::max(worst, err);
            c.expect(err <= 1e-8, [&] {
                return json{{"model", label}, {"lambda", cjson(lambda)}, {"numeric", cjson(got)}, {"analytic", cjson(want)}};
            });
        }
    };
    Rng rng(seed);
    const std::vector<cplx> two{2.0};
    const auto ex = shift_example(two, 50);
    for (cplx lambda : {cplx(3.0), cplx(2.0, 1.0), cplx(-4.0)}) {
        const auto mat = materialize(ex.model);
        const cplx got = perturbation_determinant(mat.full(), mat.k, lambda, 1.0).value;
        c.expect(std::abs(got - (1.0 - 2.0 / lambda)) <= 1e-8,
                 [&] { return json{{"model", "b=(2)"}, {"lambda", cjson(lambda)}, {"numeric", cjson(got)}}; });
    }
    compare(ex, "b=(2), dim 50", rng, 50);

    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> b(20);
    for (auto& x : b) x = u(rng);
    compare(shift_example(b, 200), "random b, dim 200", rng, 50);

    const std::vector<cplx> none;
    compare(shift_example(none, 30), "b=0", rng, 10);
    c.summary = "max |numeric - analytic| " + fmt("%.3g", worst);
    return c;
}

Check check_shift_zero()
{
    Check c{"shift_zero"};
    const std::vector<cplx> two{2.0};
    const auto ex = shift_example(two, 50);
    const auto mat = materialize(ex.model);
    const PerturbationDeterminant det(mat.full(), mat.k, 1.0);
    const SampleFunction f = [&](cplx z) { return det(z); };
    const int zeros = zero_count(f, {0.0, 3.0}, Circle{0.0, 1.2});
    const int oracle = eigen_count_outside(mat.full(), 1.2);
    c.expect(zeros == 1, [&] { return json{{"circle", 3.0}, {"winding", zeros}}; });
    c.expect(zeros == oracle, [&] { return json{{"winding", zeros}, {"oracle", oracle}}; });
    const int inner = zero_count(f, {0.0, 1.5}, Circle{0.0, 1.2});
    c.expect(inner == 0, [&] { return json{{"circle", 1.5}, {"winding", inner}}; });
    c.summary = "zeros in 1.2 < |lambda| < 3: " + std::to_string(zeros) + ", oracle " + std::to_string(oracle);
    return c;
}

Check check_det_bound()
{
    Check c{"det_bound"};
    double min_slack = 1e300;
    for (const auto& [name, m] : prepared_corpus()) {
        if (m.norm != NormKind::L2) continue;
        const int cut = 1;
        const auto approx = best_rank_approximant(m.k, cut, NormKind::L2);
        const double tail = m.alpha.at(cut + 1);
        for (double p : {1.0, 2.0}) {
            const PerturbationDeterminant det(m.l, approx.f, p);
            const GammaP gamma = gamma_p_upper(p);
            for (double frac : {0.25, 1.0}) {
                const double radius = m.l0_norm + tail + frac * std::max(m.alpha.at(1), 0.1);
                for (cplx lambda : kernels::circle_points({0.0, radius}, 64)) {
                    const double lhs = det(lambda).log_abs;
                    const double rhs = det_bound_rhs(m.l0, lambda, p, 0.0, cut, NormKind::L2, m.alpha, gamma);
                    min_slack = std::min(min_slack, rhs - lhs);
                    c.expect(lhs <= rhs + 1e-9, [&] {
                        return json{{"model", name}, {"p", p}, {"lambda", cjson(lambda)}, {"log_abs_d", lhs}, {"rhs", rhs}};
                    });
                }
            }
        }
    }
    c.summary = "min slack " + fmt("%.4g", min_slack);
    return c;
}

Check check_winding_corpus()
{
    Check c{"winding_corpus"};
    for (const auto& [name, m] : prepared_corpus()) {
        const int cut = std::max(1, numerical_rank(singular_values(m.k), 1e-10));
        const auto approx = best_rank_approximant(m.k, cut, m.norm);
        const CMatrix unperturbed = m.l - approx.f;
        const auto inner_spec = eigenvalues(unperturbed);
        std::vector<double> moduli;
        for (const auto& e : m.spectrum.entries()) moduli.push_back(std::abs(e.value));
        for (const auto& e : inner_spec.entries()) moduli.push_back(std::abs(e.value));
        auto clear = [&](double r) {
            return std::all_of(moduli.begin(), moduli.end(), [&](double x) { return std::abs(x - r) > 0.02 * r; });
        };
        // Non-normal L - F can have a large resolvent well outside its
        // spectrum; the reference circle must stay clear of that too.
        auto tame = [&](double r) {
            try {
                const auto pts = kernels::circle_points({0.0, r}, 64);
                return kernels::max_resolvent_norm(unperturbed, pts, NormKind::L2) < 1e8;
            } catch (const SingularError&) {
                return false;
            }
        };
        double ref = inner_spec.spectral_radius() * 1.05 + 1e-2;
        while (!clear(ref) || !tame(ref)) ref *= 1.02;
        const double outer = std::max(m.spectrum.spectral_radius(), ref) * 1.1 + 0.1;
        const PerturbationDeterminant det(m.l, approx.f, 1.0);
        const SampleFunction f = [&](cplx z) { return det(z); };
        const int zeros = zero_count(f, {0.0, outer}, Circle{0.0, ref});
        const int oracle = eigen_count_outside(m.spectrum, ref);
        c.expect(zeros == oracle, [&] {
            return json{{"model", name}, {"inner", ref}, {"outer", outer}, {"winding", zeros}, {"oracle", oracle}};
        });
    }
    c.summary = "annulus zero counts vs eigenvalue counts";
    return c;
}

Check check_polynomial_winding(std::uint64_t seed)
{
    Check c{"polynomial_winding"};
    Rng rng(seed + 7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cplx> coeffs(5);
        for (auto& x : coeffs) x = random_matrix(rng, 1, 1)(0, 0);
        const auto roots = polynomial_roots(coeffs);
        double reach = 0.0;
        for (auto r : roots) reach = std::max(reach, std::abs(r));
        const auto f = as_sampler([&](cplx z) { return polynomial_value(coeffs, z); });
        const int w = winding_number(f, {0.0, 1.2 * reach + 0.1});
        c.expect(w == 4, [&] { return json{{"trial", trial}, {"winding", w}, {"root_radius", reach}}; });
    }
    c.summary = "degree-4 polynomials";
    return c;
}

Check check_gamma_envelope(std::uint64_t seed, int points)
{
    Check c{"gamma_envelope"};
    Rng rng(seed + 11);
    double min_slack = 1e300;
    for (double p : {0.5, 1.0, 1.5, 2.0, 3.0}) {
        const GammaP g = gamma_p_upper(p);
        const int n = regularization_order(p);
        for (int i = 0; i < points; ++i) {
            // Mix of log-uniform moduli and points around the extremal radius.
            const cplx z = i % 4 == 3 && g.argmax_radius > 0.0
                               ? random_point(rng, 0.9 * g.argmax_radius, 1.1 * g.argmax_radius)
                               : random_point(rng, 1e-3, 1e2);
            const double lhs = scalar_log_factor(z, n);
            const double rhs = g.value * std::pow(std::abs(z), p);
            min_slack = std::min(min_slack, rhs - lhs);
            c.expect(lhs <= rhs, [&] { return json{{"p", p}, {"z", cjson(z)}, {"lhs", lhs}, {"rhs", rhs}}; });
        }
        const double sampled = gamma_by_sampling(p, 1000, 64);
        c.expect(sampled <= g.value, [&] { return json{{"p", p}, {"sampled", sampled}, {"gamma", g.value}}; });
    }
    c.summary = "min slack " + fmt("%.4g", min_slack);
    return c;
}

// ---------------------------------------------------------------------------
// Counting bounds

Check check_soundness(double* seconds)
{
    Check c{"soundness"};
    const auto start = std::chrono::steady_clock::now();
    const auto& named = prepared_corpus();
    std::vector<PreparedModel> models;
    for (const auto& n : named) models.push_back(n.model);
    std::vector<kernels::SweepCase> cases;
    for (std::size_t i = 0; i < models.size(); ++i)
        for (double p : sweep_p)
            for (double s : sweep_radii(models[i], 10)) cases.push_back({i, p, s});
    const auto records = kernels::soundness_sweep(models, cases);
    long comparisons = 0;
    for (const auto& r : records)
        for (const auto& b : r.bounds) {
            ++comparisons;
            c.expect(r.oracle <= b.value, [&] {
                return json{{"model", named[r.input.model].name}, {"p", r.input.p}, {"s", r.input.s},
                            {"bound_kind", to_string(b.kind)}, {"bound", b.value}, {"oracle", r.oracle}};
            });
        }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds) *seconds = elapsed;
    c.summary = std::to_string(models.size()) + " models, " + std::to_string(cases.size()) + " (p, s) cases, " +
                std::to_string(comparisons) + " comparisons";
    return c;
}

Check check_dominance_chain()
{
    Check c{"dominance_chain"};
    for (const auto& [name, m] : prepared_corpus())
        for (double p : sweep_p)
            for (double s : sweep_radii(m, 10))
                for (int n = 0; n <= m.dim; ++n) {
                    if (!(m.alpha.at(n + 1) < s - m.l0_norm)) continue;
                    BoundOptions opts;
                    opts.n = n;
                    opts.with_oracle = false;
                    const double phi = count_bound_disk(m, p, s, opts).bound;
                    const double simple = count_bound_disk_simple(m, p, s, opts).bound;
                    c.expect(phi <= simple * (1.0 + 1e-12), [&] {
                        return json{{"model", name}, {"p", p}, {"s", s}, {"n", n}, {"disk", phi}, {"disk_simple", simple}};
                    });
                }
    c.summary = "disk <= disk_simple at every admissible N";
    return c;
}

Check check_compact_recovery()
{
    Check c{"compact_recovery"};
    double worst = 0.0;
    for (const auto& [name, m] : prepared_corpus()) {
        if (!m.compact()) continue;
        for (double p : sweep_p) {
            const GammaP g = gamma_p_upper(p);
            for (double s : sweep_radii(m, 10)) {
                BoundOptions opts;
                opts.n = m.dim;
                const auto rep = count_bound_disk(m, p, s, opts);
                const double closed = p * std::numbers::e * c_p(g) / std::pow(s, p) * m.alpha.power_sum(p);
                worst = std::max(worst, rel_diff(rep.bound, closed));
                c.expect(rel_diff(rep.bound, closed) <= 1e-9, [&] {
                    return json{{"model", name}, {"p", p}, {"s", s}, {"disk", rep.bound}, {"closed_form", closed}};
                });
                const double direct = compact_count_bound(m.k, p, s, g, m.norm);
                c.expect(rel_diff(direct, closed) <= 1e-12, [&] {
                    return json{{"model", name}, {"p", p}, {"s", s}, {"compact", direct}, {"closed_form", closed}};
                });
            }
        }
    }
    c.summary = "max relative difference " + fmt("%.3g", worst);
    return c;
}

Check check_region_matches_disk()
{
    Check c{"region_matches_disk"};
    double worst = 0.0;
    for (const auto& [name, m] : prepared_corpus()) {
        if (m.norm != NormKind::L2) continue;
        for (double p : sweep_p)
            for (double s : sweep_radii(m, 5)) {
                BoundOptions opts;
                opts.n = m.dim;
                opts.with_oracle = false;
                const auto disk = count_bound_disk(m, p, s, opts);
                const auto region = count_bound_region(m, p, {t_star(p, m.l0_norm, s), ExteriorDisk{s}}, opts);
                worst = std::max(worst, rel_diff(disk.bound, region.bound));
                c.expect(rel_diff(disk.bound, region.bound) <= 1e-9, [&] {
                    return json{{"model", name}, {"p", p}, {"s", s}, {"disk", disk.bound}, {"region", region.bound}};
                });
            }
    }
    c.summary = "max relative difference " + fmt("%.3g", worst);
    return c;
}

Check check_moment_identity()
{
    Check c{"moment_identity"};
    double worst = 0.0;
    for (const auto& [name, m] : prepared_corpus()) {
        const auto curve = count_curve(m.spectrum);
        for (double q : {1.5, 2.0, 3.0}) {
            const double integral = curve_moment_integral(curve, m.l0_norm, q);
            const double sum = moment_sum(m.spectrum, m.l0_norm, q);
            worst = std::max(worst, rel_diff(integral, sum));
            c.expect(rel_diff(integral, sum) <= 1e-9,
                     [&] { return json{{"model", name}, {"q", q}, {"integral", integral}, {"moment_sum", sum}}; });
        }
    }
    c.summary = "max relative difference " + fmt("%.3g", worst);
    return c;
}

Check check_moment_bound()
{
    Check c{"moment_bound"};
    for (const auto& [name, m] : prepared_corpus())
        for (double p : {0.5, 1.0})
            for (double extra : {0.5, 2.0}) {
                const double q = (m.compact() ? p : p + 1.0) + extra;
                const double lhs = moment_sum(m.spectrum, m.l0_norm, q);
                const double rhs = moment_bound(m, p, q);
                c.expect(lhs <= rhs, [&] { return json{{"model", name}, {"p", p}, {"q", q}, {"lhs", lhs}, {"rhs", rhs}}; });
            }
    c.summary = "oracle moments below the moment bound";
    return c;
}

Check check_slope()
{
    Check c{"slope"};
    double worst = 0.0;
    for (const auto& [name, m] : prepared_corpus()) {
        // Needs a rank cutoff with a vanishing tail and ||L0|| >= 1 so the
        // s factor in the bound barely moves over the decade.
        if (m.l0_norm < 1.0) continue;
        int cut = -1;
        for (int n = 1; n <= 4 && cut < 0; ++n)
            if (m.alpha.at(n + 1) < 1e-9) cut = n;
        if (cut < 0) continue;
        for (double p : sweep_p) {
            BoundOptions opts;
            opts.n = cut;
            opts.with_oracle = false;
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            const int k = 11;
            for (int i = 0; i < k; ++i) {
                const double delta = 0.01 * std::pow(10.0, i / (k - 1.0));
                const double x = std::log(delta);
                const double y = std::log(count_bound_disk_simple(m, p, m.l0_norm + delta, opts).bound);
                sx += x;
                sy += y;
                sxx += x * x;
                sxy += x * y;
            }
            const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
            worst = std::max(worst, std::abs(slope + p + 1.0));
            c.expect(std::abs(slope + p + 1.0) <= 0.05,
                     [&] { return json{{"model", name}, {"p", p}, {"slope", slope}, {"expected", -(p + 1.0)}}; });
        }
    }
    c.summary = "max |slope + p + 1| " + fmt("%.4g", worst);
    return c;
}

// ---------------------------------------------------------------------------
// Jensen

Check check_jensen(std::uint64_t seed)
{
    Check c{"jensen"};
    auto run = [&](const std::string& label, const std::function<cplx(cplx)>& h, const std::vector<cplx>& zeros) {
        std::vector<double> radii;
        for (int k = 1; k <= 19; ++k) radii.push_back(0.05 * k);
        const auto v = jensen_check(h, zeros, radii);
        for (const auto& row : v.rows)
            c.expect(row.ok, [&] { return json{{"h", label}, {"r", row.r}, {"lhs", row.lhs}, {"rhs", row.rhs}}; });
    };
    {
        const std::vector<cplx> z{0.5};
        run("1 - 2w", [](cplx w) { return 1.0 - 2.0 * w; }, z);
        const auto v = jensen_check([](cplx w) { return 1.0 - 2.0 * w; }, z, std::vector<double>{0.5});
        c.expect(std::abs(v.log_sup - std::log(3.0)) <= 1e-12 && v.rows[0].zeros_inside == 1,
                 [&] { return json{{"h", "1 - 2w"}, {"log_sup", v.log_sup}}; });
    }
    run("1", [](cplx) { return cplx(1.0); }, {});
    run("(1-2w)(1-10w/9)", [](cplx w) { return (1.0 - 2.0 * w) * (1.0 - 10.0 / 9.0 * w); }, {0.5, 0.9});

    Rng rng(seed + 13);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cplx> zeros;
        for (int j = 0; j < 5; ++j) zeros.push_back(random_point(rng, 0.2, 3.0));
        run("random product " + std::to_string(trial),
            [zeros](cplx w) {
                cplx acc = 1.0;
                for (auto z : zeros) acc *= 1.0 - w / z;
                return acc;
            },
            zeros);
    }
    try {
        run("2", [](cplx) { return cplx(2.0); }, {});
        c.expect(false, [] { return json{{"h", "2"}, {"expected", "normalization error"}}; });
    } catch (const InvalidArgument&) {
        c.expect(true, [] { return json{}; });
    }
    c.summary = "Jensen inequality on 23 functions";
    return c;
}

// ---------------------------------------------------------------------------

std::vector<std::string> suite_names()
{
    return {"lambert", "phi", "koenig", "det", "bounds", "jensen"};
}

std::vector<SuiteResult> run_suite(std::string_view name, std::uint64_t seed)
{
    std::vector<SuiteResult> out;
    auto want = [&](std::string_view s) { return name == "all" || name == s; };
    if (want("lambert")) out.push_back({"lambert", {check_lambert_residual(), check_lambert_vs_bisection()}});
    if (want("phi")) out.push_back({"phi", {check_phi_vs_maximization(), check_phi_dominance(), check_t_star(seed)}});
    if (want("koenig")) out.push_back({"koenig", {check_koenig_trials(seed), check_koenig_random(seed)}});
    if (want("det"))
        out.push_back({"det",
                       {check_shift_determinant(seed), check_shift_zero(), check_det_bound(), check_winding_corpus(),
                        check_polynomial_winding(seed), check_gamma_envelope(seed)}});
    if (want("bounds"))
        out.push_back({"bounds",
                       {check_soundness(), check_dominance_chain(), check_compact_recovery(), check_region_matches_disk(),
                        check_moment_identity(), check_moment_bound(), check_slope()}});
    if (want("jensen")) out.push_back({"jensen", {check_jensen(seed)}});
    if (out.empty()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
    return out;
}

} // namespace eigencount::ref
