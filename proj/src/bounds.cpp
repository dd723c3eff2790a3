#include "eigencount/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "eigencount/error.hpp"
#include "eigencount/kernels.hpp"
#include "eigencount/oracle.hpp"

namespace eigencount {

double lambert_w(double x)
{
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("lambert_w: argument must be finite and non-negative");
    if (x == 0.0) return 0.0;

    double w;
    if (x < 1.0) {
        w = x;
    } else if (x < std::numbers::e) {
        w = x / std::numbers::e;
    } else {
        const double l1 = std::log(x);
        w = l1 - std::log(l1);
    }

    for (int it = 0; it < 64; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double d = ew * (w + 1.0);
        const double step = f / (d - (w + 2.0) * f / (2.0 * w + 2.0));
        w -= step;
        if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(w))) break;
    }
    return w;
}

double phi_p(double p, double x)
{
    if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("phi_p: p must be positive");
    if (!(x >= 0.0 && x < 1.0)) throw DomainError("phi_p: argument must lie in [0, 1)");
    if (x == 0.0) return p * std::numbers::e;
    const double w = lambert_w(std::exp(1.0 / p) * x / p);
    return std::pow(w / x, p) / std::pow(1.0 / p - w, p + 1.0);
}

double t_star(double p, double a, double s)
{
    if (!(p > 0.0)) throw DomainError("t_star: p must be positive");
    if (!(a >= 0.0)) throw DomainError("t_star: a must be non-negative");
    if (!(a < s))
        throw AdmissibilityError("a < s", "a = " + std::to_string(a) + ", s = " + std::to_string(s));
    if (a == 0.0) return s * std::exp(-1.0 / p);
    return a / (p * lambert_w(a / (p * s) * std::exp(1.0 / p)));
}

// ---------------------------------------------------------------------------

PreparedModel prepare(const CMatrix& l0, const CMatrix& k, NormKind norm, const Tolerances& tol)
{
    require_square_finite(l0, "L0");
    require_square_finite(k, "K");
    if (l0.rows() != k.rows()) throw InvalidArgument("prepare: L0 and K differ in dimension");
    PreparedModel m;
    m.dim = static_cast<int>(l0.rows());
    m.norm = norm;
    m.l0 = l0;
    m.k = k;
    m.l = l0 + k;
    m.l0_norm = induced_norm(l0, norm);
    m.k_norm = induced_norm(k, norm);
    m.alpha = approx_numbers(k, norm);
    m.spectrum = eigenvalues(m.l, tol);
    m.cluster_radius = tol.cluster_rel * std::max(1.0, m.l.norm());
    return m;
}

PreparedModel prepare(const OperatorModel& model, const Tolerances& tol)
{
    const auto mat = materialize(model);
    return prepare(mat.l0, mat.k, model.norm, tol);
}

std::string_view to_string(BoundKind kind)
{
    switch (kind) {
    case BoundKind::Disk: return "disk";
    case BoundKind::DiskSimple: return "disk_simple";
    case BoundKind::Region: return "region";
    case BoundKind::Koenig: return "koenig";
    case BoundKind::Compact: return "compact";
    }
    return "?";
}

std::string_view to_string(EpsMode mode)
{
    return mode == EpsMode::Certified ? "certified" : "empirical";
}

namespace {

struct Setup
{
    GammaP gamma;
    double cp;
    Certainty alpha_mode;
};

Setup setup(const PreparedModel& m, double p, const BoundOptions& opts)
{
    regularization_order(p);
    Setup st;
    st.gamma = opts.gamma ? *opts.gamma : gamma_p_upper(p);
    st.cp = c_p(st.gamma);
    st.alpha_mode = m.alpha.all_exact() ? Certainty::Exact : Certainty::UpperBound;
    return st;
}

/// sum_{j=1}^{n} (tail + alpha_j)^p with tail = alpha_{n+1}.
double shifted_sum(const ApproxSequence& alpha, double p, int n)
{
    const double tail = alpha.at(static_cast<std::size_t>(n) + 1);
    double acc = 0.0;
    for (int j = 1; j <= n; ++j) acc += std::pow(tail + alpha.at(static_cast<std::size_t>(j)), p);
    return acc;
}

std::vector<int> candidate_cutoffs(const PreparedModel& m, const BoundOptions& opts)
{
    if (opts.n) {
        if (*opts.n < 0) throw InvalidArgument("rank cutoff must be non-negative");
        return {*opts.n};
    }
    std::vector<int> out(static_cast<std::size_t>(m.dim) + 1);
    for (int n = 0; n <= m.dim; ++n) out[static_cast<std::size_t>(n)] = n;
    return out;
}

void require_outside_base(const PreparedModel& m, double s)
{
    if (!(s > m.l0_norm))
        throw AdmissibilityError("s > ||L0||",
                                 "s = " + std::to_string(s) + ", ||L0|| = " + std::to_string(m.l0_norm));
}

bool better(const BoundReport& cand, const std::optional<BoundReport>& best)
{
    return !best || cand.bound < best->bound;
}

enum class DiskForm { Phi, Simple };

BoundReport disk_bound(const PreparedModel& m, double p, double s, const BoundOptions& opts, DiskForm form)
{
    require_outside_base(m, s);
    const Setup st = setup(m, p, opts);
    std::optional<BoundReport> best;
    for (int n : candidate_cutoffs(m, opts)) {
        const double tail = m.alpha.at(static_cast<std::size_t>(n) + 1);
        if (!(tail < s - m.l0_norm)) {
            if (opts.n)
                throw AdmissibilityError("alpha_{N+1} < s - ||L0||", "alpha_{N+1} = " + std::to_string(tail) +
                                                                          ", s - ||L0|| = " +
                                                                          std::to_string(s - m.l0_norm));
            continue;
        }
        const double a = m.l0_norm + tail;
        BoundReport r;
        r.kind = form == DiskForm::Phi ? BoundKind::Disk : BoundKind::DiskSimple;
        r.p = p;
        r.s = s;
        r.n = n;
        r.gamma = st.gamma;
        r.c_p = st.cp;
        r.alpha_mode = st.alpha_mode;
        r.t_star = t_star(p, a, s);
        r.eps = *r.t_star - m.l0_norm;
        const double sum = shifted_sum(m.alpha, p, n);
        if (form == DiskForm::Phi) {
            r.phi_value = phi_p(p, a / s);
            r.bound = st.cp / std::pow(s, p) * *r.phi_value * sum;
        } else {
            r.bound = st.cp * std::pow(p + 1.0, p + 1.0) / std::pow(p, p) * s / std::pow(s - a, p + 1.0) * sum;
        }
        if (better(r, best)) best = r;
    }
    if (!best) throw AdmissibilityError("alpha_{N+1} < s - ||L0|| for some N", "no admissible rank cutoff");
    if (opts.with_oracle) best->oracle_count = eigen_count_outside(m.spectrum, s, m.cluster_radius);
    return *best;
}

double golden_max(const auto& f, double lo, double hi)
{
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        }
    }
    return f1 >= f2 ? x1 : x2;
}

} // namespace

BoundReport count_bound_disk(const PreparedModel& m, double p, double s, const BoundOptions& opts)
{
    return disk_bound(m, p, s, opts, DiskForm::Phi);
}

BoundReport count_bound_disk_simple(const PreparedModel& m, double p, double s, const BoundOptions& opts)
{
    return disk_bound(m, p, s, opts, DiskForm::Simple);
}

BoundReport count_bound_region(const PreparedModel& m, double p, const RegionSpec& region, const BoundOptions& opts)
{
    const Setup st = setup(m, p, opts);
    const auto* point = std::get_if<PointTarget>(&region.target);
    const double outer = point ? std::abs(point->point) : std::get<ExteriorDisk>(region.target).s;
    if (!(outer > m.l0_norm))
        throw AdmissibilityError(point ? "|lambda0| > ||L0||" : "s > ||L0||",
                                 "target radius " + std::to_string(outer) + ", ||L0|| = " + std::to_string(m.l0_norm));
    if (region.t) {
        if (!(*region.t > 0.0)) throw AdmissibilityError("t > 0", "t = " + std::to_string(*region.t));
        if (!(*region.t < outer))
            throw AdmissibilityError("r = t / target radius < 1",
                                     "t = " + std::to_string(*region.t) + ", target radius " + std::to_string(outer));
    }

    const bool empirical = opts.eps_mode == EpsMode::Empirical;
    if (empirical && !opts.n) {
        // Each empirical gap costs a sweep of resolvents; pick N by the
        // certified bound and optimize t for that cutoff only.
        BoundOptions certified = opts;
        certified.eps_mode = EpsMode::Certified;
        certified.with_oracle = false;
        BoundOptions fixed = opts;
        fixed.n = count_bound_region(m, p, region, certified).n;
        return count_bound_region(m, p, region, fixed);
    }
    auto gap = [&](double t) {
        if (!empirical) return t - m.l0_norm;
        const auto pts = kernels::circle_points({0.0, t}, opts.eps_samples);
        const double worst = kernels::max_resolvent_norm(m.l0, pts, m.norm, opts.tol);
        return 1.0 / worst;
    };

    std::optional<BoundReport> best;
    for (int n : candidate_cutoffs(m, opts)) {
        const double tail = m.alpha.at(static_cast<std::size_t>(n) + 1);
        double t;
        if (region.t) {
            t = *region.t;
        } else {
            const double lo = m.l0_norm + tail;
            if (!(lo < outer)) {
                if (opts.n)
                    throw AdmissibilityError("alpha_{N+1} < eps", "no inner radius leaves room below the target");
                continue;
            }
            auto objective = [&](double tt) {
                const double d = gap(tt) - tail;
                return d > 0.0 ? p * std::log(d) + std::log(std::log(outer / tt))
                               : -std::numeric_limits<double>::infinity();
            };
            t = golden_max(objective, lo, outer);
        }
        const double eps = gap(t);
        if (!(eps > tail)) {
            if (opts.n)
                throw AdmissibilityError("alpha_{N+1} < eps",
                                         "alpha_{N+1} = " + std::to_string(tail) + ", eps = " + std::to_string(eps));
            continue;
        }
        const double r = t / outer;
        if (!(r > 0.0 && r < 1.0)) continue;
        BoundReport rep;
        rep.kind = BoundKind::Region;
        rep.p = p;
        rep.s = outer;
        if (point) rep.point = point->point;
        rep.n = n;
        rep.t_star = t;
        rep.eps = eps;
        rep.gamma = st.gamma;
        rep.c_p = st.cp;
        rep.alpha_mode = st.alpha_mode;
        rep.certified = !empirical;
        rep.bound = st.cp / (std::pow(eps - tail, p) * std::log(1.0 / r)) * shifted_sum(m.alpha, p, n);
        if (better(rep, best)) best = rep;
    }
    if (!best) throw AdmissibilityError("alpha_{N+1} < eps for some N", "no admissible rank cutoff");
    if (opts.with_oracle)
        best->oracle_count =
            point ? multiplicity_at(m.spectrum, point->point, m.cluster_radius) : eigen_count_outside(m.spectrum, outer, m.cluster_radius);
    return *best;
}

double koenig_count_bound(const CMatrix& k, double p, double s, NormKind norm)
{
    regularization_order(p);
    if (!(s > 0.0)) throw AdmissibilityError("s > 0", "s = " + std::to_string(s));
    return koenig_constant(p) / std::pow(s, p) * approx_numbers(k, norm).power_sum(p);
}

double compact_count_bound(const CMatrix& k, double p, double s, const GammaP& gamma, NormKind norm)
{
    regularization_order(p);
    if (!(s > 0.0)) throw AdmissibilityError("s > 0", "s = " + std::to_string(s));
    return p * std::numbers::e * c_p(gamma) / std::pow(s, p) * approx_numbers(k, norm).power_sum(p);
}

namespace {

BoundReport compact_case_report(const PreparedModel& m, double p, double s, const BoundOptions& opts, BoundKind kind)
{
    if (!m.compact())
        throw AdmissibilityError("L0 = 0", "||L0|| = " + std::to_string(m.l0_norm));
    if (!(s > 0.0)) throw AdmissibilityError("s > 0", "s = " + std::to_string(s));
    const Setup st = setup(m, p, opts);
    BoundReport r;
    r.kind = kind;
    r.p = p;
    r.s = s;
    r.n = m.dim;
    r.gamma = st.gamma;
    r.c_p = st.cp;
    r.alpha_mode = st.alpha_mode;
    const double sum = m.alpha.power_sum(p);
    if (kind == BoundKind::Koenig) {
        r.bound = koenig_constant(p) / std::pow(s, p) * sum;
    } else {
        r.phi_value = p * std::numbers::e;
        r.t_star = t_star(p, 0.0, s);
        r.eps = r.t_star;
        r.bound = st.cp * *r.phi_value / std::pow(s, p) * sum;
    }
    if (opts.with_oracle) r.oracle_count = eigen_count_outside(m.spectrum, s, m.cluster_radius);
    return r;
}

} // namespace

BoundReport koenig_report(const PreparedModel& m, double p, double s, const BoundOptions& opts)
{
    return compact_case_report(m, p, s, opts, BoundKind::Koenig);
}

BoundReport compact_report(const PreparedModel& m, double p, double s, const BoundOptions& opts)
{
    return compact_case_report(m, p, s, opts, BoundKind::Compact);
}

double moment_bound(const PreparedModel& m, double p, double q, const std::optional<GammaP>& gamma)
{
    regularization_order(p);
    const double threshold = m.compact() ? p : p + 1.0;
    if (!(q > threshold))
        throw AdmissibilityError(m.compact() ? "q > p" : "q > p + 1",
                                 "q = " + std::to_string(q) + ", threshold = " + std::to_string(threshold));
    const double sum = m.alpha.power_sum(p);
    if (sum == 0.0 || m.k_norm == 0.0) return 0.0;
    const double cp = c_p(gamma ? *gamma : gamma_p_upper(p));
    const double lead = q * cp * std::pow(p + 1.0, p + 1.0) / std::pow(p, p);
    const double bracket = m.compact() ? std::pow(m.k_norm, q - p) / (q - p)
                                       : (m.l0_norm / (q - p - 1.0) + m.k_norm / (q - p)) *
                                             std::pow(m.k_norm, q - p - 1.0);
    return lead * bracket * sum;
}

} // namespace eigencount
