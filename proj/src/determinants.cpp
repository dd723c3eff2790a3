#include "eigencount/determinants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "eigencount/error.hpp"

namespace eigencount {

int regularization_order(double p)
{
    if (!(p > 0.0) || !std::isfinite(p)) throw InvalidArgument("p must be a positive finite number");
    return std::max(1, static_cast<int>(std::ceil(p)));
}

namespace {

// log[(1 - z) exp(sum_{j<n} z^j / j)]. For small |z| the tail series
// -sum_{j>=n} z^j / j avoids the cancellation between log(1-z) and the sum.
cplx log_factor(cplx z, int n)
{
    if (std::abs(z) < 0.25) {
        cplx term = std::pow(z, n);
        cplx acc = 0.0;
        for (int j = n; j < n + 200; ++j) {
            const cplx add = term / static_cast<double>(j);
            acc += add;
            if (std::abs(add) <= 1e-18 * std::abs(acc)) break;
            term *= z;
        }
        return -acc;
    }
    cplx acc = std::log(1.0 - z);
    cplx pw = 1.0;
    for (int j = 1; j < n; ++j) {
        pw *= z;
        acc += pw / static_cast<double>(j);
    }
    return acc;
}

DetSample make_sample(cplx lambda, const LogDet& ld)
{
    DetSample s;
    s.lambda = lambda;
    if (ld.zero) {
        s.value = 0.0;
        s.log_abs = -std::numeric_limits<double>::infinity();
        s.phase = 0.0;
        return s;
    }
    s.log_abs = ld.log.real();
    s.phase = std::remainder(ld.log.imag(), 2.0 * std::numbers::pi);
    const double mod = std::exp(std::min(s.log_abs, 700.0));
    s.value = std::polar(mod, s.phase);
    return s;
}

} // namespace

LogDet log_det_regularized(std::span<const cplx> eigs, int n, const Tolerances& tol)
{
    if (n < 1) throw InvalidArgument("det_regularized: order must be >= 1");
    LogDet out;
    for (auto z : eigs) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw InvalidArgument("det_regularized: non-finite eigenvalue");
        if (std::abs(1.0 - z) <= tol.unit_factor) {
            out.zero = true;
            continue;
        }
        out.log += log_factor(z, n);
    }
    return out;
}

cplx det_regularized(std::span<const cplx> eigs, int n, const Tolerances& tol)
{
    const auto ld = log_det_regularized(eigs, n, tol);
    return ld.zero ? cplx{0.0} : std::exp(ld.log);
}

cplx det_regularized(const Spectrum& eigs, int n, const Tolerances& tol)
{
    const auto e = eigs.expanded();
    return det_regularized(std::span<const cplx>(e), n, tol);
}

// ---------------------------------------------------------------------------

double gamma_envelope(double p, double r)
{
    const int n = regularization_order(p);
    double b1 = std::log1p(r);
    double pw = 1.0;
    for (int j = 1; j < n; ++j) {
        pw *= r;
        b1 += pw / j;
    }
    if (r < 1.0) return std::min(b1, std::pow(r, n) / (n * (1.0 - r)));
    return b1;
}

namespace {

GammaP compute_gamma_p_upper(double p)
{
    const int n = regularization_order(p);

    // Beyond r_hi every term of E(r)/r^p is decreasing; below r_lo the ratio is
    // increasing and bounded analytically.
    const double r_lo = 1e-6;
    const double r_hi = std::max(10.0, std::exp(2.0 / p));
    const double step = 1e-4;

    auto ratio = [p](double r) { return gamma_envelope(p, r) / std::pow(r, p); };

    double low_tail = n == 1 ? std::pow(r_lo, 1.0 - p) : std::pow(r_lo, n - p) / (n * (1.0 - r_lo));
    if (n == 1 && p == 1.0) low_tail = 1.0;

    // Cell [a, b]: E increasing and r^p increasing give E(b)/a^p. For n = 1,
    // E(r) <= log(1+r) <= r caps the ratio by b^{1-p}.
    double best_cell = 0.0, best_r = r_lo;
    const auto cells = static_cast<long>(std::ceil(std::log(r_hi / r_lo) / step));
    double a = r_lo;
    for (long i = 1; i <= cells; ++i) {
        const double b = r_lo * std::exp(static_cast<double>(i) * step);
        double bound = gamma_envelope(p, b) / std::pow(a, p);
        if (n == 1 && p <= 1.0) bound = std::min(bound, std::pow(b, 1.0 - p));
        if (bound > best_cell) {
            best_cell = bound;
            best_r = b;
        }
        a = b;
    }

    GammaP out;
    out.p = p;
    out.provenance = GammaProvenance::EnvelopeCertified;
    out.value = std::max(low_tail, best_cell);
    if (low_tail >= best_cell) {
        out.argmax_radius = 0.0;
        return out;
    }

    // Golden-section refinement of the maximizer in log r.
    double lo = std::log(best_r) - 2.0 * step, hi = std::log(best_r) + 2.0 * step;
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = ratio(std::exp(x1)), f2 = ratio(std::exp(x2));
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = ratio(std::exp(x2));
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = ratio(std::exp(x1));
        }
    }
    out.argmax_radius = std::exp(0.5 * (lo + hi));
    return out;
}

} // namespace

GammaP gamma_p_upper(double p)
{
    if (!(p >= 0.01 && p <= 100.0)) throw InvalidArgument("gamma_p_upper: p must lie in [0.01, 100]");
    static std::mutex mutex;
    static std::map<double, GammaP> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(p); it != cache.end()) return it->second;
    }
    GammaP g = compute_gamma_p_upper(p);
    std::lock_guard lock(mutex);
    return cache.emplace(p, g).first->second;
}

GammaP gamma_p_user(double p, double value)
{
    regularization_order(p);
    if (!(value >= 1e-3) || !std::isfinite(value)) throw InvalidArgument("user Gamma_p must be finite and >= 1e-3");
    return GammaP{p, value, GammaProvenance::UserSupplied, 0.0};
}

double c_p(const GammaP& gamma)
{
    return koenig_constant(gamma.p) * gamma.value;
}

// ---------------------------------------------------------------------------

PerturbationDeterminant::PerturbationDeterminant(const CMatrix& l, const CMatrix& f, double p, const Tolerances& tol)
    : order_(regularization_order(p)), tol_(tol)
{
    require_square_finite(l, "perturbation_determinant (L)");
    require_square_finite(f, "perturbation_determinant (F)");
    if (l.rows() != f.rows()) throw InvalidArgument("perturbation_determinant: L and F differ in size");
    base_ = l - f;
    const Eigen::Index n = f.rows();
    if (n == 0 || f.isZero(0.0)) {
        left_.resize(n, 0);
        right_adj_.resize(0, n);
        return;
    }
    Eigen::BDCSVD<CMatrix> svd(f, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    std::vector<double> sv(s.data(), s.data() + s.size());
    const int r = numerical_rank(sv, tol.rank_rel);
    left_ = svd.matrixU().leftCols(r) * s.head(r).asDiagonal();
    right_adj_ = svd.matrixV().leftCols(r).adjoint();
}

DetSample PerturbationDeterminant::operator()(cplx lambda) const
{
    CMatrix a = -base_;
    a.diagonal().array() += lambda;
    Eigen::PartialPivLU<CMatrix> lu(a);
    const double rcond = lu.rcond();
    if (!(rcond > tol_.singular_rcond))
        throw SingularError("perturbation_determinant: lambda lies in the spectrum of L - F; shrink the region",
                            lambda);
    if (left_.cols() == 0) return make_sample(lambda, LogDet{});
    const CMatrix compressed = right_adj_ * lu.solve(left_);
    const auto eigs = raw_eigenvalues(compressed, tol_);
    return make_sample(lambda, log_det_regularized(eigs, order_, tol_));
}

DetSample perturbation_determinant(const CMatrix& l, const CMatrix& f, cplx lambda, double p, const Tolerances& tol)
{
    return PerturbationDeterminant(l, f, p, tol)(lambda);
}

double det_bound_rhs(const CMatrix& l0, cplx lambda, double p, double eta, int n, NormKind norm,
                     const ApproxSequence& alpha, const GammaP& gamma, const Tolerances& tol)
{
    if (n < 0) throw InvalidArgument("det_bound_rhs: N must be non-negative");
    if (!(eta >= 0.0)) throw InvalidArgument("det_bound_rhs: eta must be non-negative");
    const double rho = resolvent_norm(l0, lambda, norm, tol);
    const double tail = alpha.at(static_cast<std::size_t>(n) + 1) + eta;
    const double q = tail * rho;
    if (!(q < 1.0))
        throw AdmissibilityError("(alpha_{N+1} + eta) * ||(lambda - L0)^{-1}|| < 1",
                                 "got " + std::to_string(q) + " at N = " + std::to_string(n));
    double sum = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double term = tail + alpha.at(static_cast<std::size_t>(j));
        if (term > 0.0) sum += std::pow(term, p);
    }
    if (sum == 0.0) return 0.0;
    return c_p(gamma) * std::pow(rho, p) * sum / std::pow(1.0 - q, p);
}

} // namespace eigencount
