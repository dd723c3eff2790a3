#pragma once

#include <span>

#include "eigencount/approx.hpp"
#include "eigencount/config.hpp"
#include "eigencount/numerics.hpp"

namespace eigencount {

// ---------------------------------------------------------------------------
// Regularized determinants

/// log det_n(1 - F) accumulated factor by factor (principal branch per
/// factor). `zero` is set when some eigenvalue equals 1 within tolerance, in
/// which case `log` is meaningless.
struct LogDet
{
    cplx log = 0.0;
    bool zero = false;
};

LogDet log_det_regularized(std::span<const cplx> eigs, int n, const Tolerances& tol = {});

/// det_n(1 - F) = prod_k (1 - lambda_k) exp(sum_{j<n} lambda_k^j / j) from the
/// eigenvalues of F. Exponentiated once at the end.
cplx det_regularized(std::span<const cplx> eigs, int n, const Tolerances& tol = {});
cplx det_regularized(const Spectrum& eigs, int n, const Tolerances& tol = {});

/// ceil(p) as the regularization order, p > 0.
int regularization_order(double p);

// ---------------------------------------------------------------------------
// Gamma_p

enum class GammaProvenance { EnvelopeCertified, UserSupplied };

/// Constant with log|(1-z) exp(sum_{j<ceil p} z^j/j)| <= value * |z|^p.
struct GammaP
{
    double p = 1.0;
    double value = 1.0;
    GammaProvenance provenance = GammaProvenance::EnvelopeCertified;
    /// Radius attaining the envelope supremum; 0 when it is the r -> 0 limit.
    double argmax_radius = 0.0;
};

/// Radial envelope E(r) >= max_{|z| = r} log|(1-z) exp(sum_{j<n} z^j/j)|:
/// min(log(1+r) + sum_{j<n} r^j/j, r^n/(n(1-r)) [r < 1 only]).
double gamma_envelope(double p, double r);

/// Certified upper bound sup_r E(r)/r^p. Supports 0.01 <= p <= 100.
GammaP gamma_p_upper(double p);

/// Wraps a caller-provided constant (e.g. a sharper literature value).
GammaP gamma_p_user(double p, double value);

/// C_p = 2 (2e)^{p/2} Gamma_p.
double c_p(const GammaP& gamma);

// ---------------------------------------------------------------------------
// Perturbation determinant d_F(lambda) = det_{ceil p}(1 - F [lambda - (L - F)]^{-1})

struct DetSample
{
    cplx lambda;
    /// exp(log d); saturates in modulus instead of overflowing.
    cplx value;
    double log_abs = 0.0;
    /// arg d in (-pi, pi].
    double phase = 0.0;
};

/// Prepared evaluator for d_F. F is compressed once through a thin SVD, so
/// each evaluation costs one LU of lambda - (L - F) plus an r x r eigenvalue
/// problem, r = numerical rank of F. Evaluation is const and thread-safe.
class PerturbationDeterminant
{
public:
    PerturbationDeterminant(const CMatrix& l, const CMatrix& f, double p, const Tolerances& tol = {});

    /// Throws SingularError when lambda lies in sigma(L - F).
    DetSample operator()(cplx lambda) const;

    int rank() const noexcept { return static_cast<int>(left_.cols()); }
    int order() const noexcept { return order_; }
    const CMatrix& unperturbed() const noexcept { return base_; }

private:
    CMatrix base_;      // L - F
    CMatrix left_;      // U_r Sigma_r
    CMatrix right_adj_; // V_r^*
    int order_;
    Tolerances tol_;
};

DetSample perturbation_determinant(const CMatrix& l, const CMatrix& f, cplx lambda, double p,
                                   const Tolerances& tol = {});

/// Exponent of the a-priori bound on |d_F(lambda)|:
///   C_p rho^p sum_{j=1}^N (alpha_{N+1} + eta + alpha_j)^p / (1 - (alpha_{N+1} + eta) rho)^p
/// with rho = ||(lambda - L0)^{-1}|| in `norm`. Throws AdmissibilityError
/// unless (alpha_{N+1} + eta) rho < 1.
double det_bound_rhs(const CMatrix& l0, cplx lambda, double p, double eta, int n, NormKind norm,
                     const ApproxSequence& alpha, const GammaP& gamma, const Tolerances& tol = {});

} // namespace eigencount
