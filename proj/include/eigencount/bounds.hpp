#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "eigencount/approx.hpp"
#include "eigencount/config.hpp"
#include "eigencount/determinants.hpp"
#include "eigencount/numerics.hpp"
#include "eigencount/operators.hpp"

namespace eigencount {

// ---------------------------------------------------------------------------
// Special functions

/// Principal branch of the Lambert W function on [0, inf).
double lambert_w(double x);

/// Optimized bound profile on [0, 1):
///   W^p / ((1/p - W)^{p+1} x^p),  W = W(e^{1/p} x / p),
/// equal to 1 / max_{t in (x,1)} log(1/t) (t - x)^p. Returns p e at x = 0.
double phi_p(double p, double x);

/// Maximizer of log(s/t) (t - a)^p over t in (a, s).
double t_star(double p, double a, double s);

// ---------------------------------------------------------------------------
// Models

/// A model materialized once, with everything the bounds need.
struct PreparedModel
{
    int dim = 0;
    NormKind norm = NormKind::L2;
    CMatrix l0, k, l;
    double l0_norm = 0.0;
    double k_norm = 0.0;
    ApproxSequence alpha;
    /// Spectrum of L = L0 + K.
    Spectrum spectrum;
    /// Radius used to decide that two eigenvalues coincide.
    double cluster_radius = 0.0;

    bool compact() const noexcept { return l0_norm == 0.0; }
};

PreparedModel prepare(const OperatorModel& model, const Tolerances& tol = {});
PreparedModel prepare(const CMatrix& l0, const CMatrix& k, NormKind norm, const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Reports

enum class BoundKind { Disk, DiskSimple, Region, Koenig, Compact };
std::string_view to_string(BoundKind kind);

/// How the pseudospectral gap eps(t) of L0 on |lambda| = t is obtained.
/// Certified: eps = t - ||L0||. Empirical: 1 / (sampled max of the resolvent
/// norm on the circle), which can over-estimate the true gap.
enum class EpsMode { Certified, Empirical };
std::string_view to_string(EpsMode mode);

struct ExteriorDisk
{
    double s;
};

struct PointTarget
{
    cplx point;
};

/// Omega = exterior of the closed disk of radius t; the target lies inside it.
struct RegionSpec
{
    /// Inner radius; optimized when empty.
    std::optional<double> t;
    std::variant<ExteriorDisk, PointTarget> target;
};

struct BoundReport
{
    BoundKind kind = BoundKind::Disk;
    double p = 1.0;
    /// Disk targets: the radius s. Point targets: |point|.
    double s = 0.0;
    std::optional<cplx> point;
    /// Rank cutoff.
    int n = 0;
    std::optional<double> t_star;
    std::optional<double> eps;
    GammaP gamma;
    double c_p = 0.0;
    std::optional<double> phi_value;
    Certainty alpha_mode = Certainty::Exact;
    double bound = 0.0;
    std::optional<int> oracle_count;
    bool admissible = true;
    /// False when an empirical quantity entered the bound.
    bool certified = true;
};

struct BoundOptions
{
    /// Rank cutoff; every admissible value in 0..dim is tried when empty.
    std::optional<int> n;
    /// Defaults to gamma_p_upper(p).
    std::optional<GammaP> gamma;
    EpsMode eps_mode = EpsMode::Certified;
    int eps_samples = 256;
    bool with_oracle = true;
    Tolerances tol;
};

/// n_L(s) <= C_p / s^p * Phi_p((||L0|| + a_{N+1}) / s) * sum_{j<=N} (a_{N+1} + a_j)^p.
BoundReport count_bound_disk(const PreparedModel& m, double p, double s, const BoundOptions& opts = {});

/// Phi-free variant: C_p (p+1)^{p+1} / p^p * s / (s - ||L0|| - a_{N+1})^{p+1} * sum.
BoundReport count_bound_disk_simple(const PreparedModel& m, double p, double s, const BoundOptions& opts = {});

/// Count in a region of the exterior of B_t:
///   C_p / ((eps - a_{N+1})^p log(1/r)) * sum,  r = t / s or t / |point|.
BoundReport count_bound_region(const PreparedModel& m, double p, const RegionSpec& region,
                               const BoundOptions& opts = {});

/// Compact case: n(s) <= 2 (2e)^{p/2} / s^p * sum_j alpha_j(K)^p.
double koenig_count_bound(const CMatrix& k, double p, double s, NormKind norm = NormKind::L2);

/// Compact case through the Phi profile: p e C_p / s^p * sum_j alpha_j(K)^p.
double compact_count_bound(const CMatrix& k, double p, double s, const GammaP& gamma, NormKind norm = NormKind::L2);

BoundReport koenig_report(const PreparedModel& m, double p, double s, const BoundOptions& opts = {});
BoundReport compact_report(const PreparedModel& m, double p, double s, const BoundOptions& opts = {});

/// sum (|lambda| - ||L0||)^q <= q C_p (p+1)^{p+1} / p^p
///     * [||L0|| / (q-p-1) + ||K|| / (q-p)] * ||K||^{q-p-1} * sum alpha_j^p.
/// Needs q > p + 1, or q > p when L0 = 0.
double moment_bound(const PreparedModel& m, double p, double q, const std::optional<GammaP>& gamma = {});

} // namespace eigencount
