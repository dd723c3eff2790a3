#pragma once

#include <complex>

#include <Eigen/Dense>

namespace eigencount {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Every numerical tolerance used by the library, in one place.
///
/// Defaults are chosen for dense problems of dimension up to a few hundred in
/// double precision. Functions take a `Tolerances` by const reference and
/// default to a value-initialized record, so callers only override what they
/// need.
struct Tolerances
{
    /// Eigenvalues closer than `cluster_rel * max(1, ||m||_F)` are merged into
    /// one entry whose multiplicity is the cluster size.
    double cluster_rel = 1e-8;

    /// Schur iteration budget per matrix row before `ConvergenceError`.
    int max_sweeps_per_row = 30;

    /// `resolvent` refuses `lambda - m` whose reciprocal condition estimate is
    /// below this.
    double singular_rcond = 1e-14;

    /// Singular values below `rank_rel * sigma_1` count as zero when a
    /// numerical rank is needed.
    double rank_rel = 1e-10;

    /// A regularized factor `1 - lambda` with modulus below this is an exact
    /// zero of the determinant.
    double unit_factor = 1e-12;

    /// Contour sampling rejects samples with |value| at or below this.
    double contour_min_abs = 1e-12;

    /// Initial number of contour samples and the total evaluation budget for
    /// adaptive refinement.
    int contour_initial = 256;
    int contour_budget = 1 << 16;

    /// Allowed deviation of |h(0)| from 1 in `jensen_check`.
    double normalization = 1e-12;
};

} // namespace eigencount
