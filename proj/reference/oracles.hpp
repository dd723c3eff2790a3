#pragma once

// Brute-force oracles, deliberately independent of the library's algorithms.
// Slow and simple; used by tests, the verify suites and the acceptance run.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "eigencount/config.hpp"

namespace eigencount::ref {

using Rng = std::mt19937_64;

/// W(x) by bisection on w e^w - x.
double lambert_w_bisection(double x);

/// max_{t in (a, s)} log(s/t) (t - a)^p by a dense grid and golden-section
/// polish around the best grid point.
double max_log_profile(double p, double a, double s);

/// 1 / max_{t in (x,1)} log(1/t) (t - x)^p.
double phi_by_maximization(double p, double x);

/// log|(1 - z) exp(sum_{j<n} z^j/j)| from the closed form, no series tricks.
double scalar_log_factor(cplx z, int n);

/// sup over a polar grid of scalar_log_factor(z, ceil p) / |z|^p; a lower
/// estimate of the optimal Gamma_p.
double gamma_by_sampling(double p, int radial = 4000, int angular = 64);

/// Roots of c[0] + c[1] z + ... + c[d] z^d by Aberth iteration.
std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs);
cplx polynomial_value(std::span<const cplx> coeffs, cplx z);

/// Standard complex Gaussian entries.
CMatrix random_matrix(Rng& rng, int rows, int cols);

/// Point with |z| log-uniform in [lo, hi] and uniform argument.
cplx random_point(Rng& rng, double lo, double hi);

} // namespace eigencount::ref
