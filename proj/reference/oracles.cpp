#include "reference/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eigencount::ref {

double lambert_w_bisection(double x)
{
    if (x < 0.0) throw std::domain_error("lambert_w_bisection: x < 0");
    double lo = 0.0, hi = std::max(1.0, std::log1p(x));
    while (hi * std::exp(hi) < x) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (mid * std::exp(mid) < x ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double max_log_profile(double p, double a, double s)
{
    auto f = [&](double t) { return std::log(s / t) * std::pow(t - a, p); };
    const int grid = 4000;
    double best_t = a, best = -1.0;
    for (int i = 1; i < grid; ++i) {
        const double t = a + (s - a) * i / grid;
        if (const double v = f(t); v > best) {
            best = v;
            best_t = t;
        }
    }
    const double h = (s - a) / grid;
    double lo = std::max(a, best_t - h), hi = std::min(s, best_t + h);
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 200; ++it) {
        const double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
        (f(x1) < f(x2) ? lo : hi) = f(x1) < f(x2) ? x1 : x2;
    }
    return std::max(best, f(0.5 * (lo + hi)));
}

double phi_by_maximization(double p, double x)
{
    return 1.0 / max_log_profile(p, x, 1.0);
}

double scalar_log_factor(cplx z, int n)
{
    cplx sum = 0.0;
    for (int j = 1; j < n; ++j) sum += std::pow(z, j) / static_cast<double>(j);
    return std::log(std::abs(1.0 - z)) + sum.real();
}

double gamma_by_sampling(double p, int radial, int angular)
{
    const int n = std::max(1, static_cast<int>(std::ceil(p)));
    double best = 0.0;
    for (int i = 0; i <= radial; ++i) {
        const double r = std::exp(std::log(1e-3) + (std::log(1e3) - std::log(1e-3)) * i / radial);
        for (int k = 0; k < angular; ++k) {
            const cplx z = std::polar(r, 2.0 * std::numbers::pi * k / angular);
            best = std::max(best, scalar_log_factor(z, n) / std::pow(r, p));
        }
    }
    return best;
}

cplx polynomial_value(std::span<const cplx> coeffs, cplx z)
{
    cplx acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs)
{
    std::size_t deg = coeffs.size();
    while (deg > 0 && coeffs[deg - 1] == 0.0) --deg;
    if (deg <= 1) return {};
    const std::vector<cplx> c(coeffs.begin(), coeffs.begin() + static_cast<long>(deg));
    std::vector<cplx> dc(deg - 1);
    for (std::size_t k = 1; k < deg; ++k) dc[k - 1] = static_cast<double>(k) * c[k];

    const std::size_t d = deg - 1;
    double radius = 0.0;
    for (std::size_t k = 0; k < d; ++k) radius = std::max(radius, std::abs(c[k] / c[d]));
    radius = 1.0 + radius;
    std::vector<cplx> z(d);
    for (std::size_t k = 0; k < d; ++k) z[k] = std::polar(radius, 2.0 * std::numbers::pi * (k + 0.25) / d);

    for (int it = 0; it < 500; ++it) {
        double moved = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            const cplx ratio = polynomial_value(c, z[k]) / polynomial_value(dc, z[k]);
            cplx repel = 0.0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != k) repel += 1.0 / (z[k] - z[j]);
            const cplx step = ratio / (1.0 - ratio * repel);
            z[k] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-15 * radius) break;
    }
    return z;
}

CMatrix random_matrix(Rng& rng, int rows, int cols)
{
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double re = g(rng);
            m(i, j) = cplx(re, g(rng));
        }
    return m;
}

cplx random_point(Rng& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * u(rng));
    return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

} // namespace eigencount::ref
