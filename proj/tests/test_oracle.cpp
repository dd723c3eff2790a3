#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eigencount/error.hpp"
#include "eigencount/oracle.hpp"
#include "reference/oracles.hpp"

using namespace eigencount;

namespace {

CMatrix diag(std::initializer_list<cplx> values)
{
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (cplx v : values) m(i, i) = v, ++i;
    return m;
}

} // namespace

TEST_CASE("eigenvalue counts")
{
    CHECK(eigen_count_outside(diag({3.0, 0.5}), 1.0) == 1);
    const std::vector<cplx> b{2.0};
    const auto ex = shift_example(b, 50);
    const auto mat = materialize(ex.model);
    CHECK(eigen_count_outside(mat.full(), 1.5) == 1);
    CHECK(eigen_count_outside(mat.full(), 2.5) == 0);

    ref::Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const CMatrix m = ref::random_matrix(rng, 9, 9);
        for (auto k : {NormKind::L1, NormKind::L2, NormKind::LInf})
            CHECK(eigen_count_outside(m, induced_norm(m, k) + 1.0) == 0);
    }
}

TEST_CASE("count curve")
{
    const auto curve = count_curve(diag({1.0, 2.0, 3.0}));
    CHECK(curve.total == 3);
    REQUIRE(curve.breakpoints.size() == 3);
    CHECK(curve.breakpoints[0].radius == doctest::Approx(1.0));
    CHECK(curve.breakpoints[0].count == 2);
    CHECK(curve.breakpoints[1].count == 1);
    CHECK(curve.breakpoints[2].count == 0);

    const auto zero = count_curve(CMatrix::Zero(4, 4));
    REQUIRE(zero.breakpoints.size() == 1);
    CHECK(zero.breakpoints[0].radius == 0.0);
    CHECK(zero.breakpoints[0].count == 0);
    CHECK(zero.at(0.0) == 0);

    ref::Rng rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        const CMatrix m = ref::random_matrix(rng, 12, 12);
        const auto spectrum = eigenvalues(m);
        const auto c = count_curve(spectrum);
        for (int i = 0; i < 60; ++i) {
            const double s = 0.1 * i;
            CHECK(c.at(s) == eigen_count_outside(spectrum, s));
        }
    }
}

TEST_CASE("moment identity")
{
    ref::Rng rng(35);
    for (int trial = 0; trial < 10; ++trial) {
        const auto spectrum = eigenvalues(ref::random_matrix(rng, 10, 10));
        const auto curve = count_curve(spectrum);
        for (double q : {0.5, 1.0, 2.5}) {
            const double base = 0.5 * trial;
            CHECK(curve_moment_integral(curve, base, q) ==
                  doctest::Approx(moment_sum(spectrum, base, q)).epsilon(1e-10));
        }
    }
}

TEST_CASE("winding of 1 - 2/lambda")
{
    const auto d = as_sampler([](cplx z) { return 1.0 - 2.0 / z; });
    // The pole at 0 cancels the zero at 2 on the outer circle.
    CHECK(winding_number(d, {0.0, 3.0}) == 0);
    CHECK(winding_number(d, {0.0, 1.5}) == -1);
    CHECK(zero_count(d, {0.0, 3.0}, Circle{0.0, 1.2}) == 1);
    CHECK(zero_count(d, {0.0, 1.5}, Circle{0.0, 1.2}) == 0);
    const auto shifted = as_sampler([](cplx z) { return z - 2.0; });
    CHECK(winding_number(shifted, {0.0, 3.0}) == 1);
    CHECK(winding_number(shifted, {0.0, 1.5}) == 0);
}

TEST_CASE("winding of random quartics")
{
    ref::Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix c = ref::random_matrix(rng, 5, 1);
        const std::vector<cplx> coeffs(c.data(), c.data() + 5);
        double reach = 0.0;
        for (cplx r : ref::polynomial_roots(coeffs)) reach = std::max(reach, std::abs(r));
        const auto f = as_sampler([&](cplx z) { return ref::polynomial_value(coeffs, z); });
        CHECK(winding_number(f, {0.0, 1.5 * reach + 0.1}) == 4);
    }
}

TEST_CASE("contour failures")
{
    const auto d = as_sampler([](cplx z) { return z - 2.0; });
    try {
        (void)winding_number(d, {0.0, 2.0});
        FAIL("expected ContourError");
    } catch (const ContourError& e) {
        CHECK(e.kind() == ContourError::Kind::ZeroOnContour);
    }
    Tolerances tight;
    tight.contour_initial = 8;
    tight.contour_budget = 16;
    // 8 initial samples of z^10 step the phase by 5 pi / 2; two bisections
    // are needed, which the budget of 16 does not allow.
    const auto wild = as_sampler([](cplx z) { return std::pow(z, 10); });
    try {
        (void)winding_number(wild, {0.0, 1.0}, tight);
        FAIL("expected ContourError");
    } catch (const ContourError& e) {
        CHECK(e.kind() == ContourError::Kind::RefinementBudget);
    }
    const std::vector<DetSample> coarse{{1.0, 1.0, 0.0, 0.0},
                                        {cplx(0.0, 1.0), cplx(-1.0), 0.0, std::numbers::pi},
                                        {-1.0, 1.0, 0.0, 0.0}};
    CHECK_THROWS_AS(winding_count(coarse), ContourError);
    CHECK_THROWS_AS(winding_count(std::span<const DetSample>(coarse.data(), 2)), InvalidArgument);
}

TEST_CASE("Jensen inequality")
{
    const std::vector<double> radii{0.1, 0.3, 0.5, 0.7, 0.9, 0.95};
    {
        const std::vector<cplx> zeros{0.5};
        const auto v = jensen_check([](cplx w) { return 1.0 - 2.0 * w; }, zeros, radii);
        CHECK(v.ok);
        CHECK(v.log_sup == doctest::Approx(std::log(3.0)));
        for (const auto& row : v.rows)
            if (row.r == 0.5) {
                CHECK(row.zeros_inside == 1);
                CHECK(row.lhs == doctest::Approx(std::log(2.0)));
            }
    }
    {
        const auto v = jensen_check([](cplx) { return cplx(1.0); }, {}, radii);
        CHECK(v.ok);
        for (const auto& row : v.rows) {
            CHECK(row.lhs == 0.0);
            CHECK(row.rhs == doctest::Approx(0.0));
        }
    }
    {
        const std::vector<cplx> zeros{0.5, 0.9};
        const auto v =
            jensen_check([](cplx w) { return (1.0 - 2.0 * w) * (1.0 - 10.0 / 9.0 * w); }, zeros, radii);
        CHECK(v.ok);
    }
    CHECK_THROWS_AS(jensen_check([](cplx w) { return 2.0 - w; }, {}, radii), InvalidArgument);
    const std::vector<double> bad{1.0};
    CHECK_THROWS_AS(jensen_check([](cplx w) { return 1.0 - w; }, {}, bad), InvalidArgument);
}

TEST_CASE("shift example determinant identity")
{
    {
        const std::vector<cplx> b{2.0};
        const auto ex = shift_example(b, 50);
        const auto mat = materialize(ex.model);
        for (cplx z : {cplx(3.0), cplx(2.0, 1.0), cplx(-4.0)}) {
            CHECK(std::abs(ex.analytic_d(z) - (1.0 - 2.0 / z)) < 1e-14);
            CHECK(std::abs(perturbation_determinant(mat.full(), mat.k, z, 1.0).value - ex.analytic_d(z)) < 1e-8);
        }
    }
    {
        const std::vector<cplx> b(5, 0.0);
        const auto ex = shift_example(b, 10);
        const auto mat = materialize(ex.model);
        CHECK(ex.analytic_d(1.7) == cplx(1.0));
        CHECK(std::abs(perturbation_determinant(mat.full(), mat.k, 1.7, 1.0).value - 1.0) < 1e-14);
    }
    {
        ref::Rng rng(39);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<cplx> b(20);
        for (auto& x : b) x = u(rng);
        const auto ex = shift_example(b, 200);
        const auto mat = materialize(ex.model);
        double reach = 0.0;
        const auto spectrum = eigenvalues(mat.full());
        for (const auto& e : spectrum.entries()) reach = std::max(reach, std::abs(e.value));
        for (int i = 0; i < 50; ++i) {
            const cplx z = ref::random_point(rng, std::max(1.05, reach + 0.1), 6.0);
            const cplx expected = ex.analytic_d(z);
            CHECK(std::abs(perturbation_determinant(mat.full(), mat.k, z, 1.0).value - expected) <=
                  1e-8 * std::max(1.0, std::abs(expected)));
        }
    }
}

TEST_CASE("Blaschke divergence probe")
{
    const std::vector<int> dims{8, 16, 32, 64, 128};
    const auto single = blaschke_divergence_probe(coefficient_family("single"), dims);
    for (const auto& row : single.rows) {
        CHECK(row.excess == doctest::Approx(1.0));
        CHECK(row.outside == 1);
    }
    const auto zero = blaschke_divergence_probe(coefficient_family("zero"), dims);
    for (const auto& row : zero.rows) CHECK(row.excess == 0.0);
    CHECK(!zero.growth.has_value());
    const auto lacunary = blaschke_divergence_probe(coefficient_family("lacunary"), dims);
    CHECK(lacunary.non_decreasing);
    CHECK_THROWS(coefficient_family("nope"));
}
