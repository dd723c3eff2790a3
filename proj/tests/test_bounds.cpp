#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eigencount/bounds.hpp"
#include "eigencount/corpus.hpp"
#include "eigencount/error.hpp"
#include "eigencount/oracle.hpp"
#include "reference/oracles.hpp"

using namespace eigencount;

namespace {

PreparedModel shift_model(int dim = 50)
{
    const std::vector<cplx> b{2.0};
    return prepare(shift_example(b, dim).model);
}

PreparedModel compact_diag(std::vector<cplx> values, NormKind norm = NormKind::L2)
{
    const int n = static_cast<int>(values.size());
    return prepare({n, norm, ZeroOp{}, DiagonalOp{std::move(values)}});
}

double profile(double p, double a, double s, double t) { return std::log(s / t) * std::pow(t - a, p); }

} // namespace

TEST_CASE("Lambert W")
{
    CHECK(lambert_w(0.0) == 0.0);
    CHECK(lambert_w(std::numbers::e) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(lambert_w(1.0) - 0.56714329040978387) < 1e-12);
    for (double x : {1e-300, 1e-12, 0.3, 2.0, 10.0, 1e6, 1e300}) {
        const double w = lambert_w(x);
        CHECK(std::abs(w * std::exp(w) - x) <= 1e-12 * x);
        CHECK(std::abs(w - ref::lambert_w_bisection(x)) <= 1e-12 * std::max(1.0, w));
    }
    CHECK_THROWS_AS(lambert_w(-0.1), DomainError);
    CHECK_THROWS_AS(lambert_w(std::nan("")), DomainError);
}

TEST_CASE("Phi_p")
{
    CHECK(phi_p(1.0, 0.0) == doctest::Approx(std::numbers::e));
    CHECK(phi_p(2.5, 0.0) == doctest::Approx(2.5 * std::numbers::e));
    CHECK(std::abs(phi_p(1.0, 1e-9) - std::numbers::e) < 1e-6);
    CHECK(phi_p(1.0, 2.0 / 3.0) == doctest::Approx(32.8310944532239741).epsilon(1e-12));
    CHECK(phi_p(1.0, 2.0 / 3.0) == doctest::Approx(ref::phi_by_maximization(1.0, 2.0 / 3.0)).epsilon(1e-6));
    for (double p : {0.5, 1.0, 2.0, 3.0})
        for (int i = 1; i <= 9; ++i) {
            const double x = 0.1 * i;
            const double phi = phi_p(p, x);
            CHECK(phi == doctest::Approx(ref::phi_by_maximization(p, x)).epsilon(1e-6));
            CHECK(phi <= std::pow(p + 1, p + 1) / std::pow(p, p) * std::pow(1 - x, -(p + 1)) + 1e-9);
        }
    CHECK_THROWS_AS(phi_p(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(phi_p(1.0, -0.1), DomainError);
}

TEST_CASE("t_star maximizes the log profile")
{
    CHECK(t_star(1.0, 0.0, 1.0) == doctest::Approx(1.0 / std::numbers::e));
    CHECK(t_star(1.0, 1e-12, 1.0) == doctest::Approx(1.0 / std::numbers::e).epsilon(1e-9));
    const double t = t_star(1.0, 1.0, 1.5);
    CHECK(t == doctest::Approx(1.23780989690286745).epsilon(1e-14));
    CHECK(std::abs(-(t - 1.0) / t + std::log(1.5 / t)) <= 1e-8);

    ref::Rng rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double p = 0.2 + 4.0 * u(rng), s = 0.5 + 3.0 * u(rng), a = s * 0.98 * u(rng);
        const double ts = t_star(p, a, s);
        CHECK(ts > a);
        CHECK(ts < s);
        const double best = profile(p, a, s, ts);
        for (int i = 1; i <= 100; ++i) {
            const double g = a + (s - a) * i / 101.0;
            CHECK(profile(p, a, s, g) <= best * (1 + 1e-12));
        }
    }
    CHECK_THROWS_AS(t_star(1.0, 2.0, 2.0), AdmissibilityError);
}

TEST_CASE("disk bound on the shift example")
{
    const auto m = shift_model();
    CHECK(m.l0_norm == 1.0);
    const auto r = count_bound_disk(m, 1.0, 1.5);
    CHECK(r.admissible);
    CHECK(r.oracle_count == 1);
    CHECK(r.bound >= 1.0);
    CHECK(r.n == 1);
    CHECK(r.t_star.has_value());
    CHECK(*r.eps == doctest::Approx(*r.t_star - 1.0));
    try {
        (void)count_bound_disk(m, 1.0, 0.5);
        FAIL("expected AdmissibilityError");
    } catch (const AdmissibilityError& e) {
        CHECK(e.condition() == "s > ||L0||");
    }
    BoundOptions fixed;
    fixed.n = 0;
    CHECK_THROWS_AS(count_bound_disk(m, 1.0, 1.5, fixed), AdmissibilityError);
}

TEST_CASE("compact case recovers p e C_p / s^p sum alpha^p")
{
    ref::Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const CMatrix k = ref::random_matrix(rng, 8, 8);
        const auto m = prepare(CMatrix::Zero(8, 8), k, NormKind::L2);
        for (double p : {0.5, 1.0, 2.0}) {
            const double s = 0.5 * m.k_norm;
            BoundOptions full;
            full.n = 8;
            const auto r = count_bound_disk(m, p, s, full);
            const double expected = p * std::numbers::e * r.c_p / std::pow(s, p) * m.alpha.power_sum(p);
            CHECK(r.bound == doctest::Approx(expected).epsilon(1e-9));
            CHECK(compact_count_bound(k, p, s, r.gamma) == doctest::Approx(expected).epsilon(1e-9));
            CHECK(*r.oracle_count <= r.bound);
        }
    }
}

TEST_CASE("simple bound dominates the Phi bound")
{
    for (const auto& entry : regression_corpus()) {
        const auto m = prepare(entry.model);
        for (double s : sweep_radii(m, 4))
            for (double p : {1.0, 2.0}) {
                BoundOptions opts;
                opts.with_oracle = false;
                const auto disk = count_bound_disk(m, p, s, opts);
                opts.n = disk.n;
                CHECK(count_bound_disk_simple(m, p, s, opts).bound >= disk.bound * (1 - 1e-12));
            }
    }
}

TEST_CASE("simple bound blows up like (s - ||L0||)^-(p+1)")
{
    const auto m = shift_model();
    BoundOptions opts;
    opts.n = 1;
    opts.with_oracle = false;
    for (double p : {1.0, 2.0}) {
        const double near = count_bound_disk_simple(m, p, 1.0 + 1e-4, opts).bound;
        const double far = count_bound_disk_simple(m, p, 1.0 + 1e-3, opts).bound;
        const double slope = std::log(near / far) / std::log(1e-4 / 1e-3);
        CHECK(std::abs(slope + (p + 1.0)) <= 0.05);
    }
}

TEST_CASE("region bound")
{
    const auto m = compact_diag({2.0, 1.0, 0.5});
    for (double p : {1.0, 2.0}) {
        BoundOptions opts;
        opts.n = 3;
        const auto disk = count_bound_disk(m, p, 1.5, opts);
        const auto region = count_bound_region(m, p, {*disk.t_star, ExteriorDisk{1.5}}, opts);
        CHECK(region.bound == doctest::Approx(disk.bound).epsilon(1e-9));
    }

    const auto sm = shift_model();
    const auto point = count_bound_region(sm, 1.0, {std::nullopt, PointTarget{2.0}});
    CHECK(point.oracle_count == 1);
    CHECK(point.bound >= 1.0);
    CHECK(point.point.has_value());

    double previous = 0.0;
    BoundOptions opts;
    opts.n = 1;
    for (double t : {1.25, 1.35, 1.45, 1.49, 1.499, 1.4999}) {
        const double b = count_bound_region(sm, 1.0, {t, ExteriorDisk{1.5}}, opts).bound;
        CHECK(b > previous);
        previous = b;
    }
    CHECK_THROWS_AS(count_bound_region(sm, 1.0, {1.6, ExteriorDisk{1.5}}), AdmissibilityError);
    CHECK_THROWS_AS(count_bound_region(sm, 1.0, {std::nullopt, PointTarget{0.5}}), AdmissibilityError);
}

TEST_CASE("empirical eps is flagged uncertified")
{
    const auto m = shift_model(16);
    BoundOptions opts;
    opts.eps_mode = EpsMode::Empirical;
    const auto r = count_bound_region(m, 1.0, {std::nullopt, ExteriorDisk{1.5}}, opts);
    CHECK(!r.certified);
    CHECK(count_bound_region(m, 1.0, {std::nullopt, ExteriorDisk{1.5}}).certified);
}

TEST_CASE("Koenig counting bound")
{
    CMatrix k = CMatrix::Zero(2, 2);
    k(0, 0) = 3.0;
    k(1, 1) = 0.5;
    CHECK(koenig_count_bound(k, 1.0, 1.0) == doctest::Approx(16.3215078711798694).epsilon(1e-14));
    CHECK(eigen_count_outside(k, 1.0) == 1);
    CHECK(koenig_count_bound(CMatrix::Zero(3, 3), 1.0, 1.0) == 0.0);

    ref::Rng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix r = ref::random_matrix(rng, 16, 16);
        const auto spectrum = eigenvalues(r);
        for (int i = 1; i <= 20; ++i) {
            const double s = 0.5 * i;
            CHECK(eigen_count_outside(spectrum, s) <= koenig_count_bound(r, 1.0, s));
        }
    }
    const auto m = compact_diag({3.0, 0.5});
    const auto rep = koenig_report(m, 1.0, 1.0);
    CHECK(rep.kind == BoundKind::Koenig);
    CHECK(rep.bound == doctest::Approx(16.3215078711798694));
    CHECK_THROWS_AS(koenig_report(shift_model(), 1.0, 1.5), AdmissibilityError);
}

TEST_CASE("moment bound")
{
    const auto zero = prepare({4, NormKind::L1, ShiftOp{}, ZeroOp{}});
    CHECK(moment_bound(zero, 1.0, 2.5) == 0.0);

    const auto m = shift_model();
    const double lhs = moment_sum(m.spectrum, m.l0_norm, 2.5);
    CHECK(lhs == doctest::Approx(1.0));
    CHECK(lhs <= moment_bound(m, 1.0, 2.5));
    try {
        (void)moment_bound(m, 1.0, 2.0);
        FAIL("expected AdmissibilityError");
    } catch (const AdmissibilityError& e) {
        CHECK(e.condition() == "q > p + 1");
    }
    const auto c = compact_diag({3.0, 0.5});
    CHECK(moment_bound(c, 1.0, 1.5) >= moment_sum(c.spectrum, 0.0, 1.5));
    CHECK_THROWS_AS(moment_bound(c, 1.0, 1.0), AdmissibilityError);
}

TEST_CASE("bound kind names")
{
    CHECK(to_string(BoundKind::Disk) == "disk");
    CHECK(to_string(BoundKind::DiskSimple) == "disk_simple");
    CHECK(to_string(BoundKind::Region) == "region");
    CHECK(to_string(BoundKind::Koenig) == "koenig");
    CHECK(to_string(BoundKind::Compact) == "compact");
    CHECK(to_string(EpsMode::Empirical) == "empirical");
}
