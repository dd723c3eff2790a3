#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <numeric>

#include "eigencount/approx.hpp"
#include "reference/oracles.hpp"

using namespace eigencount;

TEST_CASE("singular values of a diagonal are exact approximation numbers")
{
    CMatrix d = CMatrix::Zero(3, 3);
    d(0, 0) = 1.0;
    d(1, 1) = 0.5;
    d(2, 2) = 1.0 / 3.0;
    const auto a = approx_numbers(d, NormKind::L2);
    CHECK(a.all_exact());
    CHECK(a.at(1) == doctest::Approx(1.0));
    CHECK(a.at(2) == doctest::Approx(0.5));
    CHECK(a.at(3) == doctest::Approx(1.0 / 3.0));
    CHECK(a.at(4) == 0.0);
}

TEST_CASE("column drop certificate for 2 E11 in l1")
{
    CMatrix k = CMatrix::Zero(10, 10);
    k(0, 0) = 2.0;
    const auto a = approx_numbers(k, NormKind::L1);
    CHECK(!a.all_exact());
    CHECK(a.certainty[0] == Certainty::UpperBound);
    CHECK(a.at(1) == 2.0);
    for (std::size_t j = 2; j <= 10; ++j) CHECK(a.at(j) == 0.0);
}

TEST_CASE("first approximation number is the norm")
{
    ref::Rng rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        const CMatrix m = ref::random_matrix(rng, 7, 7);
        for (auto k : {NormKind::L1, NormKind::L2, NormKind::LInf}) {
            const auto a = approx_numbers(m, k);
            CHECK(a.at(1) == doctest::Approx(induced_norm(m, k)).epsilon(1e-12));
            CHECK(std::is_sorted(a.values.rbegin(), a.values.rend()));
        }
    }
}

TEST_CASE("additivity and ideal property for singular values")
{
    ref::Rng rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 6;
        const CMatrix a = ref::random_matrix(rng, n, n), b = ref::random_matrix(rng, n, n),
                      c = ref::random_matrix(rng, n, n);
        const auto sa = approx_numbers(a, NormKind::L2), sb = approx_numbers(b, NormKind::L2),
                   sab = approx_numbers(a + b, NormKind::L2), sabc = approx_numbers(a * b * c, NormKind::L2);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; i + j - 1 <= n; ++j) CHECK(sab.at(i + j - 1) <= sa.at(i) + sb.at(j) + 1e-10);
        const double na = induced_norm(a, NormKind::L2), nc = induced_norm(c, NormKind::L2);
        for (std::size_t i = 1; i <= n; ++i) CHECK(sabc.at(i) <= na * sb.at(i) * nc + 1e-10);
    }
}

TEST_CASE("approximation numbers vanish past the rank in every norm")
{
    ref::Rng rng(8);
    const CMatrix low = ref::random_matrix(rng, 9, 2) * ref::random_matrix(rng, 2, 9);
    CHECK(approx_numbers(low, NormKind::L2).at(3) <= 1e-12 * approx_numbers(low, NormKind::L2).at(1));
    // Column/row certificates only vanish once every nonzero column/row is
    // dropped; a matrix supported on two columns has rank 2 and alpha_3 = 0.
    CMatrix cols = CMatrix::Zero(9, 9);
    cols.col(2) = ref::random_matrix(rng, 9, 1);
    cols.col(5) = ref::random_matrix(rng, 9, 1);
    CHECK(approx_numbers(cols, NormKind::L1).at(3) == 0.0);
    CHECK(approx_numbers(cols.transpose(), NormKind::LInf).at(3) == 0.0);
}

TEST_CASE("best rank approximant realizes the certificate")
{
    ref::Rng rng(10);
    const CMatrix m = ref::random_matrix(rng, 8, 8);
    for (auto k : {NormKind::L1, NormKind::L2, NormKind::LInf}) {
        const auto a = approx_numbers(m, k);
        for (int r = 0; r <= 8; ++r) {
            const auto f = best_rank_approximant(m, r, k);
            CHECK(f.residual_norm == doctest::Approx(a.at(static_cast<std::size_t>(r) + 1)).epsilon(1e-10));
            CHECK(induced_norm(m - f.f, k) == doctest::Approx(f.residual_norm).epsilon(1e-10));
            CHECK(numerical_rank(singular_values(f.f), 1e-10) <= r);
        }
    }
}

TEST_CASE("column-drop certificate is the best column-subset approximant")
{
    // Keeping any j-1 columns leaves the largest dropped column sum as the
    // residual; the certificate must not exceed any such search result.
    ref::Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const CMatrix m = ref::random_matrix(rng, 8, 8);
        const auto a = approx_numbers(m, NormKind::L1);
        for (int j = 1; j <= 8; ++j) {
            std::vector<int> idx(8);
            std::iota(idx.begin(), idx.end(), 0);
            std::shuffle(idx.begin(), idx.end(), rng);
            CMatrix f = CMatrix::Zero(8, 8);
            for (int c = 0; c < j - 1; ++c) f.col(idx[static_cast<std::size_t>(c)]) = m.col(idx[static_cast<std::size_t>(c)]);
            CHECK(a.at(static_cast<std::size_t>(j)) <= induced_norm(m - f, NormKind::L1) + 1e-12);
        }
    }
}

TEST_CASE("ties between equal columns are broken by lower index")
{
    CMatrix m = CMatrix::Zero(3, 3);
    m(0, 0) = 1.0;
    m(0, 2) = 1.0;
    const auto f = best_rank_approximant(m, 1, NormKind::L1);
    CHECK(f.f(0, 0) == cplx(1.0));
    CHECK(f.f(0, 2) == cplx(0.0));
}

TEST_CASE("Koenig inequality")
{
    const auto zero = koenig_check(CMatrix::Zero(4, 4), 1.0);
    CHECK(zero.lhs == 0.0);
    CHECK(zero.rhs == 0.0);

    CMatrix half = CMatrix::Zero(1, 1);
    half(0, 0) = 0.5;
    const auto s = koenig_check(half, 1.0);
    CHECK(s.lhs == doctest::Approx(0.5));
    CHECK(s.rhs == doctest::Approx(2.33164398159712420).epsilon(1e-14));
    CHECK(koenig_constant(2.0) == doctest::Approx(4.0 * std::numbers::e));

    ref::Rng rng(14);
    for (int trial = 0; trial < 100; ++trial)
        for (double p : {0.5, 1.0, 2.0}) {
            const auto k = koenig_check(ref::random_matrix(rng, 16, 16), p);
            CHECK(k.lhs <= k.rhs);
        }
}

TEST_CASE("power sums")
{
    ApproxSequence a;
    a.values = {3.0, 2.0, 1.0};
    a.certainty.assign(3, Certainty::Exact);
    CHECK(a.power_sum(2.0) == doctest::Approx(14.0));
    CHECK(a.power_sum(1.0, 2) == doctest::Approx(5.0));
}
