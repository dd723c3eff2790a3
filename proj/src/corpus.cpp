#include "eigencount/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace eigencount {

namespace {

using Rng = std::mt19937_64;

cplx draw(Rng& rng)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double re = u(rng);
    return {re, u(rng)};
}

std::vector<cplx> draw_vector(Rng& rng, int n, double scale)
{
    std::vector<cplx> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = scale * draw(rng);
    return v;
}

CMatrix draw_matrix(Rng& rng, int rows, int cols, double scale)
{
    CMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = scale * draw(rng);
    return m;
}

/// U V^T with U, V of width `rank`, scaled to unit induced norm times `size`.
CMatrix low_rank(Rng& rng, int dim, int rank, double size, NormKind norm)
{
    CMatrix m = draw_matrix(rng, dim, rank, 1.0) * draw_matrix(rng, rank, dim, 1.0);
    return m * (size / induced_norm(m, norm));
}

/// Q diag(c) Q^* with Q orthonormal of width `rank` and |c_j| = magnitude (1 + j/2):
/// eigenvalues of L0 + K sit near c_j when magnitude exceeds ||L0||.
CMatrix outliers(Rng& rng, int dim, int rank, double magnitude)
{
    Eigen::HouseholderQR<CMatrix> qr(draw_matrix(rng, dim, rank, 1.0));
    const CMatrix q = qr.householderQ() * CMatrix::Identity(dim, rank);
    CVector c(rank);
    for (int j = 0; j < rank; ++j) c(j) = std::polar(magnitude * (1.0 + 0.5 * j), 1.3 * j + 0.2);
    return q * c.asDiagonal() * q.adjoint();
}

OperatorModel make(int dim, NormKind norm, BaseSpec base, PertSpec pert)
{
    OperatorModel m;
    m.dim = dim;
    m.norm = norm;
    m.base = std::move(base);
    m.perturbation = std::move(pert);
    return m;
}

} // namespace

std::vector<CorpusEntry> regression_corpus()
{
    std::vector<CorpusEntry> out;
    const NormKind norms[] = {NormKind::L1, NormKind::L2, NormKind::LInf};
    std::uint64_t seed = 1;

    for (NormKind norm : norms) {
        const std::string tag = "-" + std::string(to_string(norm));
        auto next = [&] { return Rng(seed++); };

        {
            auto rng = next();
            out.push_back({"shift-rank1-d8" + tag,
                           make(8, norm, ShiftOp{}, RankOneOp{draw_vector(rng, 8, 1.0), draw_vector(rng, 8, 0.8)})});
        }
        {
            auto rng = next();
            out.push_back({"shift-rank1-d64" + tag,
                           make(64, norm, ShiftOp{}, RankOneOp{draw_vector(rng, 64, 0.5), draw_vector(rng, 64, 0.3)})});
        }
        {
            auto rng = next();
            out.push_back({"shift-rank3-d32" + tag, make(32, norm, ShiftOp{}, DenseOp{low_rank(rng, 32, 3, 2.0, norm)})});
        }
        {
            auto rng = next();
            std::vector<cplx> d(16);
            for (int i = 0; i < 16; ++i) d[static_cast<std::size_t>(i)] = std::polar(0.9, 0.4 * i);
            out.push_back({"diag-rank2-d16" + tag, make(16, norm, DiagonalOp{d}, DenseOp{outliers(rng, 16, 2, 1.8)})});
        }
        {
            auto rng = next();
            std::vector<cplx> d(40);
            for (int i = 0; i < 40; ++i) d[static_cast<std::size_t>(i)] = 0.5 + 0.5 * i / 39.0;
            out.push_back({"diag-rank1-d40" + tag,
                           make(40, norm, DiagonalOp{d}, RankOneOp{draw_vector(rng, 40, 1.0), draw_vector(rng, 40, 0.2)})});
        }
        {
            auto rng = next();
            CMatrix base = draw_matrix(rng, 24, 24, 1.0);
            base /= induced_norm(base, norm);
            out.push_back({"dense-rank3-d24" + tag, make(24, norm, DenseOp{base}, DenseOp{outliers(rng, 24, 3, 2.5)})});
        }
        {
            auto rng = next();
            CMatrix base = draw_matrix(rng, 48, 48, 1.0);
            base *= 2.0 / induced_norm(base, norm);
            out.push_back({"dense-rank2-d48" + tag, make(48, norm, DenseOp{base}, DenseOp{outliers(rng, 48, 2, 3.0)})});
        }
        {
            auto rng = next();
            out.push_back({"zero-rank4-d12" + tag, make(12, norm, ZeroOp{}, DenseOp{low_rank(rng, 12, 4, 2.0, norm)})});
        }
        {
            auto rng = next();
            out.push_back({"zero-rank1-d20" + tag,
                           make(20, norm, ZeroOp{}, RankOneOp{draw_vector(rng, 20, 1.0), draw_vector(rng, 20, 1.0)})});
        }
        {
            std::vector<cplx> d(10, 0.0);
            d[0] = 3.0;
            d[1] = cplx(0.0, -1.5);
            d[2] = 0.5;
            out.push_back({"zero-diag3-d10" + tag, make(10, norm, ZeroOp{}, DiagonalOp{d})});
        }
        {
            auto rng = next();
            CMatrix base = draw_matrix(rng, 56, 56, 1.0);
            base *= 0.7 / induced_norm(base, norm);
            out.push_back({"dense-rank4-d56" + tag, make(56, norm, DenseOp{base}, DenseOp{outliers(rng, 56, 4, 1.2)})});
        }
    }

    std::vector<cplx> b(50, 0.0), e1(50, 0.0);
    b[0] = 2.0;
    e1[0] = 1.0;
    out.push_back({"shift-example-d50", make(50, NormKind::L1, ShiftOp{}, RankOneOp{e1, b})});
    return out;
}

std::vector<double> sweep_radii(const PreparedModel& m, int count)
{
    // Geometric spacing of s - ||L0|| over [0.02, 1.3] * reach, where reach is
    // how far the spectrum extends past ||L0||.
    const double beyond = m.spectrum.spectral_radius() - m.l0_norm;
    const double reach = beyond > 1e-3 ? beyond : std::max(m.k_norm, 1e-3);
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        out[static_cast<std::size_t>(i)] = m.l0_norm + reach * 0.02 * std::pow(65.0, f);
    }
    return out;
}

} // namespace eigencount
