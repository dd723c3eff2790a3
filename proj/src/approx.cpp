#include "eigencount/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "eigencount/error.hpp"

namespace eigencount {

double ApproxSequence::power_sum(double p, std::size_t count) const
{
    double s = 0.0;
    for (std::size_t j = 0; j < std::min(count, values.size()); ++j)
        if (values[j] > 0.0) s += std::pow(values[j], p);
    return s;
}

bool ApproxSequence::all_exact() const
{
    return std::all_of(certainty.begin(), certainty.end(), [](Certainty c) { return c == Certainty::Exact; });
}

namespace {

// Absolute column (L1) or row (LInf) sums and their order, heaviest first.
std::pair<Eigen::VectorXd, std::vector<Eigen::Index>> heaviest_first(const CMatrix& m, NormKind kind)
{
    Eigen::VectorXd sums = kind == NormKind::L1 ? Eigen::VectorXd(m.cwiseAbs().colwise().sum().transpose())
                                                : Eigen::VectorXd(m.cwiseAbs().rowwise().sum());
    std::vector<Eigen::Index> order(static_cast<std::size_t>(sums.size()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return sums[a] > sums[b]; });
    return {std::move(sums), std::move(order)};
}

} // namespace

ApproxSequence approx_numbers(const CMatrix& m, NormKind kind)
{
    require_square_finite(m, "approx_numbers");
    ApproxSequence out;
    if (kind == NormKind::L2) {
        out.values = singular_values(m);
        out.certainty.assign(out.values.size(), Certainty::Exact);
        return out;
    }
    const auto [sums, order] = heaviest_first(m, kind);
    out.values.reserve(order.size());
    for (auto i : order) out.values.push_back(sums[i]);
    for (std::size_t j = 1; j < out.values.size(); ++j) out.values[j] = std::min(out.values[j], out.values[j - 1]);
    out.certainty.assign(out.values.size(), Certainty::UpperBound);
    return out;
}

RankApproximant best_rank_approximant(const CMatrix& m, int rank, NormKind kind)
{
    require_square_finite(m, "best_rank_approximant");
    if (rank < 0) throw InvalidArgument("best_rank_approximant: negative rank");
    const Eigen::Index n = m.rows();
    const Eigen::Index r = std::min<Eigen::Index>(rank, n);
    RankApproximant out;
    if (kind == NormKind::L2) {
        Eigen::BDCSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& s = svd.singularValues();
        out.f = svd.matrixU().leftCols(r) * s.head(r).asDiagonal() * svd.matrixV().leftCols(r).adjoint();
        out.residual_norm = r < s.size() ? s[r] : 0.0;
        return out;
    }
    const auto [sums, order] = heaviest_first(m, kind);
    out.f = CMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < r; ++j) {
        const auto idx = order[static_cast<std::size_t>(j)];
        if (kind == NormKind::L1)
            out.f.col(idx) = m.col(idx);
        else
            out.f.row(idx) = m.row(idx);
    }
    out.residual_norm = induced_norm(m - out.f, kind);
    return out;
}

double koenig_constant(double p)
{
    return 2.0 * std::pow(2.0 * std::numbers::e, p / 2.0);
}

KoenigSides koenig_check(const CMatrix& k, double p, const Tolerances& tol)
{
    if (!(p > 0.0)) throw InvalidArgument("koenig_check: p must be positive");
    KoenigSides out;
    const auto spec = eigenvalues(k, tol);
    const double zero_cut = tol.cluster_rel * std::max(1.0, k.norm());
    for (const auto& e : spec.entries())
        if (std::abs(e.value) > zero_cut) out.lhs += e.multiplicity * std::pow(std::abs(e.value), p);
    const auto alpha = approx_numbers(k, NormKind::L2);
    out.rhs = koenig_constant(p) * alpha.power_sum(p);
    return out;
}

} // namespace eigencount
