#include "eigencount/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "eigencount/error.hpp"

namespace eigencount {

std::string_view to_string(NormKind kind)
{
    switch (kind) {
    case NormKind::L1: return "l1";
    case NormKind::L2: return "l2";
    case NormKind::LInf: return "linf";
    }
    return "?";
}

NormKind parse_norm_kind(std::string_view text)
{
    if (text == "l1") return NormKind::L1;
    if (text == "l2") return NormKind::L2;
    if (text == "linf") return NormKind::LInf;
    throw InvalidArgument("unknown norm '" + std::string(text) + "' (expected l1, l2 or linf)");
}

Spectrum::Spectrum(std::vector<Eigenvalue> entries) : entries_(std::move(entries))
{
    std::sort(entries_.begin(), entries_.end(), [](const Eigenvalue& a, const Eigenvalue& b) {
        const double ma = std::abs(a.value), mb = std::abs(b.value);
        if (ma != mb) return ma > mb;
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
}

int Spectrum::size() const noexcept
{
    int n = 0;
    for (const auto& e : entries_) n += e.multiplicity;
    return n;
}

std::vector<cplx> Spectrum::expanded() const
{
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (const auto& e : entries_)
        for (int i = 0; i < e.multiplicity; ++i) out.push_back(e.value);
    return out;
}

cplx Spectrum::sum() const
{
    cplx s = 0.0;
    for (const auto& e : entries_) s += static_cast<double>(e.multiplicity) * e.value;
    return s;
}

cplx Spectrum::product() const
{
    cplx p = 1.0;
    for (const auto& e : entries_) p *= std::pow(e.value, e.multiplicity);
    return p;
}

double Spectrum::spectral_radius() const
{
    return entries_.empty() ? 0.0 : std::abs(entries_.front().value);
}

Spectrum cluster_eigenvalues(std::span<const cplx> raw, double radius)
{
    const std::size_t n = raw.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(raw[i] - raw[j]) <= radius) {
                const auto a = find(i), b = find(j);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }

    std::vector<cplx> sums(n, 0.0);
    std::vector<int> counts(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = find(i);
        sums[r] += raw[i];
        ++counts[r];
    }
    std::vector<Eigenvalue> entries;
    for (std::size_t i = 0; i < n; ++i)
        if (counts[i] > 0) entries.push_back({sums[i] / static_cast<double>(counts[i]), counts[i]});
    return Spectrum(std::move(entries));
}

void require_square_finite(const CMatrix& m, std::string_view what)
{
    if (m.rows() != m.cols())
        throw InvalidArgument(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", expected square");
    if (!m.allFinite()) throw InvalidArgument(std::string(what) + ": matrix has non-finite entries");
}

std::vector<cplx> raw_eigenvalues(const CMatrix& m, const Tolerances& tol)
{
    require_square_finite(m, "eigenvalues");
    if (m.rows() == 0) return {};
    Eigen::ComplexSchur<CMatrix> schur(m.rows());
    schur.setMaxIterations(static_cast<Eigen::Index>(tol.max_sweeps_per_row) * m.rows());
    schur.compute(m, false);
    if (schur.info() != Eigen::Success)
        throw ConvergenceError("eigenvalues: Schur iteration did not converge within " +
                                   std::to_string(tol.max_sweeps_per_row) + " sweeps per row",
                               schur.matrixT());
    const auto& t = schur.matrixT();
    std::vector<cplx> out(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) out[static_cast<std::size_t>(i)] = t(i, i);
    return out;
}

Spectrum eigenvalues(const CMatrix& m, const Tolerances& tol)
{
    const auto raw = raw_eigenvalues(m, tol);
    const double scale = std::max(1.0, m.norm());
    return cluster_eigenvalues(raw, tol.cluster_rel * scale);
}

std::vector<double> singular_values(const CMatrix& m)
{
    require_square_finite(m, "singular_values");
    if (m.rows() == 0) return {};
    Eigen::BDCSVD<CMatrix> svd(m);
    const auto& sv = svd.singularValues();
    std::vector<double> out(sv.data(), sv.data() + sv.size());
    // BDCSVD already sorts, but keep the contract explicit.
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

int numerical_rank(std::span<const double> sigma, double rel)
{
    if (sigma.empty() || sigma.front() == 0.0) return 0;
    const double cut = rel * sigma.front();
    return static_cast<int>(std::count_if(sigma.begin(), sigma.end(), [cut](double s) { return s > cut; }));
}

double induced_norm(const CMatrix& m, NormKind kind)
{
    if (m.size() == 0) return 0.0;
    switch (kind) {
    case NormKind::L1: return m.cwiseAbs().colwise().sum().maxCoeff();
    case NormKind::LInf: return m.cwiseAbs().rowwise().sum().maxCoeff();
    case NormKind::L2: return singular_values(m).front();
    }
    return 0.0;
}

namespace {

Eigen::PartialPivLU<CMatrix> factor_shifted(const CMatrix& m, cplx lambda, const Tolerances& tol)
{
    require_square_finite(m, "resolvent");
    CMatrix a = -m;
    a.diagonal().array() += lambda;
    Eigen::PartialPivLU<CMatrix> lu(a);
    const double rcond = lu.rcond();
    if (!(rcond > tol.singular_rcond) || !lu.matrixLU().allFinite())
        throw SingularError("resolvent: lambda = (" + std::to_string(lambda.real()) + ", " +
                                std::to_string(lambda.imag()) +
                                ") is numerically an eigenvalue (rcond = " + std::to_string(rcond) + ")",
                            lambda);
    return lu;
}

} // namespace

CMatrix resolvent(const CMatrix& m, cplx lambda, const Tolerances& tol)
{
    return factor_shifted(m, lambda, tol).inverse();
}

double resolvent_norm(const CMatrix& m, cplx lambda, NormKind kind, const Tolerances& tol)
{
    if (kind == NormKind::L2) {
        require_square_finite(m, "resolvent_norm");
        CMatrix a = -m;
        a.diagonal().array() += lambda;
        const auto sv = singular_values(a);
        const double smin = sv.empty() ? 0.0 : sv.back();
        if (!(smin > tol.singular_rcond * std::max(1.0, sv.front())))
            throw SingularError("resolvent_norm: lambda is numerically an eigenvalue", lambda);
        return 1.0 / smin;
    }
    return induced_norm(resolvent(m, lambda, tol), kind);
}

} // namespace eigencount
