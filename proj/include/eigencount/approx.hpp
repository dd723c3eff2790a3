#pragma once

#include <vector>

#include "eigencount/config.hpp"
#include "eigencount/numerics.hpp"

namespace eigencount {

enum class Certainty { Exact, UpperBound };

/// alpha_1 >= alpha_2 >= ... >= 0 with a certainty flag per entry. Indices
/// past the stored length are zero (a dim x dim matrix has rank <= dim).
struct ApproxSequence
{
    std::vector<double> values;
    std::vector<Certainty> certainty;

    /// 1-based: `at(1)` is alpha_1. Returns 0 for n > size.
    double at(std::size_t n) const { return n >= 1 && n <= values.size() ? values[n - 1] : 0.0; }

    /// sum_{j=1}^{count} alpha_j^p.
    double power_sum(double p, std::size_t count) const;
    double power_sum(double p) const { return power_sum(p, values.size()); }

    bool all_exact() const;
};

/// Approximation numbers in the given norm. L2: singular values (exact).
/// L1/LInf: the j-th largest absolute column/row sum, an upper bound obtained
/// by dropping the j-1 heaviest columns/rows.
ApproxSequence approx_numbers(const CMatrix& m, NormKind kind);

/// A rank <= `rank` matrix F realizing the certificate alpha_{rank+1}:
/// truncated SVD (L2), or the `rank` heaviest columns (L1) / rows (LInf),
/// ties broken by lower index.
struct RankApproximant
{
    CMatrix f;
    /// ||m - f|| in the requested norm.
    double residual_norm = 0.0;
};

RankApproximant best_rank_approximant(const CMatrix& m, int rank, NormKind kind);

struct KoenigSides
{
    double lhs = 0.0;
    double rhs = 0.0;
};

/// lhs = sum |lambda_j|^p over nonzero eigenvalues, rhs = 2 (2e)^{p/2} sum
/// sigma_j^p. The eigenvalue/approximation-number inequality says lhs <= rhs.
KoenigSides koenig_check(const CMatrix& k, double p, const Tolerances& tol = {});

/// 2 (2e)^{p/2}.
double koenig_constant(double p);

} // namespace eigencount
