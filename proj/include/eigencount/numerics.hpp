#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "eigencount/config.hpp"

namespace eigencount {

enum class NormKind { L1, L2, LInf };

std::string_view to_string(NormKind kind);

/// Accepts "l1", "l2", "linf". Throws InvalidArgument otherwise.
NormKind parse_norm_kind(std::string_view text);

struct Eigenvalue
{
    cplx value;
    int multiplicity = 1;
};

/// Multiset of eigenvalues of a square matrix. Entries are clusters of
/// numerically coincident eigenvalues, ordered by decreasing modulus (ties by
/// real then imaginary part).
class Spectrum
{
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<Eigenvalue> entries);

    const std::vector<Eigenvalue>& entries() const noexcept { return entries_; }

    /// Total multiplicity.
    int size() const noexcept;

    /// Eigenvalues repeated according to multiplicity.
    std::vector<cplx> expanded() const;

    cplx sum() const;
    cplx product() const;
    double spectral_radius() const;

private:
    std::vector<Eigenvalue> entries_;
};

/// Single-linkage clustering of raw eigenvalues within `radius`; each
/// cluster is represented by its mean.
Spectrum cluster_eigenvalues(std::span<const cplx> raw, double radius);

void require_square_finite(const CMatrix& m, std::string_view what);

/// All eigenvalues with algebraic multiplicity. Throws ConvergenceError when
/// the Schur iteration exceeds its sweep budget.
Spectrum eigenvalues(const CMatrix& m, const Tolerances& tol = {});

/// Raw (unclustered) eigenvalues, in Schur order.
std::vector<cplx> raw_eigenvalues(const CMatrix& m, const Tolerances& tol = {});

/// Non-increasing singular values.
std::vector<double> singular_values(const CMatrix& m);

/// Count of singular values above `rel * sigma_1`.
int numerical_rank(std::span<const double> sigma, double rel);

/// Operator norm induced by the vector norm: max column sum (L1), largest
/// singular value (L2), max row sum (LInf).
double induced_norm(const CMatrix& m, NormKind kind);

/// (lambda I - m)^{-1}. Throws SingularError when lambda is numerically an
/// eigenvalue of m.
CMatrix resolvent(const CMatrix& m, cplx lambda, const Tolerances& tol = {});

/// ||(lambda I - m)^{-1}|| in the given norm. In L2 this is the reciprocal of
/// the smallest singular value of lambda I - m.
double resolvent_norm(const CMatrix& m, cplx lambda, NormKind kind, const Tolerances& tol = {});

} // namespace eigencount
