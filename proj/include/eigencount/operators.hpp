#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eigencount/config.hpp"
#include "eigencount/numerics.hpp"

namespace eigencount {

struct ZeroOp
{
    friend bool operator==(const ZeroOp&, const ZeroOp&) = default;
};

/// Forward shift: e_j -> e_{j+1}, last basis vector -> 0.
struct ShiftOp
{
    friend bool operator==(const ShiftOp&, const ShiftOp&) = default;
};

struct DiagonalOp
{
    std::vector<cplx> values;
    friend bool operator==(const DiagonalOp&, const DiagonalOp&) = default;
};

struct DenseOp
{
    CMatrix entries;
    friend bool operator==(const DenseOp& a, const DenseOp& b)
    {
        return a.entries.rows() == b.entries.rows() && a.entries.cols() == b.entries.cols() &&
               a.entries == b.entries;
    }
};

/// f -> <f, right> left, with <f, right> = sum_j right_j f_j (no conjugation:
/// `right` holds the coefficients of the dual functional).
struct RankOneOp
{
    std::vector<cplx> left;
    std::vector<cplx> right;
    friend bool operator==(const RankOneOp&, const RankOneOp&) = default;
};

using BaseSpec = std::variant<ZeroOp, ShiftOp, DiagonalOp, DenseOp>;
using PertSpec = std::variant<ZeroOp, RankOneOp, DiagonalOp, DenseOp>;

/// L = L0 + K acting on (C^dim, norm).
struct OperatorModel
{
    int dim = 0;
    NormKind norm = NormKind::L2;
    BaseSpec base;
    PertSpec perturbation;

    friend bool operator==(const OperatorModel&, const OperatorModel&) = default;
};

struct Materialized
{
    CMatrix l0;
    CMatrix k;

    CMatrix full() const { return l0 + k; }
};

/// Throws InvalidArgument on dimension mismatch between payloads and dim.
Materialized materialize(const OperatorModel& model);

void validate(const OperatorModel& model);

/// Rank implied by the perturbation's structure (1 for rank-one with nonzero
/// factors, count of nonzero diagonal values, ...). Dense reports -1.
int structural_rank(const PertSpec& pert);

/// Parses the operator-spec JSON document. Throws ParseError.
OperatorModel parse_spec(std::string_view text);

/// Canonical JSON text for the model; `parse_spec(serialize(m)) == m`.
std::string serialize(const OperatorModel& model);

} // namespace eigencount
