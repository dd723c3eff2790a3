#pragma once

#include <stdexcept>
#include <string>

#include "eigencount/config.hpp"

namespace eigencount {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Bad call arguments (non-square matrix, NaN entries, p <= 0, ...).
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// A hypothesis of a counting theorem does not hold for the given parameters.
/// The message names the violated condition.
class AdmissibilityError : public Error
{
public:
    AdmissibilityError(std::string condition, std::string detail)
        : Error(condition + ": " + detail), condition_(std::move(condition))
    {
    }

    const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

/// Argument outside the domain of a special function.
class DomainError : public Error
{
public:
    using Error::Error;
};

/// The Schur iteration ran out of sweeps. Carries the partially reduced
/// (upper triangular up to the unconverged block) matrix.
class ConvergenceError : public Error
{
public:
    ConvergenceError(std::string what, CMatrix partial)
        : Error(std::move(what)), partial_(std::move(partial))
    {
    }

    const CMatrix& partial() const noexcept { return partial_; }

private:
    CMatrix partial_;
};

/// `lambda - m` is (numerically) singular.
class SingularError : public Error
{
public:
    SingularError(std::string what, cplx lambda)
        : Error(std::move(what)), lambda_(lambda)
    {
    }

    cplx lambda() const noexcept { return lambda_; }

private:
    cplx lambda_;
};

/// Contour evaluation failed: a zero on the contour or an exhausted
/// refinement budget.
class ContourError : public Error
{
public:
    enum class Kind { ZeroOnContour, RefinementBudget };

    ContourError(Kind kind, std::string what) : Error(std::move(what)), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Operator-spec document rejected. `location` is a JSON pointer into the
/// document (or a byte offset for syntax errors).
class ParseError : public Error
{
public:
    enum class Kind { Malformed, UnknownKey, UnknownKind, DimensionMismatch, InvalidValue };

    ParseError(Kind kind, std::string location, const std::string& detail)
        : Error(location + ": " + detail), kind_(kind), location_(std::move(location))
    {
    }

    Kind kind() const noexcept { return kind_; }
    const std::string& location() const noexcept { return location_; }

private:
    Kind kind_;
    std::string location_;
};

} // namespace eigencount
