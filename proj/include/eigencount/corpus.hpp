#pragma once

#include <string>
#include <vector>

#include "eigencount/bounds.hpp"
#include "eigencount/operators.hpp"

namespace eigencount {

struct CorpusEntry
{
    std::string name;
    OperatorModel model;
};

/// Deterministic regression models: shift, diagonal, dense and zero bases
/// with rank 1-4 perturbations, dims 8-64, in each of the three norms.
std::vector<CorpusEntry> regression_corpus();

/// `count` radii s > ||L0||, spread from just above ||L0|| to beyond ||L||.
std::vector<double> sweep_radii(const PreparedModel& m, int count = 10);

} // namespace eigencount
