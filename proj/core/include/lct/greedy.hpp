#pragma once

#include "lct/delta_table.hpp"
#include "lct/extremal.hpp"

namespace lct {

/// Greedy decomposition of a table into a positive rational combination of
/// extremal tables. Works on any valid table, including rational cone
/// points; throws NotInCone when an intermediate subtraction certifies that
/// the input violates the cone's defining inequalities. The returned terms
/// recombine to the input exactly (verified before returning).
Decomposition decompose(const DeltaTable& table);

/// Sum of the labelled extremal tables with their coefficients.
DeltaTable recombine(const Decomposition& dec);

}  // namespace lct
