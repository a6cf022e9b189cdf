#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lct/graded_map.hpp"

namespace lct {

/// Macaulay-type growth test for a column supported exactly on [a, b]:
/// nonnegative values, nonzero precisely inside the window, and from one
/// degree to the next the value may reach (n - a + 1) * h_a only while the
/// previous one sits at (n - a) * h_a, and is otherwise capped by
/// h_{n-1} * h_a.
bool star_condition(const GradedMap& column, int a, int b);

/// Triangular back-substitution expressing the column as a combination of
/// cyclic-quotient columns based at a; nullopt when the unique solution has
/// a negative coefficient or the support is not an interval starting at a.
/// Pairs carry (coefficient, t) with t the width of the cyclic column.
std::optional<std::vector<std::pair<Rational, int>>> cyclic_column_combination(
    const GradedMap& column, int a);

/// Decomposition of a growth-valid column into cyclic-quotient columns,
/// returned with t strictly decreasing and zero coefficients omitted.
/// Throws NotStarShaped when the growth test fails. The result is
/// cross-checked internally against the stepwise peeling procedure.
std::vector<std::pair<Rational, int>> decompose_finite_length(const GradedMap& column, int a,
                                                              int b);

/// Largest cap-respecting column below the given one and based at a:
/// min(column(n), n - a + 1) for n >= a, zero below.
GradedMap max_admissible(const GradedMap& column, int a);

/// Subtracts one from the column at each listed degree (with multiplicity);
/// results may be negative.
GradedMap truncation(const GradedMap& column, const std::vector<int>& degrees);

/// A growth-valid column normalized to value one at its generation degree.
struct AdmissibleWitness {
    GradedMap column;
    int gen_degree;
    int top_degree;

    /// Validates the growth conditions and the normalization.
    AdmissibleWitness(GradedMap column, int gen_degree, int top_degree);
};

/// Clipped subtraction of a strictly increasing column v from an admissible
/// column u: returns (w, z) with w = max(0, u - v) and z = max(0, v - u).
/// The hypotheses on v (support in [a', top] for some a' >= gen degree,
/// capped by n - a + 1, strictly increasing) are checked and
/// HypothesesViolated is thrown otherwise; the conclusions (w admissible,
/// z zero or strictly increasing up to the top) are asserted.
std::pair<GradedMap, GradedMap> subtract_admissible(const AdmissibleWitness& u,
                                                    const GradedMap& v);

}  // namespace lct
