#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lct/delta_table.hpp"
#include "lct/graded_map.hpp"

namespace lct {

enum class ModuleKind { K, Kx, MPow, R };

/// Identifies one extremal table: a twist of k, k[x], k[x,y] or of a power
/// of the irrelevant maximal ideal.
struct ExtremalLabel {
    ModuleKind kind = ModuleKind::K;
    int shift = 0;
    int t = 0;  // power, MPow only (t >= 1)

    bool operator==(const ExtremalLabel&) const = default;
};

ExtremalLabel label_k(int shift);
ExtremalLabel label_kx(int shift);
ExtremalLabel label_r(int shift);
ExtremalLabel label_m_power(int t, int shift);

/// Throws InvalidLabel on out-of-range parameters.
void validate(const ExtremalLabel& l);

/// Canonical term order: descending shift, then k < k[x] < m-powers (by
/// ascending t) < k[x,y].
bool canonical_less(const ExtremalLabel& a, const ExtremalLabel& b);

std::string to_string(const ExtremalLabel& l);

/// A finite positive combination of extremal tables.
struct Decomposition {
    struct Term {
        Rational coeff;
        ExtremalLabel label;
        bool operator==(const Term&) const = default;
    };

    std::vector<Term> terms;

    /// Sorts into canonical order, merges repeated labels, drops zeros.
    void canonicalize();

    bool operator==(const Decomposition&) const = default;
};

/// Closed-form table of the labelled extremal module.
DeltaTable extremal_table(const ExtremalLabel& l);

/// Hilbert column of the twisted cyclic quotient R/m^t(-a): value n - a + 1
/// at degrees a <= n <= a + t - 1.
GradedMap hilbert_column_cyclic(int t, int a);

/// Monomial ideal in two variables given by exponent pairs (i, j) <-> x^i y^j.
struct MonomialIdealSpec {
    std::vector<std::pair<int, int>> generators;
    int shift = 0;
};

/// Table of the ideal itself: the first column is the Hilbert function of the
/// quotient, counted directly on the staircase, and the second column matches
/// the free module of rank one. Throws NotPrimary when the ideal has no pure
/// power of x or of y.
DeltaTable monomial_ideal_table(const MonomialIdealSpec& spec);

/// Nonnegative combination of tables.
DeltaTable combine(const std::vector<std::pair<Rational, DeltaTable>>& terms);

}  // namespace lct
