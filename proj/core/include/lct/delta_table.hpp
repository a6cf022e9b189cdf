#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "lct/graded_map.hpp"
#include "lct/rational.hpp"

namespace lct {

/// Explicit-values exchange format for a table: the three columns listed on
/// a degree window [lo, hi], all columns zero above hi, and a declared tail
/// below lo. A missing tail declaration means the column vanishes below lo;
/// a declared h1 tail is a constant, a declared h2 tail grows linearly by
/// `h2_slope` per downward step from the value at lo.
struct RawWindow {
    int lo = 0;
    int hi = 0;
    std::array<std::vector<Rational>, 3> values;  // values[i][n - lo]
    std::optional<Rational> h1_tail;
    std::optional<Rational> h2_slope;

    /// Value at any degree, including the declared tails and the zero region
    /// above the window.
    Rational value(int i, int n) const;
};

/// A local cohomology table stored through its difference image: row i holds
/// the i-th iterated difference of column i. The image is finitely supported
/// even though the table itself has infinite tails, and the passage is
/// injective, so tables are compared and combined through it.
///
/// Construction validates that the image reconstructs to a table with
/// nonnegative entries everywhere (throws NegativeEntry otherwise).
class DeltaTable {
public:
    DeltaTable() = default;
    DeltaTable(GradedMap d0, GradedMap d1, GradedMap d2);

    const GradedMap& d0() const { return d0_; }
    const GradedMap& d1() const { return d1_; }
    const GradedMap& d2() const { return d2_; }

    /// Reconstructed table entry h^i_n.
    Rational value(int i, int n) const;

    bool is_zero() const { return d0_.empty() && d1_.empty() && d2_.empty(); }

    /// Joint support hull of the three difference rows.
    std::optional<std::pair<int, int>> support_hull() const;

    DeltaTable shifted(int a) const;
    DeltaTable scaled(const Rational& c) const;

    friend DeltaTable operator+(const DeltaTable& a, const DeltaTable& b);

    /// Componentwise difference; throws WouldGoNegative when any
    /// reconstructed entry of the result would be negative.
    DeltaTable sub_checked(const DeltaTable& b) const;

    bool operator==(const DeltaTable&) const = default;

    /// Reason the given image is not a valid table, or nullopt.
    static std::optional<std::string> image_defect(const GradedMap& d0, const GradedMap& d1,
                                                   const GradedMap& d2);

private:
    GradedMap d0_, d1_, d2_;
};

/// Suffix sum reconstructing a first column from its difference image.
Rational h_from_d1(const GradedMap& d1, int n);
/// Weighted suffix sum reconstructing a second column from its image.
Rational h_from_d2(const GradedMap& d2, int n);

/// Validates the declared tails against the window edge (the computed
/// differences must vanish below lo) and returns the difference image.
/// Throws TailInconsistent or NegativeEntry.
DeltaTable from_raw(const RawWindow& w);

/// Inverse of from_raw on the table's own support hull.
RawWindow render_window(const DeltaTable& t);

}  // namespace lct
