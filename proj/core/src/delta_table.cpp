#include "lct/delta_table.hpp"

#include <algorithm>
#include <stdexcept>

#include "lct/errors.hpp"

namespace lct {

Rational RawWindow::value(int i, int n) const {
    if (n > hi) {
        return 0;
    }
    if (n >= lo) {
        return values[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - lo)];
    }
    if (i == 1) {
        return h1_tail.value_or(Rational(0));
    }
    if (i == 2 && h2_slope) {
        return values[2].front() + Rational(lo - n) * *h2_slope;
    }
    return 0;
}

Rational h_from_d1(const GradedMap& d1, int n) {
    Rational sum = 0;
    for (auto it = d1.entries().lower_bound(n); it != d1.entries().end(); ++it) {
        sum += it->second;
    }
    return sum;
}

Rational h_from_d2(const GradedMap& d2, int n) {
    Rational sum = 0;
    for (auto it = d2.entries().lower_bound(n); it != d2.entries().end(); ++it) {
        sum += Rational(it->first - n + 1) * it->second;
    }
    return sum;
}

std::optional<std::string> DeltaTable::image_defect(const GradedMap& d0, const GradedMap& d1,
                                                    const GradedMap& d2) {
    if (!d0.all_nonnegative()) {
        return "negative h0 entry";
    }
    if (!d1.empty()) {
        // h1 is constant between support degrees, so checking at the support
        // degrees covers the hull; the value at the lowest degree is the
        // constant tail below it.
        for (const auto& [n, v] : d1.entries()) {
            (void)v;
            if (h_from_d1(d1, n) < 0) {
                return "negative reconstructed h1 entry";
            }
        }
    }
    if (!d2.empty()) {
        // h2 is linear between support degrees and below the lowest one, so
        // nonnegativity at the support degrees plus a nonnegative downward
        // slope covers every degree.
        for (const auto& [n, v] : d2.entries()) {
            (void)v;
            if (h_from_d2(d2, n) < 0) {
                return "negative reconstructed h2 entry";
            }
        }
        if (d2.total() < 0) {
            return "h2 decreases toward low degrees";
        }
    }
    return std::nullopt;
}

DeltaTable::DeltaTable(GradedMap d0, GradedMap d1, GradedMap d2)
    : d0_(std::move(d0)), d1_(std::move(d1)), d2_(std::move(d2)) {
    if (auto defect = image_defect(d0_, d1_, d2_)) {
        throw NegativeEntry("invalid table image: " + *defect);
    }
}

Rational DeltaTable::value(int i, int n) const {
    switch (i) {
        case 0:
            return d0_.value(n);
        case 1:
            return h_from_d1(d1_, n);
        case 2:
            return h_from_d2(d2_, n);
        default:
            throw std::invalid_argument("column index must be 0, 1 or 2");
    }
}

std::optional<std::pair<int, int>> DeltaTable::support_hull() const {
    std::optional<int> lo, hi;
    for (const GradedMap* m : {&d0_, &d1_, &d2_}) {
        if (auto mn = m->min_degree()) {
            lo = lo ? std::min(*lo, *mn) : *mn;
        }
        if (auto mx = m->max_degree()) {
            hi = hi ? std::max(*hi, *mx) : *mx;
        }
    }
    if (!lo) {
        return std::nullopt;
    }
    return std::make_pair(*lo, *hi);
}

DeltaTable DeltaTable::shifted(int a) const {
    return DeltaTable(d0_.shifted(a), d1_.shifted(a), d2_.shifted(a));
}

DeltaTable DeltaTable::scaled(const Rational& c) const {
    if (c < 0) {
        throw NegativeEntry("table scale factor must be nonnegative");
    }
    return DeltaTable(d0_.scaled(c), d1_.scaled(c), d2_.scaled(c));
}

DeltaTable operator+(const DeltaTable& a, const DeltaTable& b) {
    return DeltaTable(a.d0_ + b.d0_, a.d1_ + b.d1_, a.d2_ + b.d2_);
}

DeltaTable DeltaTable::sub_checked(const DeltaTable& b) const {
    GradedMap r0 = d0_ - b.d0_;
    GradedMap r1 = d1_ - b.d1_;
    GradedMap r2 = d2_ - b.d2_;
    if (auto defect = image_defect(r0, r1, r2)) {
        throw WouldGoNegative("table subtraction: " + *defect);
    }
    return DeltaTable(std::move(r0), std::move(r1), std::move(r2));
}

DeltaTable from_raw(const RawWindow& w) {
    if (w.lo > w.hi) {
        throw ParseError("window bounds out of order");
    }
    const std::size_t width = static_cast<std::size_t>(w.hi - w.lo + 1);
    for (const auto& column : w.values) {
        if (column.size() != width) {
            throw ParseError("window rows do not cover the declared range");
        }
    }
    for (const auto& column : w.values) {
        for (const auto& v : column) {
            if (v < 0) {
                throw NegativeEntry("negative table entry in window");
            }
        }
    }
    if (w.h1_tail && *w.h1_tail < 0) {
        throw NegativeEntry("negative declared h1 tail");
    }
    if (w.h2_slope && *w.h2_slope < 0) {
        throw NegativeEntry("h2 tail decreases toward low degrees");
    }

    // The declared tail has to extend the window edge: the computed first
    // differences must vanish strictly below lo.
    if (w.value(1, w.lo - 1) != w.value(1, w.lo)) {
        throw TailInconsistent("declared h1 tail does not match the window edge");
    }
    for (int n : {w.lo - 1, w.lo - 2}) {
        const Rational dd = w.value(2, n) - 2 * w.value(2, n + 1) + w.value(2, n + 2);
        if (dd != 0) {
            throw TailInconsistent("declared h2 tail does not match the window edge");
        }
    }

    GradedMap d0, d1, d2;
    for (int n = w.lo; n <= w.hi; ++n) {
        d0.set(n, w.value(0, n));
        d1.set(n, w.value(1, n) - w.value(1, n + 1));
        d2.set(n, w.value(2, n) - 2 * w.value(2, n + 1) + w.value(2, n + 2));
    }
    return DeltaTable(std::move(d0), std::move(d1), std::move(d2));
}

RawWindow render_window(const DeltaTable& t) {
    RawWindow w;
    auto hull = t.support_hull();
    if (!hull) {
        w.lo = 0;
        w.hi = 0;
        for (auto& column : w.values) {
            column.assign(1, Rational(0));
        }
        return w;
    }
    w.lo = hull->first;
    w.hi = hull->second;
    const std::size_t width = static_cast<std::size_t>(w.hi - w.lo + 1);
    for (int i = 0; i < 3; ++i) {
        auto& column = w.values[static_cast<std::size_t>(i)];
        column.resize(width);
        for (int n = w.lo; n <= w.hi; ++n) {
            column[static_cast<std::size_t>(n - w.lo)] = t.value(i, n);
        }
    }
    const Rational h1_lo = t.value(1, w.lo);
    if (h1_lo != 0) {
        w.h1_tail = h1_lo;
    }
    const Rational slope = t.d2().total();
    if (slope != 0 || t.value(2, w.lo) != 0) {
        w.h2_slope = slope;
    }
    return w;
}

}  // namespace lct
