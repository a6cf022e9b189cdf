#include "lct/extremal.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "lct/errors.hpp"

namespace lct {

ExtremalLabel label_k(int shift) { return ExtremalLabel{ModuleKind::K, shift, 0}; }
ExtremalLabel label_kx(int shift) { return ExtremalLabel{ModuleKind::Kx, shift, 0}; }
ExtremalLabel label_r(int shift) { return ExtremalLabel{ModuleKind::R, shift, 0}; }
ExtremalLabel label_m_power(int t, int shift) { return ExtremalLabel{ModuleKind::MPow, shift, t}; }

void validate(const ExtremalLabel& l) {
    if (l.kind == ModuleKind::MPow && l.t < 1) {
        throw InvalidLabel("m-power label needs t >= 1");
    }
    if (l.kind != ModuleKind::MPow && l.t != 0) {
        throw InvalidLabel("only m-power labels carry an exponent");
    }
}

bool canonical_less(const ExtremalLabel& a, const ExtremalLabel& b) {
    return std::make_tuple(-a.shift, static_cast<int>(a.kind), a.t) <
           std::make_tuple(-b.shift, static_cast<int>(b.kind), b.t);
}

std::string to_string(const ExtremalLabel& l) {
    std::string base;
    switch (l.kind) {
        case ModuleKind::K:
            base = "k";
            break;
        case ModuleKind::Kx:
            base = "k[x]";
            break;
        case ModuleKind::MPow:
            base = "m^" + std::to_string(l.t);
            break;
        case ModuleKind::R:
            base = "k[x,y]";
            break;
    }
    if (l.shift != 0) {
        base += "(" + std::to_string(l.shift) + ")";
    }
    return base;
}

void Decomposition::canonicalize() {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return canonical_less(a.label, b.label);
    });
    std::vector<Term> merged;
    for (auto& term : terms) {
        if (!merged.empty() && merged.back().label == term.label) {
            merged.back().coeff += term.coeff;
        } else {
            merged.push_back(std::move(term));
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    terms = std::move(merged);
}

DeltaTable extremal_table(const ExtremalLabel& l) {
    validate(l);
    GradedMap d0, d1, d2;
    switch (l.kind) {
        case ModuleKind::K:
            d0.set(0, 1);
            break;
        case ModuleKind::Kx:
            d1.set(-1, 1);
            break;
        case ModuleKind::R:
            d2.set(-2, 1);
            break;
        case ModuleKind::MPow:
            // h1 ramps 1..t over [0, t-1], h2 matches the free module.
            d1.set(l.t - 1, l.t);
            for (int n = -1; n <= l.t - 2; ++n) {
                d1.add(n, -1);
            }
            d2.set(-2, 1);
            break;
    }
    return DeltaTable(std::move(d0), std::move(d1), std::move(d2)).shifted(l.shift);
}

GradedMap hilbert_column_cyclic(int t, int a) {
    if (t < 1) {
        throw InvalidLabel("cyclic column needs t >= 1");
    }
    GradedMap column;
    for (int j = 0; j < t; ++j) {
        column.set(a + j, j + 1);
    }
    return column;
}

DeltaTable monomial_ideal_table(const MonomialIdealSpec& spec) {
    int pure_x = std::numeric_limits<int>::max();
    int pure_y = std::numeric_limits<int>::max();
    for (const auto& [i, j] : spec.generators) {
        if (i < 0 || j < 0) {
            throw InvalidSpec("monomial exponents must be nonnegative");
        }
        if (j == 0) {
            pure_x = std::min(pure_x, i);
        }
        if (i == 0) {
            pure_y = std::min(pure_y, j);
        }
    }
    if (pure_x == std::numeric_limits<int>::max() || pure_y == std::numeric_limits<int>::max()) {
        throw NotPrimary("ideal has no pure power of x or of y");
    }

    // Count the staircase complement degree by degree; it is exhausted once
    // both pure powers divide everything.
    GradedMap h1;
    for (int n = 0; n <= pure_x + pure_y - 2; ++n) {
        int count = 0;
        for (int u = 0; u <= n; ++u) {
            const int v = n - u;
            bool divisible = false;
            for (const auto& [gi, gj] : spec.generators) {
                if (u >= gi && v >= gj) {
                    divisible = true;
                    break;
                }
            }
            if (!divisible) {
                ++count;
            }
        }
        h1.set(n, count);
    }

    GradedMap d2;
    d2.set(-2, 1);
    return DeltaTable(GradedMap{}, delta(h1, 1), std::move(d2)).shifted(spec.shift);
}

DeltaTable combine(const std::vector<std::pair<Rational, DeltaTable>>& terms) {
    GradedMap d0, d1, d2;
    for (const auto& [coeff, table] : terms) {
        if (coeff < 0) {
            throw NegativeEntry("combination coefficients must be nonnegative");
        }
        d0 += table.d0().scaled(coeff);
        d1 += table.d1().scaled(coeff);
        d2 += table.d2().scaled(coeff);
    }
    return DeltaTable(std::move(d0), std::move(d1), std::move(d2));
}

}  // namespace lct
