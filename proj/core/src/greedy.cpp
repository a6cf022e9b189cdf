#include "lct/greedy.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "lct/errors.hpp"
#include "lct/hilbert_decomp.hpp"

namespace lct {

namespace {

/// One pass of the m-power extraction at base degree a. Takes the capped
/// column below h1 scaled by c, decomposes it into cyclic columns and
/// subtracts the matching extremal tables: h1 drops by the column, the
/// second-difference mass at a - 2 drops by exactly c.
void extract_power_terms(GradedMap& d1, GradedMap& d2, int a, const Rational& c,
                         std::vector<Decomposition::Term>& terms) {
    GradedMap capped;
    int top = *d1.max_degree();
    for (int n = a; n <= top; ++n) {
        const Rational h = h_from_d1(d1, n);
        if (h < 0) {
            throw NotInCone("first column reconstructs to a negative value");
        }
        const Rational k = std::min(h, Rational(n - a + 1) * c);
        if (k == 0) {
            break;
        }
        capped.set(n, k);
    }
    auto solved = cyclic_column_combination(capped, a);
    if (!solved) {
        throw NotInCone("extracted column is not a nonnegative sum of cyclic columns");
    }
    for (const auto& [r, t] : *solved) {
        terms.push_back({r, label_m_power(t, -a)});
    }
    d1 -= delta(capped, 1);
    d2.add(a - 2, -c);
}

}  // namespace

Decomposition decompose(const DeltaTable& table) {
    GradedMap d1 = table.d1();
    GradedMap d2 = table.d2();
    std::vector<Decomposition::Term> terms;

    // Step 1: the zeroth column splits off one residue-field table per unit.
    for (const auto& [n, v] : table.d0().entries()) {
        terms.push_back({v, label_k(-n)});
    }

    // Steps 2 and 3: clear the second-difference mass from the top down.
    while (!d2.empty()) {
        const int top = *d2.max_degree();
        const int a = top + 2;
        const Rational v = d2.value(top);
        if (v < 0) {
            throw NotInCone("negative second-difference mass");
        }
        const Rational h1a = h_from_d1(d1, a);
        if (h1a < 0) {
            throw NotInCone("first column reconstructs to a negative value");
        }
        if (h1a == 0) {
            // Free summand: nothing to pair the mass with in the first column.
            terms.push_back({v, label_r(-a)});
            d2.set(top, 0);
            continue;
        }
        // Module tables always take c = 1 here; the scale only drops below
        // one on rational cone points, where a unit extraction would remove
        // more mass than the point carries.
        const Rational c = std::min(std::min(h1a, v), Rational(1));
        extract_power_terms(d1, d2, a, c, terms);
    }

    // Step 4: the monotone residue splits into dimension-one tables.
    while (!d1.empty()) {
        const int n = *d1.max_degree();
        const Rational w = d1.value(n);
        if (w < 0) {
            throw NotInCone("first-column residue is not monotone");
        }
        terms.push_back({w, label_kx(-n - 1)});
        d1.set(n, 0);
    }

    Decomposition dec{std::move(terms)};
    dec.canonicalize();
    if (!(recombine(dec) == table)) {
        throw std::logic_error("greedy decomposition failed to recombine exactly");
    }
    return dec;
}

DeltaTable recombine(const Decomposition& dec) {
    std::vector<std::pair<Rational, DeltaTable>> tables;
    tables.reserve(dec.terms.size());
    for (const auto& term : dec.terms) {
        tables.emplace_back(term.coeff, extremal_table(term.label));
    }
    return combine(tables);
}

}  // namespace lct
