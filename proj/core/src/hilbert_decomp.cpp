#include "lct/hilbert_decomp.hpp"

#include <stdexcept>

#include "lct/errors.hpp"

namespace lct {

bool star_condition(const GradedMap& column, int a, int b) {
    if (a > b || !column.all_nonnegative()) {
        return false;
    }
    auto lo = column.min_degree();
    auto hi = column.max_degree();
    if (!lo || *lo != a || *hi != b) {
        return false;
    }
    for (int n = a; n <= b; ++n) {
        if (column.value(n) == 0) {
            return false;
        }
    }
    const Rational ha = column.value(a);
    for (int n = a + 1; n <= b; ++n) {
        const Rational prev = column.value(n - 1);
        const Rational cur = column.value(n);
        const Rational prev_cap = Rational(n - a) * ha;
        if (prev == prev_cap) {
            if (cur > Rational(n - a + 1) * ha) {
                return false;
            }
        } else if (prev < prev_cap) {
            if (cur > prev * ha) {
                return false;
            }
        }
        // A previous value above its cap is not constrained as written; the
        // decomposition routine rejects such columns through the sign of the
        // solved coefficients instead.
    }
    return true;
}

std::optional<std::vector<std::pair<Rational, int>>> cyclic_column_combination(
    const GradedMap& column, int a) {
    std::vector<std::pair<Rational, int>> result;
    if (column.empty()) {
        return result;
    }
    if (*column.min_degree() < a) {
        return std::nullopt;
    }
    const int s = *column.max_degree() - a;
    // r_s = d_s/(s+1), r_i = d_i/(i+1) - d_{i+1}/(i+2); an internal zero or
    // a growth violation surfaces as a negative coefficient.
    for (int i = s; i >= 0; --i) {
        Rational r = column.value(a + i) / Rational(i + 1);
        if (i < s) {
            r -= column.value(a + i + 1) / Rational(i + 2);
        }
        if (r < 0) {
            return std::nullopt;
        }
        if (r > 0) {
            result.emplace_back(r, i + 1);
        }
    }
    return result;
}

namespace {

/// Stepwise peeling: repeatedly remove the top-degree multiple of the full
/// ramp column. Used as an independent cross-check of the back-substitution.
std::vector<std::pair<Rational, int>> peel_stepwise(const GradedMap& column, int a) {
    std::vector<std::pair<Rational, int>> result;
    GradedMap cur = column;
    while (!cur.empty()) {
        const int b = *cur.max_degree();
        const int width = b - a + 1;
        if (width < 1) {
            throw std::logic_error("stepwise peeling ran below the base degree");
        }
        const Rational r = cur.value(b) / Rational(width);
        for (int j = 0; j < width; ++j) {
            cur.add(a + j, -r * Rational(j + 1));
        }
        if (r < 0 || !cur.all_nonnegative()) {
            throw std::logic_error("stepwise peeling left the nonnegative orthant");
        }
        result.emplace_back(r, width);
    }
    return result;
}

}  // namespace

std::vector<std::pair<Rational, int>> decompose_finite_length(const GradedMap& column, int a,
                                                              int b) {
    if (!star_condition(column, a, b)) {
        throw NotStarShaped("column fails the growth conditions on the given window");
    }
    auto solved = cyclic_column_combination(column, a);
    if (!solved) {
        throw NotStarShaped("no nonnegative combination of cyclic columns exists");
    }

    // Cross-check against the stepwise peeling route.
    auto peeled = peel_stepwise(column, a);
    if (peeled != *solved) {
        throw std::logic_error("finite-length decomposition routes disagree");
    }

    // Verify the recombination exactly.
    GradedMap rebuilt;
    for (const auto& [r, t] : *solved) {
        for (int j = 0; j < t; ++j) {
            rebuilt.add(a + j, r * Rational(j + 1));
        }
    }
    if (!(rebuilt == column)) {
        throw std::logic_error("finite-length decomposition failed to recombine");
    }
    return *solved;
}

GradedMap max_admissible(const GradedMap& column, int a) {
    GradedMap out;
    for (const auto& [n, v] : column.entries()) {
        if (n < a) {
            continue;
        }
        out.set(n, std::min(v, Rational(n - a + 1)));
    }
    return out;
}

GradedMap truncation(const GradedMap& column, const std::vector<int>& degrees) {
    GradedMap out = column;
    for (int degree : degrees) {
        out.add(degree, -1);
    }
    return out;
}

AdmissibleWitness::AdmissibleWitness(GradedMap column_in, int gen_degree_in, int top_degree_in)
    : column(std::move(column_in)), gen_degree(gen_degree_in), top_degree(top_degree_in) {
    if (!star_condition(column, gen_degree, top_degree)) {
        throw std::invalid_argument("admissible witness fails the growth conditions");
    }
    if (column.value(gen_degree) != 1) {
        throw std::invalid_argument("admissible witness must have value one at its base degree");
    }
}

namespace {

bool strictly_increasing_interval(const GradedMap& z, int top) {
    // Support must be an interval [a'', top] with strictly increasing values.
    if (z.empty()) {
        return true;
    }
    if (*z.max_degree() != top) {
        return false;
    }
    const int lo = *z.min_degree();
    Rational prev = 0;
    for (int n = lo; n <= top; ++n) {
        const Rational v = z.value(n);
        if (v <= prev) {
            return false;
        }
        prev = v;
    }
    return true;
}

}  // namespace

std::pair<GradedMap, GradedMap> subtract_admissible(const AdmissibleWitness& u,
                                                    const GradedMap& v) {
    const int a = u.gen_degree;
    const int b = u.top_degree;
    if (v.empty()) {
        return {u.column, GradedMap{}};
    }
    if (!v.all_nonnegative()) {
        throw HypothesesViolated("subtrahend has a negative entry");
    }
    const int a_prime = *v.min_degree();
    if (a_prime < a || *v.max_degree() > b) {
        throw HypothesesViolated("subtrahend support must lie in the witness window");
    }
    Rational prev = 0;
    for (int n = a_prime; n <= b; ++n) {
        const Rational vn = v.value(n);
        if (vn > Rational(n - a + 1)) {
            throw HypothesesViolated("subtrahend exceeds the admissible cap");
        }
        if (vn <= prev) {
            throw HypothesesViolated("subtrahend must increase strictly up to the top degree");
        }
        prev = vn;
    }

    GradedMap w, z;
    for (int n = a; n <= b; ++n) {
        const Rational diff = u.column.value(n) - v.value(n);
        if (diff > 0) {
            w.set(n, diff);
        } else if (diff < 0) {
            z.set(n, -diff);
        }
    }

    if (!w.empty() && !star_condition(w, *w.min_degree(), *w.max_degree())) {
        throw std::logic_error("clipped difference is not admissible");
    }
    if (!strictly_increasing_interval(z, b)) {
        throw std::logic_error("clipped excess is neither zero nor strictly increasing");
    }
    return {std::move(w), std::move(z)};
}

}  // namespace lct
