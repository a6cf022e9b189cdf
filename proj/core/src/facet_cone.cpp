#include "lct/facet_cone.hpp"

#include <algorithm>
#include <stdexcept>

#include "lct/errors.hpp"

namespace lct {

MPoint MPoint::from_delta(const DeltaTable& t) {
    MPoint p;
    p.rows = {t.d0(), t.d1(), t.d2()};
    return p;
}

DeltaTable MPoint::to_delta() const { return DeltaTable(rows[0], rows[1], rows[2]); }

void MPoint::add_scaled(const MPoint& other, const Rational& c) {
    for (std::size_t i = 0; i < 3; ++i) {
        rows[i] += other.rows[i].scaled(c);
    }
}

MPoint MPoint::shifted(int a) const {
    MPoint out;
    for (std::size_t i = 0; i < 3; ++i) {
        out.rows[i] = rows[i].shifted(a);
    }
    return out;
}

bool MPoint::is_zero() const { return rows[0].empty() && rows[1].empty() && rows[2].empty(); }

std::optional<std::pair<int, int>> MPoint::support_hull() const {
    std::optional<int> lo, hi;
    for (const auto& row : rows) {
        if (auto mn = row.min_degree()) {
            lo = lo ? std::min(*lo, *mn) : *mn;
        }
        if (auto mx = row.max_degree()) {
            hi = hi ? std::max(*hi, *mx) : *mx;
        }
    }
    if (!lo) {
        return std::nullopt;
    }
    return std::make_pair(*lo, *hi);
}

FunctionalId functional_mu(int s) { return FunctionalId{FunctionalId::Kind::Mu, s, 0}; }
FunctionalId functional_tau(int s) { return FunctionalId{FunctionalId::Kind::Tau, s, 0}; }
FunctionalId functional_phi(int s) { return FunctionalId{FunctionalId::Kind::Phi, s, 0}; }
FunctionalId functional_pi(int n, int s) { return FunctionalId{FunctionalId::Kind::Pi, s, n}; }

std::string to_string(const FunctionalId& f) {
    switch (f.kind) {
        case FunctionalId::Kind::Mu:
            return "mu_" + std::to_string(f.s);
        case FunctionalId::Kind::Tau:
            return "tau_" + std::to_string(f.s);
        case FunctionalId::Kind::Phi:
            return "phi_" + std::to_string(f.s);
        case FunctionalId::Kind::Pi:
            return "pi_{" + std::to_string(f.n) + "," + std::to_string(f.s) + "}";
    }
    return {};
}

GeneratorId generator_e(int i, int s) { return GeneratorId{GeneratorId::Kind::E, i, s, 0}; }
GeneratorId generator_gamma(int s, int n) { return GeneratorId{GeneratorId::Kind::Gamma, 0, s, n}; }

std::string to_string(const GeneratorId& g) {
    if (g.kind == GeneratorId::Kind::E) {
        return "E_{" + std::to_string(g.i) + "," + std::to_string(g.s) + "}";
    }
    return "Gamma_" + std::to_string(g.s) + "(" + std::to_string(g.n) + ")";
}

Rational eval_functional(const FunctionalId& f, const MPoint& a) {
    switch (f.kind) {
        case FunctionalId::Kind::Mu:
            return a.value(0, f.s);
        case FunctionalId::Kind::Phi:
            return a.value(2, f.s);
        case FunctionalId::Kind::Tau: {
            Rational sum = a.value(1, f.s);
            for (const auto& [n, v] : a.rows[2].entries()) {
                if (n <= f.s - 1) {
                    sum += v;
                }
            }
            return sum;
        }
        case FunctionalId::Kind::Pi: {
            if (f.n < 0) {
                throw std::invalid_argument("pi functional needs n >= 0");
            }
            Rational sum = 0;
            for (auto it = a.rows[1].entries().upper_bound(f.s + f.n);
                 it != a.rows[1].entries().end(); ++it) {
                sum += it->second;
            }
            sum += Rational(f.n + 1) * a.value(1, f.s + f.n);
            for (int i = 0; i < f.n; ++i) {
                sum += Rational(i + 1) * a.value(2, f.s + i);
            }
            return sum;
        }
    }
    throw std::logic_error("unknown functional kind");
}

MPoint generator_point(const GeneratorId& g) {
    MPoint p;
    if (g.kind == GeneratorId::Kind::E) {
        if (g.i < 0 || g.i > 2) {
            throw InvalidLabel("elementary generator row must be 0, 1 or 2");
        }
        p.set(g.i, g.s, 1);
        return p;
    }
    if (g.n < 1) {
        throw InvalidLabel("gamma generator needs n >= 1");
    }
    p.set(1, g.s + g.n + 1, g.n);
    for (int j = g.s + 1; j <= g.s + g.n; ++j) {
        p.set(1, j, -1);
    }
    p.set(2, g.s, 1);
    return p;
}

GeneratorId delta_lambda_of(const ExtremalLabel& l) {
    validate(l);
    switch (l.kind) {
        case ModuleKind::K:
            return generator_e(0, -l.shift);
        case ModuleKind::Kx:
            return generator_e(1, -l.shift - 1);
        case ModuleKind::R:
            return generator_e(2, -l.shift - 2);
        case ModuleKind::MPow:
            return generator_gamma(-l.shift - 2, l.t);
    }
    throw std::logic_error("unknown module kind");
}

ExtremalLabel label_of_generator(const GeneratorId& g) {
    if (g.kind == GeneratorId::Kind::Gamma) {
        if (g.n < 1) {
            throw InvalidLabel("gamma generator needs n >= 1");
        }
        return label_m_power(g.n, -g.s - 2);
    }
    switch (g.i) {
        case 0:
            return label_k(-g.s);
        case 1:
            return label_kx(-g.s - 1);
        case 2:
            return label_r(-g.s - 2);
        default:
            throw InvalidLabel("elementary generator row must be 0, 1 or 2");
    }
}

std::vector<FunctionalId> functional_list(int d) {
    if (d < 0) {
        throw std::invalid_argument("window width must be nonnegative");
    }
    std::vector<FunctionalId> list;
    for (int s = 0; s <= d; ++s) {
        list.push_back(functional_mu(s));
    }
    for (int s = 0; s < d; ++s) {
        list.push_back(functional_tau(s));
    }
    for (int s = 0; s <= d; ++s) {
        list.push_back(functional_phi(s));
    }
    for (int s = 1; s <= d; ++s) {
        list.push_back(functional_pi(0, s));
    }
    for (int s = 1; s <= d - 2; ++s) {
        for (int n = 1; n <= d - s - 1; ++n) {
            list.push_back(functional_pi(n, s));
        }
    }
    return list;
}

std::optional<Violation> membership(const MPoint& a) {
    auto hull = a.support_hull();
    if (!hull) {
        return std::nullopt;
    }
    const int lo = hull->first;
    // A window of width at least one, so the degenerate single-degree case
    // still sees the full inequality set.
    const int d = std::max(hull->second - lo, 1);
    const MPoint b = a.shifted(lo);
    for (const FunctionalId& f : functional_list(d)) {
        const Rational v = eval_functional(f, b);
        if (v < 0) {
            FunctionalId reported = f;
            reported.s += lo;
            return Violation{reported, v};
        }
    }
    return std::nullopt;
}

std::vector<std::pair<Rational, GeneratorId>> facet_decompose(const MPoint& input) {
    if (auto violation = membership(input)) {
        throw NotInCone("point violates " + to_string(violation->functional) + " = " +
                        lct::to_string(violation->value));
    }
    std::vector<std::pair<Rational, GeneratorId>> out;
    auto hull = input.support_hull();
    if (!hull) {
        return out;
    }
    const int lo = hull->first;
    const int d = std::max(hull->second - lo, 1);
    MPoint a = input.shifted(lo);

    auto take = [&](int row, int s) {
        const Rational v = a.value(row, s);
        if (v != 0) {
            a.set(row, s, 0);
            out.emplace_back(v, generator_e(row, s));
        }
    };

    // Top corner and the whole zeroth row come off as elementary generators.
    take(2, d);
    for (int i = 0; i <= d; ++i) {
        take(0, i);
    }

    int w = d;
    while (w > 0) {
        take(2, w - 1);
        int k = 1;
        while (true) {
            if (a.value(1, w) == 0) {
                // Column w is exhausted; shrink the window. This check comes
                // before the loop-bound check so a final subtraction that
                // clears the column still shrinks instead of stranding the
                // remaining low-degree mass.
                --w;
                break;
            }
            if (k == w) {
                // Loop exhausted with mass left at the top of row one; all
                // of row two is gone and only elementary row-one generators
                // remain.
                w = 0;
                break;
            }
            Rational m = eval_functional(functional_phi(w - 1 - k), a);
            for (int s = w + 1 - k; s <= w; ++s) {
                const int n_max = std::max(0, std::min(k - 2, w - s - 1));
                for (int n = 0; n <= n_max; ++n) {
                    const Rational q =
                        eval_functional(functional_pi(n, s), a) / Rational(s - w + k);
                    m = std::min(m, q);
                }
            }
            if (m < 0) {
                throw std::logic_error("facet decomposition left the cone");
            }
            if (m > 0) {
                const GeneratorId gamma = generator_gamma(w - 1 - k, k);
                a.add_scaled(generator_point(gamma), -m);
                out.emplace_back(m, gamma);
            }
            ++k;
        }
    }

    for (int i = 0; i <= d; ++i) {
        const Rational v = a.value(1, i);
        if (v < 0) {
            throw std::logic_error("facet decomposition produced a negative residue");
        }
        if (v > 0) {
            a.set(1, i, 0);
            out.emplace_back(v, generator_e(1, i));
        }
    }
    if (!a.is_zero()) {
        throw std::logic_error("facet decomposition left a nonzero residue");
    }

    for (auto& [coeff, generator] : out) {
        (void)coeff;
        generator.s += lo;
    }
    return out;
}

MPoint recombine_generators(const std::vector<std::pair<Rational, GeneratorId>>& terms) {
    MPoint sum;
    for (const auto& [coeff, generator] : terms) {
        sum.add_scaled(generator_point(generator), coeff);
    }
    return sum;
}

Incidence incidence(int d) {
    Incidence data;
    data.d = d;
    for (int i = 0; i <= 2; ++i) {
        for (int s = 0; s <= d; ++s) {
            data.rays.push_back(generator_e(i, s));
        }
    }
    for (int s = 0; s <= d - 2; ++s) {
        for (int n = 1; s + n + 1 <= d; ++n) {
            data.rays.push_back(generator_gamma(s, n));
        }
    }
    data.facets = functional_list(d);
    data.vanishes.reserve(data.rays.size());
    for (const GeneratorId& ray : data.rays) {
        const MPoint p = generator_point(ray);
        std::vector<bool> row;
        row.reserve(data.facets.size());
        for (const FunctionalId& facet : data.facets) {
            row.push_back(eval_functional(facet, p) == 0);
        }
        data.vanishes.push_back(std::move(row));
    }
    return data;
}

namespace {

/// Coefficient vector of a functional on the window space, coordinates
/// indexed by (row, degree) -> row * (d + 1) + degree.
std::vector<Rational> functional_coefficients(const FunctionalId& f, int d) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(3 * (d + 1)), Rational(0));
    auto at = [&](int row, int degree) -> Rational& {
        return coeffs[static_cast<std::size_t>(row * (d + 1) + degree)];
    };
    switch (f.kind) {
        case FunctionalId::Kind::Mu:
            at(0, f.s) = 1;
            break;
        case FunctionalId::Kind::Phi:
            at(2, f.s) = 1;
            break;
        case FunctionalId::Kind::Tau:
            at(1, f.s) = 1;
            for (int i = 0; i <= std::min(f.s - 1, d); ++i) {
                at(2, i) = 1;
            }
            break;
        case FunctionalId::Kind::Pi:
            for (int i = f.s + f.n + 1; i <= d; ++i) {
                at(1, i) += 1;
            }
            if (f.s + f.n <= d) {
                at(1, f.s + f.n) += f.n + 1;
            }
            for (int i = 0; i < f.n; ++i) {
                if (f.s + i <= d) {
                    at(2, f.s + i) += i + 1;
                }
            }
            break;
    }
    return coeffs;
}

int rank_of(std::vector<std::vector<Rational>> rows) {
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        std::size_t pivot = pivot_row;
        while (pivot < rows.size() && rows[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[pivot_row]);
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][col] != 0) {
                const Rational factor = rows[r][col] / rows[pivot_row][col];
                for (std::size_t c = col; c < cols; ++c) {
                    rows[r][c] -= factor * rows[pivot_row][c];
                }
            }
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

}  // namespace

int extremality_rank(const MPoint& p, int d) {
    if (auto hull = p.support_hull()) {
        if (hull->first < 0 || hull->second > d) {
            throw std::invalid_argument("point is not supported in the window");
        }
    }
    std::vector<std::vector<Rational>> vanishing;
    for (const FunctionalId& f : functional_list(d)) {
        if (eval_functional(f, p) == 0) {
            vanishing.push_back(functional_coefficients(f, d));
        }
    }
    return rank_of(std::move(vanishing));
}

int extremality_rank(const GeneratorId& g, int d) { return extremality_rank(generator_point(g), d); }

}  // namespace lct
