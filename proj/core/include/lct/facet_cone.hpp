#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lct/delta_table.hpp"
#include "lct/extremal.hpp"
#include "lct/graded_map.hpp"

namespace lct {

/// A point of the matrix space: three finitely supported rows indexed by
/// degree. Row i carries the i-th difference column of a table, so valid
/// tables and arbitrary test points share one representation.
struct MPoint {
    std::array<GradedMap, 3> rows;

    static MPoint from_delta(const DeltaTable& t);
    /// Throws NegativeEntry when the point is not the image of a valid table.
    DeltaTable to_delta() const;

    Rational value(int i, int n) const { return rows[static_cast<std::size_t>(i)].value(n); }
    void set(int i, int n, Rational v) { rows[static_cast<std::size_t>(i)].set(n, std::move(v)); }
    void add_scaled(const MPoint& other, const Rational& c);
    MPoint shifted(int a) const;
    bool is_zero() const;
    std::optional<std::pair<int, int>> support_hull() const;

    bool operator==(const MPoint&) const = default;
};

/// One of the four families of facet functionals.
struct FunctionalId {
    enum class Kind { Mu, Tau, Phi, Pi };

    Kind kind = Kind::Mu;
    int s = 0;
    int n = 0;  // Pi only, n >= 0

    bool operator==(const FunctionalId&) const = default;
};

FunctionalId functional_mu(int s);
FunctionalId functional_tau(int s);
FunctionalId functional_phi(int s);
FunctionalId functional_pi(int n, int s);
std::string to_string(const FunctionalId& f);

/// One of the two families of cone generators in difference coordinates.
struct GeneratorId {
    enum class Kind { E, Gamma };

    Kind kind = Kind::E;
    int i = 0;  // E row index
    int s = 0;
    int n = 0;  // Gamma only, n >= 1

    bool operator==(const GeneratorId&) const = default;
};

GeneratorId generator_e(int i, int s);
GeneratorId generator_gamma(int s, int n);
std::string to_string(const GeneratorId& g);

/// Exact value of the functional on the point; the sums truncate to the
/// finite support.
Rational eval_functional(const FunctionalId& f, const MPoint& a);

MPoint generator_point(const GeneratorId& g);

/// The difference image of an extremal table, as a generator id, and back.
GeneratorId delta_lambda_of(const ExtremalLabel& l);
ExtremalLabel label_of_generator(const GeneratorId& g);

/// The printed list of functionals cutting the cone on the window [0, d],
/// in canonical order: mu, tau, phi, pi_0, then the higher pi block by
/// ascending s then ascending n.
std::vector<FunctionalId> functional_list(int d);

struct Violation {
    FunctionalId functional;
    Rational value;
};

/// Cone membership test. The support is shift-normalized into a window
/// [0, d] (d at least one, so the degenerate width-zero case still sees the
/// full inequality set), every listed functional is evaluated, and the first
/// negative one in canonical order is returned with its indices translated
/// back to the caller's degrees. nullopt means the point lies in the cone.
std::optional<Violation> membership(const MPoint& a);

/// Facet-side greedy decomposition into generators. Requires membership
/// (throws NotInCone otherwise); the returned terms recombine to the input
/// exactly.
std::vector<std::pair<Rational, GeneratorId>> facet_decompose(const MPoint& a);

MPoint recombine_generators(const std::vector<std::pair<Rational, GeneratorId>>& terms);

/// Ray/facet incidence data on the window [0, d]: all generators supported
/// in the window, the printed functional list, and the boolean matrix of
/// exact vanishing.
struct Incidence {
    int d = 0;
    std::vector<GeneratorId> rays;
    std::vector<FunctionalId> facets;
    std::vector<std::vector<bool>> vanishes;  // rays x facets
};

Incidence incidence(int d);

/// Rank over the rationals of the functionals vanishing on the point,
/// viewed as linear forms on the 3(d+1)-dimensional window space. A point on
/// an extremal ray vanishes on forms of corank one.
int extremality_rank(const MPoint& p, int d);
int extremality_rank(const GeneratorId& g, int d);

}  // namespace lct
