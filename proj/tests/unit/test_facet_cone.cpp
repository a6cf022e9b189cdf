#include <doctest.h>

#include <algorithm>
#include <set>

#include "lct/errors.hpp"
#include "lct/extremal.hpp"
#include "lct/facet_cone.hpp"
#include "lct/greedy.hpp"
#include "test_helpers.hpp"

using namespace lct;

TEST_CASE("functional values on explicit points") {
    for (int s : {-3, 0, 4}) {
        CHECK(eval_functional(functional_phi(s), generator_point(generator_e(2, s))) == 1);
    }

    // Gamma_0(3) seen inside width four.
    CHECK(eval_functional(functional_pi(0, 4), generator_point(generator_gamma(0, 3))) == 3);

    const MPoint gamma = generator_point(generator_gamma(-2, 2));
    CHECK(gamma.rows[1] == GradedMap{{1, 2}, {0, -1}, {-1, -1}});
    CHECK(gamma.rows[2] == GradedMap{{-2, 1}});
    CHECK(eval_functional(functional_tau(0), gamma) == 0);
    CHECK(eval_functional(functional_tau(1), gamma) == 3);
    CHECK(eval_functional(functional_tau(2), gamma) == 1);
}

TEST_CASE("generator points match the printed displays") {
    const MPoint e07 = generator_point(generator_e(0, 7));
    CHECK(e07.rows[0] == GradedMap{{7, 1}});
    CHECK(e07.rows[1].empty());
    CHECK(e07.rows[2].empty());

    const MPoint g01 = generator_point(generator_gamma(0, 1));
    CHECK(g01.rows[1] == GradedMap{{2, 1}, {1, -1}});
    CHECK(g01.rows[2] == GradedMap{{0, 1}});

    CHECK_THROWS_AS(generator_point(generator_gamma(0, 0)), InvalidLabel);
}

TEST_CASE("labels and generators correspond") {
    CHECK(delta_lambda_of(label_k(0)) == generator_e(0, 0));
    CHECK(delta_lambda_of(label_kx(0)) == generator_e(1, -1));
    CHECK(delta_lambda_of(label_r(0)) == generator_e(2, -2));
    CHECK(delta_lambda_of(label_m_power(2, 0)) == generator_gamma(-2, 2));

    testing::Rng rng(9);
    for (int i = 0; i < 80; ++i) {
        const ExtremalLabel l = rng.label();
        const GeneratorId g = delta_lambda_of(l);
        CHECK(label_of_generator(g) == l);
        // The generator point is exactly the difference image of the table.
        CHECK(generator_point(g) == MPoint::from_delta(extremal_table(l)));
    }
}

TEST_CASE("functional list follows the printed index ranges") {
    CHECK(functional_list(4).size() == 21);

    const auto d0 = functional_list(0);
    REQUIRE(d0.size() == 2);
    CHECK(d0[0] == functional_mu(0));
    CHECK(d0[1] == functional_phi(0));

    const auto d1 = functional_list(1);
    REQUIRE(d1.size() == 6);
    CHECK(d1[0] == functional_mu(0));
    CHECK(d1[1] == functional_mu(1));
    CHECK(d1[2] == functional_tau(0));
    CHECK(d1[3] == functional_phi(0));
    CHECK(d1[4] == functional_phi(1));
    CHECK(d1[5] == functional_pi(0, 1));

    for (int d = 0; d <= 8; ++d) {
        const std::size_t expected = static_cast<std::size_t>(4 * d + 2 + (d - 1) * (d - 2) / 2);
        CHECK(functional_list(d).size() == (d == 0 ? 2 : expected));
    }
}

TEST_CASE("membership accepts generators and reports first violations") {
    testing::Rng rng(15);
    for (int i = 0; i < 50; ++i) {
        CHECK(!membership(MPoint::from_delta(extremal_table(rng.label()))));
    }

    MPoint negative;
    negative.set(1, 0, -1);
    const auto violation = membership(negative);
    REQUIRE(violation.has_value());
    CHECK(violation->functional == functional_tau(0));
    CHECK(violation->value == -1);

    // A gamma with its corner mass removed fails on the shifted tau.
    MPoint stripped = generator_point(generator_gamma(0, 2));
    stripped.set(2, 0, 0);
    const auto v2 = membership(stripped);
    REQUIRE(v2.has_value());
    CHECK(v2->functional == functional_tau(1));
    CHECK(v2->value == -1);

    CHECK(!membership(MPoint{}));
}

TEST_CASE("membership and facet decomposition commute with shifts") {
    testing::Rng rng(21);
    for (int i = 0; i < 30; ++i) {
        const MPoint a = rng.cone_point(5);
        const int shift = rng.uniform(-4, 4);
        CHECK(!membership(a));
        CHECK(!membership(a.shifted(shift)));

        auto terms = facet_decompose(a);
        auto shifted_terms = facet_decompose(a.shifted(shift));
        REQUIRE(terms.size() == shifted_terms.size());
        for (auto& [coeff, generator] : terms) {
            (void)coeff;
            generator.s -= shift;
        }
        // Same multiset after undoing the shift.
        auto key = [](const std::pair<Rational, GeneratorId>& t) {
            return std::make_tuple(t.second.kind, t.second.i, t.second.s, t.second.n,
                                   t.first);
        };
        std::sort(terms.begin(), terms.end(),
                  [&](const auto& x, const auto& y) { return key(x) < key(y); });
        std::sort(shifted_terms.begin(), shifted_terms.end(),
                  [&](const auto& x, const auto& y) { return key(x) < key(y); });
        CHECK(terms == shifted_terms);
    }

    MPoint negative;
    negative.set(1, 3, -1);
    const auto violation = membership(negative);
    REQUIRE(violation.has_value());
    CHECK(violation->functional == functional_tau(3));
}

TEST_CASE("facet decomposition on single generators") {
    const auto e2 = facet_decompose(generator_point(generator_e(2, 4)));
    REQUIRE(e2.size() == 1);
    CHECK(e2[0].first == 1);
    CHECK(e2[0].second == generator_e(2, 4));

    const auto gamma = facet_decompose(generator_point(generator_gamma(0, 1)));
    REQUIRE(gamma.size() == 1);
    CHECK(gamma[0].first == 1);
    CHECK(gamma[0].second == generator_gamma(0, 1));
}

TEST_CASE("facet decomposition of the quadrant ideal image") {
    MonomialIdealSpec spec;
    spec.generators = {{2, 0}, {0, 2}};
    const MPoint point = MPoint::from_delta(monomial_ideal_table(spec));
    const auto terms = facet_decompose(point);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].first == Rational(1) / 3);
    CHECK(terms[0].second == generator_gamma(-2, 3));
    CHECK(terms[1].first == Rational(2) / 3);
    CHECK(terms[1].second == generator_gamma(-2, 2));
    CHECK(recombine_generators(terms) == point);
}

TEST_CASE("facet decomposition recombines random cone points exactly") {
    testing::Rng rng(33);
    for (int i = 0; i < 120; ++i) {
        const MPoint a = rng.cone_point(rng.uniform(1, 6));
        const auto terms = facet_decompose(a);
        CHECK(recombine_generators(terms) == a);
        for (const auto& [coeff, generator] : terms) {
            (void)generator;
            CHECK(coeff > 0);
        }
    }
}

TEST_CASE("facet decomposition rejects points outside the cone") {
    MPoint bad;
    bad.set(1, 0, -1);
    CHECK_THROWS_AS(facet_decompose(bad), NotInCone);
}

TEST_CASE("a gamma stacked on a corner still empties completely") {
    // The final loop subtraction clears the top of row one; the remaining
    // corner mass must come off through the shrunken window.
    MPoint a = generator_point(generator_gamma(0, 1));
    a.add_scaled(generator_point(generator_e(2, 0)), 1);
    const auto terms = facet_decompose(a);
    CHECK(recombine_generators(terms) == a);
}

TEST_CASE("both decomposition routes agree on module tables") {
    testing::Rng rng(47);
    for (int i = 0; i < 40; ++i) {
        const DeltaTable table = recombine(rng.combo(6, /*integer_coeffs=*/true));
        const MPoint point = MPoint::from_delta(table);
        CHECK(!membership(point));

        const Decomposition greedy_dec = decompose(table);
        MPoint via_greedy;
        for (const auto& term : greedy_dec.terms) {
            via_greedy.add_scaled(generator_point(delta_lambda_of(term.label)), term.coeff);
        }
        const auto facet_terms = facet_decompose(point);
        CHECK(via_greedy == point);
        CHECK(recombine_generators(facet_terms) == point);
    }
}

TEST_CASE("pi values on the gamma generators follow the closed form") {
    for (int d = 1; d <= 8; ++d) {
        for (int k = 1; k <= d - 1; ++k) {
            const MPoint gamma = generator_point(generator_gamma(d - 1 - k, k));
            for (const FunctionalId& f : functional_list(d)) {
                if (f.kind != FunctionalId::Kind::Pi) {
                    continue;
                }
                const Rational expected = std::max(Rational(0), Rational(f.s - d + k));
                CHECK(eval_functional(f, gamma) == expected);
            }
        }
    }
}

TEST_CASE("triangular identities hold on arbitrary points") {
    testing::Rng rng(63);
    for (int i = 0; i < 60; ++i) {
        MPoint a;
        for (int j = rng.uniform(0, 12); j > 0; --j) {
            a.set(rng.uniform(0, 2), rng.uniform(-6, 10), rng.signed_rational(9, 4));
        }
        for (int idx = 0; idx <= 5; ++idx) {
            for (int k = 1; k <= 4; ++k) {
                const Rational lhs = eval_functional(functional_phi(idx), a) +
                                     2 * eval_functional(functional_pi(k, idx + 1), a);
                const Rational rhs = eval_functional(functional_pi(k + 1, idx), a) +
                                     eval_functional(functional_pi(k - 1, idx + 2), a);
                CHECK(lhs == rhs);
            }
            const Rational lhs0 = eval_functional(functional_phi(idx), a) +
                                  2 * eval_functional(functional_pi(0, idx + 1), a);
            const Rational rhs0 = eval_functional(functional_pi(1, idx), a) +
                                  eval_functional(functional_pi(0, idx + 2), a);
            CHECK(lhs0 == rhs0);
        }
    }
}

TEST_CASE("restriction identity on points with empty top column") {
    // For points supported in [0, e], the out-of-range pi functionals from
    // the next window split into the listed ones.
    testing::Rng rng(71);
    for (int i = 0; i < 60; ++i) {
        const int e = rng.uniform(2, 7);
        MPoint a;
        for (int j = rng.uniform(1, 12); j > 0; --j) {
            a.set(rng.uniform(0, 2), rng.uniform(0, e), rng.signed_rational(9, 4));
        }
        for (int n = 1; n <= e; ++n) {
            const Rational lhs = eval_functional(functional_pi(n, e - n), a);
            Rational rhs = Rational(n + 1) * eval_functional(functional_pi(0, e), a);
            for (int j = 1; j <= n; ++j) {
                rhs += Rational(j) * eval_functional(functional_phi(e - 1 - n + j), a);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("incidence data for small windows") {
    const Incidence d0 = incidence(0);
    REQUIRE(d0.rays.size() == 3);
    REQUIRE(d0.facets.size() == 2);
    const auto e10 = std::find(d0.rays.begin(), d0.rays.end(), generator_e(1, 0));
    REQUIRE(e10 != d0.rays.end());
    const auto& row = d0.vanishes[static_cast<std::size_t>(e10 - d0.rays.begin())];
    CHECK(std::count(row.begin(), row.end(), true) == 2);

    for (int d = 2; d <= 8; ++d) {
        const Incidence data = incidence(d);
        CHECK(data.rays.size() == data.facets.size());
        CHECK(data.rays.size() ==
              static_cast<std::size_t>(3 * (d + 1) + d * (d - 1) / 2));
    }
}

TEST_CASE("the width-four incidence asymmetry") {
    const Incidence data = incidence(4);
    REQUIRE(data.rays.size() == 21);
    REQUIRE(data.facets.size() == 21);

    std::vector<std::size_t> facet_counts(data.facets.size(), 0);
    std::vector<std::size_t> ray_counts(data.rays.size(), 0);
    for (std::size_t r = 0; r < data.rays.size(); ++r) {
        for (std::size_t f = 0; f < data.facets.size(); ++f) {
            if (data.vanishes[r][f]) {
                ++ray_counts[r];
                ++facet_counts[f];
            }
        }
    }

    std::vector<FunctionalId> heavy_facets;
    for (std::size_t f = 0; f < data.facets.size(); ++f) {
        if (facet_counts[f] == 14) {
            heavy_facets.push_back(data.facets[f]);
        }
    }
    REQUIRE(heavy_facets.size() == 1);
    CHECK(heavy_facets[0] == functional_tau(3));

    std::vector<GeneratorId> heavy_rays;
    for (std::size_t r = 0; r < data.rays.size(); ++r) {
        if (ray_counts[r] == 14) {
            heavy_rays.push_back(data.rays[r]);
        }
    }
    REQUIRE(heavy_rays.size() == 2);
    CHECK(std::count(heavy_rays.begin(), heavy_rays.end(), generator_e(1, 3)) == 1);
    CHECK(std::count(heavy_rays.begin(), heavy_rays.end(), generator_e(1, 4)) == 1);
}

TEST_CASE("functionals are nonnegative on every generator in the window") {
    for (int d = 0; d <= 6; ++d) {
        const Incidence data = incidence(d);
        for (const GeneratorId& ray : data.rays) {
            const MPoint p = generator_point(ray);
            for (const FunctionalId& f : data.facets) {
                CHECK(eval_functional(f, p) >= 0);
            }
        }
    }
}

TEST_CASE("extremality ranks") {
    const Incidence data = incidence(4);
    for (const GeneratorId& ray : data.rays) {
        CHECK(extremality_rank(ray, 4) == 14);
    }

    CHECK(extremality_rank(generator_e(0, 0), 0) == 1);

    // On the zero point every functional vanishes; the forms span the whole
    // window space once enough of them exist.
    for (int d = 0; d <= 4; ++d) {
        const int expected =
            std::min(static_cast<int>(functional_list(d).size()), 3 * (d + 1));
        CHECK(extremality_rank(MPoint{}, d) == expected);
    }
}

TEST_CASE("conversion between points and tables") {
    testing::Rng rng(83);
    for (int i = 0; i < 30; ++i) {
        const DeltaTable t = recombine(rng.combo(5));
        CHECK(MPoint::from_delta(t).to_delta() == t);
    }
    MPoint invalid;
    invalid.set(0, 0, -1);
    CHECK_THROWS_AS(invalid.to_delta(), NegativeEntry);
}
