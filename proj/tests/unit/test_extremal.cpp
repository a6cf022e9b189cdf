#include <doctest.h>

#include "lct/errors.hpp"
#include "lct/extremal.hpp"
#include "lct/facet_cone.hpp"
#include "lct/greedy.hpp"
#include "test_helpers.hpp"

using namespace lct;

TEST_CASE("closed forms of the extremal tables") {
    const DeltaTable k = extremal_table(label_k(0));
    CHECK(k.d0() == GradedMap{{0, 1}});
    CHECK(k.d1().empty());
    CHECK(k.d2().empty());

    const DeltaTable kx = extremal_table(label_kx(0));
    CHECK(kx.value(1, -1) == 1);
    CHECK(kx.value(1, 0) == 0);
    CHECK(kx.value(1, -7) == 1);
    CHECK(kx.d1() == GradedMap{{-1, 1}});

    const DeltaTable m2 = extremal_table(label_m_power(2, 0));
    CHECK(m2.value(1, 0) == 1);
    CHECK(m2.value(1, 1) == 2);
    CHECK(m2.value(2, -2) == 1);
    CHECK(m2.value(2, -3) == 2);

    CHECK_THROWS_AS(extremal_table(label_m_power(0, 0)), InvalidLabel);
}

TEST_CASE("ideal powers share the second column of the free module") {
    for (int t = 1; t <= 6; ++t) {
        for (int a : {-3, 0, 4}) {
            CHECK(extremal_table(label_m_power(t, a)).d2() == extremal_table(label_r(a)).d2());
        }
    }
}

TEST_CASE("cyclic quotient columns") {
    CHECK(hilbert_column_cyclic(1, 0) == GradedMap{{0, 1}});
    CHECK(hilbert_column_cyclic(3, 0) == GradedMap{{0, 1}, {1, 2}, {2, 3}});
    CHECK(hilbert_column_cyclic(2, -5) == GradedMap{{-5, 1}, {-4, 2}});
}

TEST_CASE("cyclic columns match the first column of the power tables") {
    for (int t = 1; t <= 5; ++t) {
        for (int a : {-4, 0, 3}) {
            const GradedMap column = hilbert_column_cyclic(t, a);
            const DeltaTable table = extremal_table(label_m_power(t, -a));
            for (int n = a - 2; n <= a + t + 2; ++n) {
                CHECK(column.value(n) == table.value(1, n));
            }
        }
    }
}

TEST_CASE("monomial ideal tables count the staircase complement") {
    MonomialIdealSpec xy2;
    xy2.generators = {{2, 0}, {0, 2}};
    const DeltaTable t = monomial_ideal_table(xy2);
    CHECK(t.value(1, 0) == 1);
    CHECK(t.value(1, 1) == 2);
    CHECK(t.value(1, 2) == 1);
    CHECK(t.value(1, 3) == 0);
    CHECK(t.d2() == extremal_table(label_r(0)).d2());

    MonomialIdealSpec irrelevant;
    irrelevant.generators = {{1, 0}, {0, 1}};
    CHECK(monomial_ideal_table(irrelevant) == extremal_table(label_m_power(1, 0)));

    MonomialIdealSpec mixed;
    mixed.generators = {{1, 0}, {0, 3}};
    const DeltaTable u = monomial_ideal_table(mixed);
    CHECK(u.value(1, 0) == 1);
    CHECK(u.value(1, 1) == 1);
    CHECK(u.value(1, 2) == 1);
    CHECK(u.value(1, 3) == 0);

    MonomialIdealSpec not_primary;
    not_primary.generators = {{2, 0}, {1, 1}};
    CHECK_THROWS_AS(monomial_ideal_table(not_primary), NotPrimary);
}

TEST_CASE("powers of the irrelevant ideal agree with the closed form") {
    for (int t = 1; t <= 5; ++t) {
        MonomialIdealSpec power;
        for (int i = 0; i <= t; ++i) {
            power.generators.emplace_back(i, t - i);
        }
        power.shift = t - 3;
        CHECK(monomial_ideal_table(power) == extremal_table(label_m_power(t, t - 3)));
    }
}

TEST_CASE("combinations of tables") {
    const DeltaTable t = extremal_table(label_m_power(4, 1));
    CHECK(combine({{Rational(1), t}}) == t);
    CHECK(combine({{Rational(0), t}}).is_zero());

    MonomialIdealSpec xy2;
    xy2.generators = {{2, 0}, {0, 2}};
    const DeltaTable direct_sum =
        combine({{Rational(1), monomial_ideal_table(xy2)}, {Rational(1), extremal_table(label_r(-2))}});
    CHECK(direct_sum.value(2, 0) == 1);
    CHECK(direct_sum.value(2, -1) == 2);
    CHECK(direct_sum.value(2, -2) == 4);
    CHECK(direct_sum.value(2, -3) == 6);
}

TEST_CASE("every extremal table lies in the cone") {
    testing::Rng rng(5);
    for (int i = 0; i < 60; ++i) {
        const ExtremalLabel l = rng.label();
        CHECK(!membership(MPoint::from_delta(extremal_table(l))));
    }
}

TEST_CASE("canonical term order sorts by descending shift then kind") {
    Decomposition dec;
    dec.terms.push_back({Rational(1), label_r(0)});
    dec.terms.push_back({Rational(1), label_m_power(3, 0)});
    dec.terms.push_back({Rational(1), label_m_power(2, 0)});
    dec.terms.push_back({Rational(1), label_k(-2)});
    dec.terms.push_back({Rational(1), label_k(3)});
    dec.terms.push_back({Rational(2), label_m_power(2, 0)});
    dec.canonicalize();

    REQUIRE(dec.terms.size() == 5);
    CHECK(dec.terms[0].label == label_k(3));
    CHECK(dec.terms[1].label == label_m_power(2, 0));
    CHECK(dec.terms[1].coeff == 3);
    CHECK(dec.terms[2].label == label_m_power(3, 0));
    CHECK(dec.terms[3].label == label_r(0));
    CHECK(dec.terms[4].label == label_k(-2));
}
