#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wschur/errors.hpp"
#include "wschur/grassmann.hpp"

using namespace wschur;

namespace {

WeightConfig generic_cfg() { return WeightConfig{2, 4, {1, 0, 2, 1}, 2}; }
WeightConfig equal_cfg() { return WeightConfig{2, 4, {1, 1, 1, 1}, 2}; }

Polynomial P(const char* text) { return Polynomial::parse(text); }

} // namespace

TEST_CASE("config validation") {
    CHECK_NOTHROW(generic_cfg().validate());
    CHECK_THROWS_AS((WeightConfig{2, 2, {1, 1}, 2}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((WeightConfig{2, 4, {1, 0, 2}, 2}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((WeightConfig{2, 4, {1, 0, 2, 1}, 0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((WeightConfig{2, 4, {1, 0, -2, 1}, 2}.validate()), std::invalid_argument);
}

TEST_CASE("phi evaluation") {
    WeightConfig cfg = generic_cfg();
    CHECK(phi_n(Polynomial::variable(var_a(3)), cfg) == -Polynomial::variable(var_y(2)));
    CHECK(phi_n(Polynomial::variable(var_a(5)), cfg).is_zero());
    CHECK(phi_n(Polynomial::variable(var_w(2)), cfg) == Polynomial(Rational(1)));

    // Ring homomorphism on a sample.
    Polynomial p = P("w1*a1 - 2*a3");
    Polynomial q = P("a2 + w3");
    CHECK(phi_n(p * q, cfg) == phi_n(p, cfg) * phi_n(q, cfg));

    // w_lambda denominators become positive rationals.
    Partition one(2, {1, 0});
    LocalizedElem e(Polynomial::variable(var_a(1)), {DenomGen::w_lambda(one)});
    // w_(1,0) -> itw_3 + itw_1 + u = 2 + 1 + 2 = 5.
    CHECK(phi_n(e, cfg) == -Polynomial::variable(var_y(4)) * Rational(1, 5));

    CHECK_THROWS_AS(phi_n(Polynomial::variable(var_x(1)), cfg), std::invalid_argument);
}

TEST_CASE("restriction at a fixed point, both routes, frozen value") {
    WeightConfig cfg = generic_cfg();
    Partition one(2, {1, 0});
    Polynomial expected = P("-3/5*y2 + y3 + 2/5*y4");
    CHECK(restriction_via_phi(one, one, cfg) == expected);
    CHECK(restriction_direct(one, one, cfg) == expected);
}

TEST_CASE("restriction routes agree on the full rectangle") {
    for (const WeightConfig& cfg : {generic_cfg(), equal_cfg()}) {
        std::vector<Partition> classes = enumerate_partitions(2, 4, 2);
        for (const Partition& lambda : classes)
            for (const Partition& mu : classes)
                CHECK(restriction_via_phi(lambda, mu, cfg) ==
                      restriction_direct(lambda, mu, cfg));
    }
}

TEST_CASE("vanishing transported through the evaluation") {
    WeightConfig cfg = generic_cfg();
    Partition one(2, {1, 0});
    CHECK(restriction_via_phi(one, Partition::empty(2), cfg).is_zero());
    for (const Partition& mu : enumerate_partitions(2, 4, 2))
        CHECK(restriction_via_phi(Partition::empty(2), mu, cfg).is_one());
}

TEST_CASE("table construction and invariants") {
    WeightConfig small{2, 3, {1, 0, 2}, 2};
    RestrictionTable table = build_table(small);
    CHECK(table.classes.size() == 3); // C(3,2)
    CheckReport report = check_table_invariants(table);
    CHECK(report.ok);

    RestrictionTable big = build_table(generic_cfg());
    CHECK(big.classes.size() == 6);
    CHECK(check_table_invariants(big).ok);
    CHECK(check_table_invariants(build_table(equal_cfg())).ok);
}

TEST_CASE("expand_over_table recovers products") {
    RestrictionTable table = build_table(generic_cfg());
    Partition one(2, {1, 0});
    std::map<Partition, Polynomial> product;
    for (const Partition& sigma : table.classes)
        product.emplace(sigma, table.entry(one, sigma) * table.entry(one, sigma));
    std::map<Partition, Polynomial> coeffs = expand_over_table(table, product);
    // One-box square: the box additions carry w_ch/w_(1,0) -> 3/5 here, and
    // the diagonal term carries (w_ch/w_(1,0)) a_(1,0) - a_ch.
    CHECK(coeffs.at(Partition(2, {2, 0})) == Polynomial(Rational(3, 5)));
    CHECK(coeffs.at(Partition(2, {1, 1})) == Polynomial(Rational(3, 5)));
    CHECK(coeffs.at(Partition(2, {1, 0})) == P("-3/5*y2 + y3 + 2/5*y4"));
}

TEST_CASE("homomorphism consistency") {
    for (const WeightConfig& cfg : {generic_cfg(), equal_cfg()}) {
        RestrictionTable table = build_table(cfg);
        HomomorphismVerifier verifier(table);
        for (const Partition& lambda : enumerate_partitions(2, 2, 2)) {
            for (const Partition& mu : enumerate_partitions(2, 2, 2)) {
                CheckReport report = verifier.check(lambda, mu);
                if (!report.ok)
                    for (const std::string& f : report.failures) MESSAGE(f);
                CHECK(report.ok);
            }
        }
    }
}

TEST_CASE("classes outside the rectangle map to zero") {
    RestrictionTable table = build_table(generic_cfg());
    CHECK(check_kills_outside(table, Partition(2, {3, 0})).ok);
    CHECK(check_kills_outside(table, Partition(2, {4, 2})).ok);
}

TEST_CASE("pullback stability from stage 3 to stage 4") {
    CheckReport report = pullback_check(generic_cfg());
    if (!report.ok)
        for (const std::string& f : report.failures) MESSAGE(f);
    CHECK(report.ok);
}

TEST_CASE("three-row stage behaves like the two-row one") {
    WeightConfig cfg{3, 5, {1, 0, 2, 1, 1}, 3};
    RestrictionTable table = build_table(cfg);
    CHECK(table.classes.size() == 10); // C(5,3)
    CHECK(check_table_invariants(table).ok);
    for (const Partition& lambda : table.classes) {
        for (const Partition& mu : table.classes) {
            if (lambda.size() + mu.size() > 3) continue;
            CHECK(restriction_via_phi(lambda, mu, cfg) == restriction_direct(lambda, mu, cfg));
        }
    }
    HomomorphismVerifier verifier(table);
    Partition one = Partition::one_box(3);
    CHECK(verifier.check(one, one).ok);
    CHECK(pullback_check(cfg).ok);
}

TEST_CASE("weight evaluation") {
    WeightConfig cfg = generic_cfg();
    Partition div = Partition::one_box(2);
    LocalizedElem factorial = evaluate_weights(div, cfg, true);
    // (itw_1 + 1) + (itw_2 + 1) = 3.
    LocalizedElem expected(x_ch(2) * Rational(3) - a_ch(2) * v_ch(2), {DenomGen::v_ch(2)});
    CHECK(loc_equal(factorial, expected));
    LocalizedElem plain = evaluate_weights(div, cfg, false);
    CHECK(loc_equal(plain, LocalizedElem(x_ch(2) * Rational(3), {DenomGen::v_ch(2)})));

    CHECK(loc_equal(evaluate_weights(Partition::empty(2), cfg, true), LocalizedElem::one()));
    // (4,0) reaches w_5 at stage 4.
    CHECK_THROWS_AS(evaluate_weights(Partition(2, {4, 0}), cfg, true), IndexOutOfConfig);
}
