#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wschur/errors.hpp"
#include "wschur/localized.hpp"
#include "wschur/weighted.hpp"

using namespace wschur;

namespace {

Polynomial P(const char* text) { return Polynomial::parse(text); }

std::mt19937 rng(20240817);

Rational random_rational() {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

Polynomial random_polynomial() {
    static const VarId pool[] = {var_x(1), var_x(2), var_a(1), var_a(2), var_v(1), var_w(3)};
    std::uniform_int_distribution<int> term_count(0, 5);
    std::uniform_int_distribution<int> var_count(0, 3);
    std::uniform_int_distribution<std::size_t> pick(0, std::size(pool) - 1);
    std::uniform_int_distribution<int> exp(1, 2);
    Polynomial p;
    int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int vars = var_count(rng);
        for (int k = 0; k < vars; ++k) m = m * Monomial::variable(pool[pick(rng)], exp(rng));
        p += Polynomial::term(m, random_rational());
    }
    return p;
}

} // namespace

TEST_CASE("bigint arithmetic and division") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK((BigInt(-7) + BigInt(7)).is_zero());
    CHECK((BigInt(1000000007LL) * BigInt(998244353LL)).to_string() == "998244359987710471");
    BigInt two_pow_100(1);
    for (int i = 0; i < 100; ++i) two_pow_100 = two_pow_100 * BigInt(2);
    CHECK(two_pow_100.to_string() == "1267650600228229401496703205376");
    CHECK(BigInt::from_string("1267650600228229401496703205376") == two_pow_100);

    BigInt fact(1);
    for (int i = 2; i <= 30; ++i) fact = fact * BigInt(i);
    CHECK(fact.to_string() == "265252859812191058636308480000000");

    auto dm = BigInt::divmod(fact + BigInt(12345), fact);
    CHECK(dm.quotient == BigInt(1));
    CHECK(dm.remainder == BigInt(12345));

    // Multi-word division and gcd, expected values computed independently.
    BigInt big_a = BigInt::from_string("1267650600228229401496703205383"); // 2^100 + 7
    BigInt big_b = BigInt::from_string("1125899906842627");                // 2^50 + 3
    auto big_qr = BigInt::divmod(big_a, big_b);
    CHECK(big_qr.quotient == BigInt::from_string("1125899906842621"));
    CHECK(big_qr.remainder == BigInt(16));
    BigInt gx = BigInt::from_string("123456789012345678901234567890");
    BigInt gy = BigInt::from_string("987654321098765432109876543210");
    CHECK(BigInt::gcd(gx, gy) == BigInt::from_string("9000000000900000000090"));
    CHECK((gx * gy).to_string() ==
          "121932631137021795226185032733622923332237463801111263526900");
    CHECK((-gx) / gy == BigInt(0));
    CHECK((-gx) % gy == -gx);

    std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
    for (int trial = 0; trial < 200; ++trial) {
        long long a = dist(rng), b = dist(rng);
        if (b == 0) continue;
        auto qr = BigInt::divmod(BigInt(a), BigInt(b));
        CHECK(qr.quotient == BigInt(a / b));
        CHECK(qr.remainder == BigInt(a % b));
        CHECK(BigInt::gcd(BigInt(a), BigInt(b)) == BigInt(std::gcd(a, b)));
    }
}

TEST_CASE("rational normalization") {
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(0, 5) == Rational());
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(3, 2) * Rational(2, 3)).is_one());
    CHECK(Rational::from_string("-3/2") == Rational(-3, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK(Rational(2, 4).reciprocal() == Rational(2));
}

TEST_CASE("polynomial products match hand expansion") {
    CHECK(P("x1 + x2") * P("x1 - x2") == P("x1^2 - x2^2"));
    Polynomial p = random_polynomial();
    CHECK(p + Polynomial() == p);
    // (x1 - a1)(x1 - a2): distribute term by term.
    Polynomial lhs = (P("x1") - P("a1")) * (P("x1") - P("a2"));
    CHECK(lhs == P("x1^2 - x1*a1 - x1*a2 + a1*a2"));
}

TEST_CASE("ring axioms hold exactly on random polynomials") {
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial a = random_polynomial(), b = random_polynomial(), c = random_polynomial();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == Polynomial());
    }
}

TEST_CASE("exact division") {
    CHECK(*try_exact_divide(P("x1^2 - x2^2"), P("x1 - x2")) == P("x1 + x2"));
    CHECK(!try_exact_divide(P("x1*x2"), P("x1 + x2")).has_value());
    CHECK_THROWS_AS(try_exact_divide(P("x1"), Polynomial()), std::domain_error);
    CHECK_THROWS_AS(exact_divide(P("x1*x2"), P("x1 + x2")), NotDivisible);
    CHECK(exact_divide(P("x1^2 - x2^2"), P("x1 - x2")) == P("x1 + x2"));
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = random_polynomial(), q = random_polynomial();
        if (q.is_zero()) continue;
        auto back = try_exact_divide(p * q, q);
        REQUIRE(back.has_value());
        CHECK(*back == p);
    }
}

TEST_CASE("canonical rendering round-trips") {
    CHECK(P("0").to_string() == "0");
    Polynomial sample = P("-3/2*x1^2*a3 + x1 - 2*v1*w3");
    CHECK(Polynomial::parse(sample.to_string()) == sample);
    // Descending graded-lex: degree 3, then 2, then 1.
    CHECK(sample.to_string() == "-3/2*x1^2*a3 - 2*v1*w3 + x1");
    CHECK(P("wp2*w2").to_string() == "w2*wp2");
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = random_polynomial();
        CHECK(Polynomial::parse(p.to_string()) == p);
    }
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(P("x1 +"), std::invalid_argument);
    CHECK_THROWS_AS(P("q3"), std::invalid_argument);
    CHECK_THROWS_AS(P("x1^"), std::invalid_argument);
    CHECK_THROWS_AS(P("3/"), std::invalid_argument);
    CHECK_THROWS_AS(P("x0"), std::invalid_argument);
}

TEST_CASE("substitute produces shifted variables") {
    const int d = 2;
    auto shift_map = [&](VarId v) -> std::optional<LocalizedElem> {
        if (v.family == VarFamily::X) return x_shifted(v.index, d);
        return std::nullopt;
    };
    LocalizedElem image = substitute(P("x1"), shift_map);
    CHECK(loc_equal(image, x_shifted(1, d)));

    // Identity map keeps the polynomial with an empty denominator.
    LocalizedElem same = substitute(P("x1^2 - a3"), [](VarId) { return std::nullopt; });
    CHECK(same.is_polynomial());
    CHECK(same.numerator() == P("x1^2 - a3"));

    // v_ch maps onto w_mu under v_i -> w_{bar mu_i}.
    Partition mu(2, {1, 0});
    auto bar = mu.bar();
    LocalizedElem w_mu = substitute(v_ch(d), [&](VarId v) -> std::optional<LocalizedElem> {
        if (v.family == VarFamily::V)
            return LocalizedElem(Polynomial::variable(var_w(bar[v.index - 1])));
        return std::nullopt;
    });
    CHECK(w_mu.numerator() == w_lambda(mu));
}

TEST_CASE("substitute is a ring homomorphism") {
    const int d = 2;
    auto images = [&](VarId v) -> std::optional<LocalizedElem> {
        switch (v.family) {
            case VarFamily::X: return x_shifted(v.index, d);
            case VarFamily::A: return a_shifted(v.index, d);
            default: return std::nullopt;
        }
    };
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial p = random_polynomial(), q = random_polynomial();
        CHECK(loc_equal(substitute(p * q, images), substitute(p, images) * substitute(q, images)));
        CHECK(loc_equal(substitute(p + q, images), substitute(p, images) + substitute(q, images)));
    }
}

TEST_CASE("loc_equal by cross multiplication") {
    const int d = 2;
    LocalizedElem plain(P("x1"));
    LocalizedElem scaled(P("x1") * v_ch(d), {DenomGen::v_ch(d)});
    CHECK(loc_equal(plain, scaled));
    CHECK(!loc_equal(LocalizedElem(P("x1")), LocalizedElem(P("x2"))));

    LocalizedElem base(w_ch(d) * x_ch(d), {DenomGen::v_ch(d)});
    LocalizedElem rescaled(w_ch(d) * x_ch(d) * v_ch(d), {DenomGen::v_ch(d), DenomGen::v_ch(d)});
    CHECK(loc_equal(base, rescaled));
}

TEST_CASE("loc_normalize cancels exactly divisible generators") {
    const int d = 2;
    LocalizedElem e(v_ch(d) * P("x1"), {DenomGen::v_ch(d)});
    LocalizedElem n = e.normalized();
    CHECK(n.is_polynomial());
    CHECK(n.numerator() == P("x1"));

    // w_{(1,0)} = w3 + w1 does not divide (w2 + w1) * a3.
    Partition one_box(2, {1, 0});
    LocalizedElem stuck(P("w2*a3 + w1*a3"), {DenomGen::w_lambda(one_box)});
    LocalizedElem still = stuck.normalized();
    CHECK(still.denominator().size() == 1);
    CHECK(still.numerator() == P("w2*a3 + w1*a3"));

    LocalizedElem zero(Polynomial(), {DenomGen::v_ch(d)});
    CHECK(zero.is_zero());
    CHECK(zero.denominator().empty());

    for (int trial = 0; trial < 20; ++trial) {
        Polynomial num = random_polynomial();
        LocalizedElem e2(num, {DenomGen::v_ch(d), DenomGen::w_lambda(one_box)});
        CHECK(loc_equal(e2, e2.normalized()));
    }
}

TEST_CASE("is_symmetric checks simultaneous x,v swaps") {
    const int d = 2;
    CHECK(is_symmetric(LocalizedElem(P("x1 + x2")), d));
    CHECK(!is_symmetric(x_shifted(1, d), d));
    CHECK(is_symmetric(x_shifted(1, d) + x_shifted(2, d), d));
}

TEST_CASE("integer coefficient predicate") {
    CHECK(P("2*x1 - a3").has_integer_coefficients());
    CHECK(!P("1/2*x1").has_integer_coefficients());
}

TEST_CASE("negative powers are rejected") {
    CHECK_THROWS_AS(P("x1").pow(-1), std::invalid_argument);
    CHECK_THROWS_AS(LocalizedElem(P("x1")).pow(-2), std::invalid_argument);
    CHECK(P("x1 + 1").pow(0).is_one());
}

TEST_CASE("graded degree convention") {
    CHECK(P("x1^2*a3").graded_degree() == 6);
    CHECK(P("v1^5*w2").graded_degree() == 0);
    CHECK(P("x1*v1 + a2").graded_degree() == 2);
    CHECK(P("x1*v1 + a2").is_homogeneous_graded());
    CHECK(!P("x1^2 + a2").is_homogeneous_graded());
}
