#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wschur/weighted.hpp"

using namespace wschur;

namespace {

LocalizedElem one_box_factorial_expected(int d) {
    // (w_ch / v_ch) x_ch - a_ch
    return LocalizedElem(w_ch(d) * x_ch(d) - a_ch(d) * v_ch(d), {DenomGen::v_ch(d)});
}

LocalizedElem two_rows_expected(int d) {
    // sum_{i<j} (x_i - a_i - ((v_i-w_i)/v_ch) x_ch)(x_j - a_{j-1} - ((v_j-w_{j-1})/v_ch) x_ch)
    LocalizedElem out;
    for (int i = 1; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) {
            Polynomial left = Polynomial::variable(var_x(i)) * v_ch(d) -
                              Polynomial::variable(var_a(i)) * v_ch(d) -
                              (Polynomial::variable(var_v(i)) - Polynomial::variable(var_w(i))) *
                                  x_ch(d);
            Polynomial right =
                Polynomial::variable(var_x(j)) * v_ch(d) -
                Polynomial::variable(var_a(j - 1)) * v_ch(d) -
                (Polynomial::variable(var_v(j)) - Polynomial::variable(var_w(j - 1))) * x_ch(d);
            out += LocalizedElem(left, {DenomGen::v_ch(d)}) *
                   LocalizedElem(right, {DenomGen::v_ch(d)});
        }
    }
    return out;
}

} // namespace

TEST_CASE("one-box examples") {
    for (int d = 2; d <= 3; ++d) {
        Partition div = Partition::one_box(d);
        CHECK(loc_equal(weighted_factorial_schur(div), one_box_factorial_expected(d)));
        CHECK(loc_equal(weighted_schur(div),
                        LocalizedElem(w_ch(d) * x_ch(d), {DenomGen::v_ch(d)})));
    }
    CHECK(loc_equal(weighted_factorial_schur(Partition::empty(2)), LocalizedElem::one()));
    CHECK(loc_equal(weighted_schur(Partition::empty(2)), LocalizedElem::one()));
}

TEST_CASE("two-row one-column example") {
    for (int d = 2; d <= 3; ++d) {
        std::vector<int> rows(static_cast<std::size_t>(d), 0);
        rows[0] = rows[1] = 1;
        CHECK(loc_equal(weighted_factorial_schur(Partition(d, rows)), two_rows_expected(d)));
    }
}

TEST_CASE("definition by substitution into the tableau formula") {
    for (const Partition& lambda : enumerate_partitions(2, 3)) {
        const int d = lambda.d();
        LocalizedElem direct = weighted_factorial_schur(lambda);
        LocalizedElem by_substitution = substitute(
            factorial_schur_tableaux(lambda), [&](VarId v) -> std::optional<LocalizedElem> {
                if (v.family == VarFamily::X) return x_shifted(v.index, d);
                if (v.family == VarFamily::A) return a_shifted(v.index, d);
                return std::nullopt;
            });
        CHECK(loc_equal(direct, by_substitution));
        // The a = 0 specialization of the element is the weighted function.
        LocalizedElem a_zero(direct.numerator().set_family_zero(VarFamily::A),
                             direct.denominator());
        CHECK(loc_equal(a_zero, weighted_schur(lambda)));
        // Denominator is a pure v_ch power.
        for (const DenomGen& g : direct.denominator())
            CHECK(g.kind() == DenomGen::Kind::VCh);
    }
}

TEST_CASE("weighted functions are symmetric") {
    for (const Partition& lambda : enumerate_partitions(2, 4))
        CHECK(is_symmetric(weighted_factorial_schur(lambda), 2));
    for (const Partition& lambda : enumerate_partitions(3, 3)) {
        CHECK(is_symmetric(weighted_factorial_schur(lambda), 3));
        CHECK(is_symmetric(weighted_schur(lambda), 3));
    }
}

TEST_CASE("psi evaluation examples") {
    CHECK(loc_equal(psi_mu_vw(LocalizedElem::one(), Partition(2, {1, 0})), LocalizedElem::one()));

    // psi_mu(v_ch) = w_mu.
    Partition mu(2, {2, 1});
    CHECK(psi_mu_vw(LocalizedElem(v_ch(2)), mu).numerator() == w_lambda(mu));

    // psi_{(1,0)}(s_div^w) for d = 2.
    Partition one(2, {1, 0});
    LocalizedElem got = psi_mu_vw(weighted_factorial_schur(Partition::one_box(2)), one);
    Polynomial expected_num = Polynomial::parse("w1*a3 + w1*a1 + w2*a3 + w2*a1") -
                              Polynomial::parse("a1 + a2") * Polynomial::parse("w3 + w1");
    LocalizedElem expected(expected_num, {DenomGen::w_lambda(one)});
    CHECK(loc_equal(got, expected));
}

TEST_CASE("psi is a ring homomorphism") {
    Partition mu(2, {2, 0});
    LocalizedElem e1 = weighted_factorial_schur(Partition(2, {1, 0}));
    LocalizedElem e2 = weighted_schur(Partition(2, {1, 1}));
    CHECK(loc_equal(psi_mu_vw(e1 * e2, mu), psi_mu_vw(e1, mu) * psi_mu_vw(e2, mu)));
    CHECK(loc_equal(psi_mu_vw(e1 + e2, mu), psi_mu_vw(e1, mu) + psi_mu_vw(e2, mu)));
}

TEST_CASE("mu-shift identity") {
    // psi_mu(x_i^v) = (a^mu)_{bar mu_i} and psi_mu(a_l^{vw}) = (a^mu)_l with
    // (a^mu)_l = a_l - (w_l / w_mu) a_mu.
    for (const Partition& mu : enumerate_partitions(2, 3)) {
        const int d = mu.d();
        auto bar = mu.bar();
        auto a_mu_shift = [&](int l) {
            Polynomial num = Polynomial::variable(var_a(l)) * w_lambda(mu) -
                             Polynomial::variable(var_w(l)) * a_lambda(mu);
            return LocalizedElem(std::move(num), {DenomGen::w_lambda(mu)});
        };
        for (int i = 1; i <= d; ++i)
            CHECK(loc_equal(psi_mu_vw(x_shifted(i, d), mu), a_mu_shift(bar[i - 1])));
        for (int l = 1; l <= 4; ++l)
            CHECK(loc_equal(psi_mu_vw(a_shifted(l, d), mu), a_mu_shift(l)));
    }
}

TEST_CASE("vanishing closed forms") {
    Partition one(2, {1, 0});
    Partition empty = Partition::empty(2);

    auto zero_case = vanishing_value(one, empty);
    REQUIRE(zero_case.has_value());
    CHECK(zero_case->is_zero());

    auto diag = vanishing_value(one, one);
    REQUIRE(diag.has_value());
    Polynomial num = (Polynomial::variable(var_w(2)) + Polynomial::variable(var_w(1))) *
                         a_lambda(one) -
                     w_lambda(one) * a_lambda(empty);
    CHECK(loc_equal(*diag, LocalizedElem(num, {DenomGen::w_lambda(one)})));

    auto empty_diag = vanishing_value(empty, empty);
    REQUIRE(empty_diag.has_value());
    CHECK(loc_equal(*empty_diag, LocalizedElem::one()));

    CHECK(!vanishing_value(empty, one).has_value()); // unconstrained
}

TEST_CASE("vanishing lemma sweep") {
    for (const Partition& lambda : enumerate_partitions(2, 3)) {
        LocalizedElem cls = weighted_factorial_schur(lambda);
        for (const Partition& mu : enumerate_partitions(2, 3)) {
            LocalizedElem value = psi_mu_vw(cls, mu);
            auto predicted = vanishing_value(lambda, mu);
            if (predicted) CHECK(loc_equal(value, *predicted));
        }
    }
}

TEST_CASE("triangularity of the psi matrix") {
    std::vector<Partition> window = enumerate_partitions(2, 3);
    for (const Partition& lambda : window) {
        LocalizedElem cls = weighted_factorial_schur(lambda);
        for (const Partition& mu : window) {
            LocalizedElem value = psi_mu_vw(cls, mu);
            if (!mu.contains(lambda)) CHECK(loc_equal(value, LocalizedElem::zero()));
            if (mu == lambda) CHECK(!value.normalized().is_zero());
        }
    }
}

TEST_CASE("weighted pieri rules") {
    // Non-factorial consistency at lambda = empty: w_empty = w_ch.
    Partition empty = Partition::empty(2);
    LocalizedElem one_box_wp = weighted_schur(Partition::one_box(2), WeightAlphabet::WP);
    CHECK(loc_equal(one_box_wp * weighted_schur(empty), weighted_pieri_rhs(empty, false)));

    for (const Partition& lambda : enumerate_partitions(2, 2)) {
        LocalizedElem lhs_plain = one_box_wp * weighted_schur(lambda);
        CHECK(loc_equal(lhs_plain, weighted_pieri_rhs(lambda, false)));

        LocalizedElem one_box_factorial =
            weighted_factorial_schur(Partition::one_box(2), SchurAlphabet::B, WeightAlphabet::WP);
        LocalizedElem lhs_factorial = one_box_factorial * weighted_factorial_schur(lambda);
        CHECK(loc_equal(lhs_factorial, weighted_pieri_rhs(lambda, true)));
    }
}
