#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "wschur/rational.hpp"
#include "wschur/variables.hpp"

namespace wschur {

// Sparse multivariate polynomial over Rational. Terms are kept in descending
// graded-lex order, zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;
    explicit Polynomial(Rational constant);
    explicit Polynomial(long long constant) : Polynomial(Rational(constant)) {}

    static Polynomial variable(VarId v, int exponent = 1);
    static Polynomial term(Monomial m, Rational coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Rational coefficient_of(const Monomial& m) const;
    Rational constant_term() const { return coefficient_of(Monomial()); }

    // Leading term in the graded-lex order; polynomial must be nonzero.
    const std::pair<const Monomial, Rational>& leading_term() const;

    int total_degree() const;  // every variable counts 1; zero polynomial gives -1
    int graded_degree() const; // x,a,b,y count 2; v,w,wp count 0
    int degree_in(VarFamily family) const;
    bool is_homogeneous_graded() const;
    bool has_integer_coefficients() const;
    bool uses_family(VarFamily family) const;
    int max_index_in(VarFamily family) const; // 0 when the family is absent

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& scalar) const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }
    Polynomial pow(int exponent) const;

    bool operator==(const Polynomial& rhs) const { return terms_ == rhs.terms_; }

    // Transported variable map: every occurrence of a variable v with
    // fn(v) engaged is renamed, exponents merging. Images must be variables.
    Polynomial remap_variables(const std::function<std::optional<VarId>(VarId)>& fn) const;
    // Substitutes whole polynomials: fn(v) == nullopt keeps v fixed.
    Polynomial substitute(const std::function<std::optional<Polynomial>(VarId)>& fn) const;
    // Drops every term that contains a variable of the family (i.e. family = 0).
    Polynomial set_family_zero(VarFamily family) const;
    // Simultaneous swap of the variable pairs (x_i, v_i) <-> (x_j, v_j).
    Polynomial swap_xv_pair(int i, int j) const;
    // Extracts the part of the given total x-degree (or any family).
    Polynomial part_with_degree_in(VarFamily family, int degree) const;

    std::string to_string() const;
    static Polynomial parse(std::string_view text);

private:
    TermMap terms_;

    void add_term(const Monomial& m, const Rational& c);
};

inline Polynomial operator*(const Rational& scalar, const Polynomial& p) { return p * scalar; }

// Exact division: returns r with p == q * r, or nullopt when q does not
// divide p. Throws std::domain_error when q is zero.
std::optional<Polynomial> try_exact_divide(const Polynomial& p, const Polynomial& q);

// Throwing form; raises NotDivisible when q does not divide p.
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);

} // namespace wschur
