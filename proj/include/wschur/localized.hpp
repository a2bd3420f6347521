#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wschur/partitions.hpp"
#include "wschur/polynomial.hpp"

namespace wschur {

// A denominator generator of the localized ring: v_ch = v_1+...+v_d,
// w_lambda = sum of w over bar(lambda), or wp_ch = wp_1+...+wp_d. Nothing
// else is ever inverted.
class DenomGen {
public:
    enum class Kind { VCh, WLambda, WPrimeCh };

    static DenomGen v_ch(int d) { return DenomGen(Kind::VCh, d, std::nullopt); }
    static DenomGen w_lambda(Partition lambda) {
        int d = lambda.d();
        return DenomGen(Kind::WLambda, d, std::move(lambda));
    }
    static DenomGen wp_ch(int d) { return DenomGen(Kind::WPrimeCh, d, std::nullopt); }

    Kind kind() const { return kind_; }
    int d() const { return d_; }
    const Partition& lambda() const { return *lambda_; }

    Polynomial expand() const;

    bool operator==(const DenomGen&) const = default;
    std::strong_ordering operator<=>(const DenomGen&) const = default;

    std::string to_string() const;

private:
    DenomGen(Kind kind, int d, std::optional<Partition> lambda)
        : kind_(kind), d_(d), lambda_(std::move(lambda)) {}

    Kind kind_;
    int d_;
    std::optional<Partition> lambda_;
};

// Element of the localized ring: a polynomial numerator over a formal
// multiset of denominator generators (kept sorted). Zero always has an empty
// denominator. There is no unique normal form; equality is decided by
// cross-multiplication.
class LocalizedElem {
public:
    LocalizedElem() = default;
    LocalizedElem(Polynomial numerator) : num_(std::move(numerator)) {}
    LocalizedElem(Polynomial numerator, std::vector<DenomGen> denominator);
    explicit LocalizedElem(Rational constant) : num_(Polynomial(std::move(constant))) {}

    static LocalizedElem zero() { return LocalizedElem(); }
    static LocalizedElem one() { return LocalizedElem(Polynomial(Rational(1))); }

    const Polynomial& numerator() const { return num_; }
    const std::vector<DenomGen>& denominator() const { return den_; }
    Polynomial denominator_expanded() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    bool denominator_only_w_lambda() const;

    LocalizedElem operator-() const;
    LocalizedElem operator+(const LocalizedElem& rhs) const;
    LocalizedElem operator-(const LocalizedElem& rhs) const;
    LocalizedElem operator*(const LocalizedElem& rhs) const;
    LocalizedElem operator*(const Rational& scalar) const;
    LocalizedElem& operator+=(const LocalizedElem& rhs) { return *this = *this + rhs; }
    LocalizedElem& operator-=(const LocalizedElem& rhs) { return *this = *this - rhs; }
    LocalizedElem& operator*=(const LocalizedElem& rhs) { return *this = *this * rhs; }
    LocalizedElem pow(int exponent) const;

    // Appends generators to the denominator (division by generators).
    LocalizedElem over(const DenomGen& gen) const;
    LocalizedElem over(const std::vector<DenomGen>& gens) const;

    // Cancels denominator generators that exactly divide the numerator.
    LocalizedElem normalized() const;

    std::string to_string() const;

private:
    Polynomial num_;
    std::vector<DenomGen> den_; // sorted multiset

    void canonicalize();
};

inline LocalizedElem operator*(const Rational& scalar, const LocalizedElem& e) {
    return e * scalar;
}

// Cross-multiplied equality of fractions.
bool loc_equal(const LocalizedElem& e1, const LocalizedElem& e2);

// Adds many elements over a single common denominator; equivalent to folding
// operator+ but expands each complement only once.
LocalizedElem loc_sum(const std::vector<LocalizedElem>& elems);

// e1 / e2, valid only when the quotient stays inside the localized ring:
// after clearing both denominators the polynomial division must be exact.
// Returns nullopt when the division fails.
std::optional<LocalizedElem> try_loc_divide(const LocalizedElem& e1, const LocalizedElem& e2);

// Substitutes LocalizedElem images for variables; unmapped variables stay.
// A ring homomorphism: the result denominator is a union of image
// denominators.
LocalizedElem substitute(const Polynomial& p,
                         const std::function<std::optional<LocalizedElem>(VarId)>& fn);

// True when e is invariant under every simultaneous transposition of
// (x_i, v_i) pairs; adjacent transpositions suffice.
bool is_symmetric(const LocalizedElem& e, int d);

} // namespace wschur
