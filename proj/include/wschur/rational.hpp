#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "wschur/bigint.hpp"

namespace wschur {

// Exact rational number, always stored in lowest terms with a positive
// denominator. The zero value is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(BigInt numerator) : num_(std::move(numerator)), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);
    Rational(long long numerator, long long denominator)
        : Rational(BigInt(numerator), BigInt(denominator)) {}

    static Rational from_string(std::string_view text);
    std::string to_string() const;

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    Rational operator/(const Rational& rhs) const;

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    Rational reciprocal() const;

    bool operator==(const Rational& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }
    std::strong_ordering operator<=>(const Rational& rhs) const;

private:
    BigInt num_;
    BigInt den_;

    void reduce();
};

} // namespace wschur
