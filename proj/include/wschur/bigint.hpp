#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wschur {

// Arbitrary-precision signed integer. Magnitude is a little-endian vector of
// 32-bit words with no trailing zero words; the empty vector is zero.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);

    static BigInt from_string(std::string_view text);
    std::string to_string() const;

    bool is_zero() const { return mag_.empty(); }
    bool is_one() const { return sign_ > 0 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& rhs) const;
    BigInt operator-(const BigInt& rhs) const;
    BigInt operator*(const BigInt& rhs) const;

    BigInt& operator+=(const BigInt& rhs) { return *this = *this + rhs; }
    BigInt& operator-=(const BigInt& rhs) { return *this = *this - rhs; }
    BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }

    // Truncated division: quotient rounds toward zero, remainder has the
    // sign of the dividend. Throws std::domain_error on division by zero.
    struct DivMod;
    static DivMod divmod(const BigInt& a, const BigInt& b);
    BigInt operator/(const BigInt& rhs) const;
    BigInt operator%(const BigInt& rhs) const;

    static BigInt gcd(const BigInt& a, const BigInt& b);

    bool operator==(const BigInt& rhs) const { return sign_ == rhs.sign_ && mag_ == rhs.mag_; }
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    // Exact conversion; throws std::overflow_error if the value does not fit.
    long long to_long_long() const;
    bool fits_long_long() const;

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires a >= b.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
    static std::uint32_t divmod_small(std::vector<std::uint32_t>& a, std::uint32_t divisor);
    static void mul_add_small(std::vector<std::uint32_t>& a, std::uint32_t mul, std::uint32_t add);
};

struct BigInt::DivMod {
    BigInt quotient;
    BigInt remainder;
};

inline BigInt BigInt::operator/(const BigInt& rhs) const { return divmod(*this, rhs).quotient; }
inline BigInt BigInt::operator%(const BigInt& rhs) const { return divmod(*this, rhs).remainder; }

} // namespace wschur
