#include "wschur/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace wschur {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long value) {
    if (value == 0) return;
    sign_ = value < 0 ? -1 : 1;
    // Avoid overflow on LLONG_MIN by widening through unsigned.
    std::uint64_t mag = value < 0 ? ~static_cast<std::uint64_t>(value) + 1 : static_cast<std::uint64_t>(value);
    mag_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    if (mag >> 32) mag_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<std::uint32_t> out;
    out.reserve(hi.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t sum = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        out.push_back(static_cast<std::uint32_t>(sum & 0xffffffffu));
        carry = sum >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(diff));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] + carry +
                                static_cast<std::uint64_t>(a[i]) * static_cast<std::uint64_t>(b[j]);
            out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Binary long division on magnitudes. Word counts stay small here, so the
// bit-at-a-time loop is fast enough and has no tricky corner cases.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    q.assign(a.size(), 0);
    r.clear();
    if (cmp_mag(a, b) < 0) {
        q.clear();
        r = a;
        return;
    }
    if (b.size() == 1) {
        std::vector<std::uint32_t> tmp = a;
        std::uint32_t rem = divmod_small(tmp, b[0]);
        q = std::move(tmp);
        if (rem) r.push_back(rem);
        return;
    }
    const std::size_t total_bits = a.size() * 32;
    for (std::size_t bit = total_bits; bit-- > 0;) {
        // r = (r << 1) | bit(a, bit)
        std::uint32_t carry = (a[bit / 32] >> (bit % 32)) & 1u;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint32_t next = r[i] >> 31;
            r[i] = (r[i] << 1) | carry;
            carry = next;
        }
        if (carry) r.push_back(carry);
        if (cmp_mag(r, b) >= 0) {
            r = sub_mag(r, b);
            q[bit / 32] |= (1u << (bit % 32));
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

std::uint32_t BigInt::divmod_small(std::vector<std::uint32_t>& a, std::uint32_t divisor) {
    std::uint64_t rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | a[i];
        a[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return static_cast<std::uint32_t>(rem);
}

void BigInt::mul_add_small(std::vector<std::uint32_t>& a, std::uint32_t mul, std::uint32_t add) {
    std::uint64_t carry = add;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * mul + carry;
        a[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
    }
    while (carry) {
        a.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
        carry >>= 32;
    }
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    BigInt out;
    if (sign_ == rhs.sign_) {
        out.sign_ = sign_;
        out.mag_ = add_mag(mag_, rhs.mag_);
    } else {
        int c = cmp_mag(mag_, rhs.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            out.sign_ = sign_;
            out.mag_ = sub_mag(mag_, rhs.mag_);
        } else {
            out.sign_ = rhs.sign_;
            out.mag_ = sub_mag(rhs.mag_, mag_);
        }
    }
    return out;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
    if (is_zero() || rhs.is_zero()) return BigInt();
    BigInt out;
    out.sign_ = sign_ * rhs.sign_;
    out.mag_ = mul_mag(mag_, rhs.mag_);
    return out;
}

BigInt::DivMod BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    if (a.is_zero()) return {BigInt(), BigInt()};
    DivMod out;
    std::vector<std::uint32_t> q, r;
    divmod_mag(a.mag_, b.mag_, q, r);
    out.quotient.mag_ = std::move(q);
    out.remainder.mag_ = std::move(r);
    out.quotient.sign_ = out.quotient.mag_.empty() ? 0 : a.sign_ * b.sign_;
    out.remainder.sign_ = out.remainder.mag_.empty() ? 0 : a.sign_;
    return out;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs();
    BigInt y = b.abs();
    while (!y.is_zero()) {
        BigInt r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
    int c = cmp_mag(mag_, rhs.mag_);
    if (sign_ < 0) c = -c;
    return c <=> 0;
}

BigInt BigInt::from_string(std::string_view text) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos >= text.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt out;
    for (; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument("BigInt: bad digit in numeral");
        mul_add_small(out.mag_, 10, static_cast<std::uint32_t>(text[pos] - '0'));
    }
    out.sign_ = out.mag_.empty() ? 0 : sign;
    return out;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> tmp = mag_;
    std::string digits;
    while (!tmp.empty()) {
        std::uint32_t rem = divmod_small(tmp, 1000000000u);
        if (tmp.empty()) {
            std::string head = std::to_string(rem);
            std::reverse(head.begin(), head.end());
            digits += head;
        } else {
            for (int i = 0; i < 9; ++i) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
    }
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

bool BigInt::fits_long_long() const {
    if (mag_.size() > 2) return false;
    std::uint64_t v = 0;
    if (mag_.size() >= 1) v = mag_[0];
    if (mag_.size() == 2) v |= static_cast<std::uint64_t>(mag_[1]) << 32;
    if (sign_ >= 0) return v <= 0x7fffffffffffffffull;
    return v <= 0x8000000000000000ull;
}

long long BigInt::to_long_long() const {
    if (!fits_long_long()) throw std::overflow_error("BigInt: value does not fit in long long");
    std::uint64_t v = 0;
    if (mag_.size() >= 1) v = mag_[0];
    if (mag_.size() == 2) v |= static_cast<std::uint64_t>(mag_[1]) << 32;
    if (sign_ < 0) return static_cast<long long>(~v + 1);
    return static_cast<long long>(v);
}

} // namespace wschur
