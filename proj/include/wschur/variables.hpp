#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wschur {

// Variable families, in canonical order. X and V are row-indexed (1..d);
// the others are unbounded. B is the second interpolation alphabet paired
// with A, WP the second weight alphabet paired with W.
enum class VarFamily : std::uint8_t { X = 0, A, V, W, B, WP, Y };

const char* family_name(VarFamily family);

struct VarId {
    VarFamily family;
    int index; // 1-based

    auto operator<=>(const VarId&) const = default;
    std::string to_string() const { return family_name(family) + std::to_string(index); }
};

inline VarId var_x(int i) { return {VarFamily::X, i}; }
inline VarId var_a(int l) { return {VarFamily::A, l}; }
inline VarId var_v(int i) { return {VarFamily::V, i}; }
inline VarId var_w(int l) { return {VarFamily::W, l}; }
inline VarId var_b(int l) { return {VarFamily::B, l}; }
inline VarId var_wp(int l) { return {VarFamily::WP, l}; }
inline VarId var_y(int i) { return {VarFamily::Y, i}; }

// Degree weight used for the graded degree: x, a, b, y count 2; v, w, wp
// count 0.
int graded_weight(VarFamily family);

// A monomial: variables with positive exponents, kept sorted by VarId.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(VarId v, int exponent = 1);

    bool is_constant() const { return vars_.empty(); }
    int total_degree() const;
    int graded_degree() const;
    int degree_in(VarFamily family) const;
    int exponent_of(VarId v) const;

    const std::vector<std::pair<VarId, int>>& vars() const { return vars_; }

    Monomial operator*(const Monomial& rhs) const;
    // Componentwise quotient; false if rhs does not divide *this.
    bool try_divide(const Monomial& rhs, Monomial& out) const;

    bool operator==(const Monomial& rhs) const { return vars_ == rhs.vars_; }

    // Graded-lex comparison (total degree first, then lexicographic on the
    // canonical variable order). Returns <0, 0, >0.
    static int compare(const Monomial& a, const Monomial& b);

    std::string to_string() const; // "x1^2*a3", "1" for the constant monomial

private:
    std::vector<std::pair<VarId, int>> vars_;
};

// Orders monomials descending in graded-lex, so map iteration starts at the
// leading term.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) > 0;
    }
};

// Parses a family name prefix ("wp" before "w") plus index, e.g. "x1", "wp12".
// Returns false on malformed input.
bool parse_var(std::string_view text, VarId& out);

} // namespace wschur
