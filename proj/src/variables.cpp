#include "wschur/variables.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace wschur {

const char* family_name(VarFamily family) {
    switch (family) {
        case VarFamily::X: return "x";
        case VarFamily::A: return "a";
        case VarFamily::V: return "v";
        case VarFamily::W: return "w";
        case VarFamily::B: return "b";
        case VarFamily::WP: return "wp";
        case VarFamily::Y: return "y";
    }
    return "?";
}

int graded_weight(VarFamily family) {
    switch (family) {
        case VarFamily::X:
        case VarFamily::A:
        case VarFamily::B:
        case VarFamily::Y: return 2;
        case VarFamily::V:
        case VarFamily::W:
        case VarFamily::WP: return 0;
    }
    return 0;
}

Monomial Monomial::variable(VarId v, int exponent) {
    if (exponent < 0) throw std::invalid_argument("Monomial: negative exponent");
    Monomial m;
    if (exponent > 0) m.vars_.push_back({v, exponent});
    return m;
}

int Monomial::total_degree() const {
    int deg = 0;
    for (const auto& [v, e] : vars_) deg += e;
    return deg;
}

int Monomial::graded_degree() const {
    int deg = 0;
    for (const auto& [v, e] : vars_) deg += graded_weight(v.family) * e;
    return deg;
}

int Monomial::degree_in(VarFamily family) const {
    int deg = 0;
    for (const auto& [v, e] : vars_)
        if (v.family == family) deg += e;
    return deg;
}

int Monomial::exponent_of(VarId v) const {
    for (const auto& [var, e] : vars_)
        if (var == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial out;
    out.vars_.reserve(vars_.size() + rhs.vars_.size());
    std::size_t i = 0, j = 0;
    while (i < vars_.size() && j < rhs.vars_.size()) {
        if (vars_[i].first == rhs.vars_[j].first) {
            out.vars_.push_back({vars_[i].first, vars_[i].second + rhs.vars_[j].second});
            ++i;
            ++j;
        } else if (vars_[i].first < rhs.vars_[j].first) {
            out.vars_.push_back(vars_[i++]);
        } else {
            out.vars_.push_back(rhs.vars_[j++]);
        }
    }
    while (i < vars_.size()) out.vars_.push_back(vars_[i++]);
    while (j < rhs.vars_.size()) out.vars_.push_back(rhs.vars_[j++]);
    return out;
}

bool Monomial::try_divide(const Monomial& rhs, Monomial& out) const {
    out.vars_.clear();
    std::size_t i = 0;
    for (const auto& [v, e] : rhs.vars_) {
        while (i < vars_.size() && vars_[i].first < v) out.vars_.push_back(vars_[i++]);
        if (i >= vars_.size() || !(vars_[i].first == v) || vars_[i].second < e) return false;
        if (vars_[i].second > e) out.vars_.push_back({v, vars_[i].second - e});
        ++i;
    }
    while (i < vars_.size()) out.vars_.push_back(vars_[i++]);
    return true;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // Lexicographic: the monomial with the higher exponent on the earliest
    // differing variable is larger.
    std::size_t i = 0, j = 0;
    while (i < a.vars_.size() && j < b.vars_.size()) {
        if (a.vars_[i].first == b.vars_[j].first) {
            if (a.vars_[i].second != b.vars_[j].second)
                return a.vars_[i].second < b.vars_[j].second ? -1 : 1;
            ++i;
            ++j;
        } else {
            // The earlier variable present on one side only makes that side larger.
            return a.vars_[i].first < b.vars_[j].first ? 1 : -1;
        }
    }
    if (i < a.vars_.size()) return 1;
    if (j < b.vars_.size()) return -1;
    return 0;
}

std::string Monomial::to_string() const {
    if (vars_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : vars_) {
        if (!out.empty()) out += "*";
        out += v.to_string();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

bool parse_var(std::string_view text, VarId& out) {
    static const std::pair<std::string_view, VarFamily> kNames[] = {
        {"wp", VarFamily::WP}, {"x", VarFamily::X}, {"a", VarFamily::A}, {"v", VarFamily::V},
        {"w", VarFamily::W},   {"b", VarFamily::B}, {"y", VarFamily::Y},
    };
    for (const auto& [name, fam] : kNames) {
        if (text.size() > name.size() && text.substr(0, name.size()) == name) {
            std::string_view digits = text.substr(name.size());
            if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
                    return std::isdigit(static_cast<unsigned char>(c));
                }))
                continue;
            out = {fam, std::stoi(std::string(digits))};
            return out.index >= 1;
        }
    }
    return false;
}

} // namespace wschur
