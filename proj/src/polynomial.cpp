#include "wschur/polynomial.hpp"

#include <cctype>
#include <stdexcept>

#include "wschur/errors.hpp"

namespace wschur {

Polynomial::Polynomial(Rational constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial(), std::move(constant));
}

Polynomial Polynomial::variable(VarId v, int exponent) {
    return term(Monomial::variable(v, exponent), Rational(1));
}

Polynomial Polynomial::term(Monomial m, Rational coeff) {
    Polynomial out;
    if (!coeff.is_zero()) out.terms_.emplace(std::move(m), std::move(coeff));
    return out;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_constant() &&
           terms_.begin()->second.is_one();
}

Rational Polynomial::coefficient_of(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

const std::pair<const Monomial, Rational>& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("Polynomial: leading term of zero");
    return *terms_.begin();
}

int Polynomial::total_degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.total_degree());
    return deg;
}

int Polynomial::graded_degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.graded_degree());
    return deg;
}

int Polynomial::degree_in(VarFamily family) const {
    int deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.degree_in(family));
    return deg;
}

bool Polynomial::is_homogeneous_graded() const {
    if (terms_.empty()) return true;
    int deg = terms_.begin()->first.graded_degree();
    for (const auto& [m, c] : terms_)
        if (m.graded_degree() != deg) return false;
    return true;
}

bool Polynomial::has_integer_coefficients() const {
    for (const auto& [m, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

bool Polynomial::uses_family(VarFamily family) const {
    for (const auto& [m, c] : terms_)
        if (m.degree_in(family) > 0) return true;
    return false;
}

int Polynomial::max_index_in(VarFamily family) const {
    int max_index = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.vars())
            if (v.family == family) max_index = std::max(max_index, v.index);
    return max_index;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial out = *this;
    out += rhs;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    Polynomial out = *this;
    out -= rhs;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    Polynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    if (scalar.is_zero()) return {};
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * scalar);
    return out;
}

Polynomial Polynomial::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("Polynomial: negative power");
    Polynomial out{Rational(1)};
    for (int i = 0; i < exponent; ++i) out = out * *this;
    return out;
}

Polynomial Polynomial::remap_variables(const std::function<std::optional<VarId>(VarId)>& fn) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Monomial image;
        for (const auto& [v, e] : m.vars()) {
            auto target = fn(v);
            image = image * Monomial::variable(target ? *target : v, e);
        }
        out.add_term(image, c);
    }
    return out;
}

Polynomial Polynomial::substitute(const std::function<std::optional<Polynomial>(VarId)>& fn) const {
    std::map<std::pair<VarId, int>, Polynomial> power_cache;
    auto power_of = [&](VarId v, int e, const Polynomial& image) -> const Polynomial& {
        auto key = std::make_pair(v, e);
        auto it = power_cache.find(key);
        if (it != power_cache.end()) return it->second;
        return power_cache.emplace(key, image.pow(e)).first->second;
    };
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Polynomial term_value{c};
        Monomial fixed;
        for (const auto& [v, e] : m.vars()) {
            auto image = fn(v);
            if (!image) {
                fixed = fixed * Monomial::variable(v, e);
            } else {
                term_value = term_value * power_of(v, e, *image);
            }
        }
        if (!fixed.is_constant()) term_value = term_value * Polynomial::term(fixed, Rational(1));
        out += term_value;
    }
    return out;
}

Polynomial Polynomial::set_family_zero(VarFamily family) const {
    Polynomial out;
    for (const auto& [m, c] : terms_)
        if (m.degree_in(family) == 0) out.terms_.emplace(m, c);
    return out;
}

Polynomial Polynomial::swap_xv_pair(int i, int j) const {
    return remap_variables([&](VarId v) -> std::optional<VarId> {
        if (v.family == VarFamily::X || v.family == VarFamily::V) {
            if (v.index == i) return VarId{v.family, j};
            if (v.index == j) return VarId{v.family, i};
        }
        return std::nullopt;
    });
}

Polynomial Polynomial::part_with_degree_in(VarFamily family, int degree) const {
    Polynomial out;
    for (const auto& [m, c] : terms_)
        if (m.degree_in(family) == degree) out.terms_.emplace(m, c);
    return out;
}

std::optional<Polynomial> try_exact_divide(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw std::domain_error("exact_divide: zero divisor");
    Polynomial quotient;
    Polynomial remainder = p;
    const auto& [lead_mono, lead_coeff] = q.leading_term();
    while (!remainder.is_zero()) {
        const auto& [rm, rc] = remainder.leading_term();
        Monomial factor;
        if (!rm.try_divide(lead_mono, factor)) return std::nullopt;
        Polynomial t = Polynomial::term(factor, rc / lead_coeff);
        quotient += t;
        remainder -= t * q;
    }
    return quotient;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
    auto r = try_exact_divide(p, q);
    if (!r) throw NotDivisible("exact_divide: quotient does not exist");
    return *r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (m.is_constant()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += m.to_string();
        } else {
            out += mag.to_string() + "*" + m.to_string();
        }
    }
    return out;
}

namespace {

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    std::string_view take_while(bool (*pred)(char)) {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && pred(text[pos])) ++pos;
        return text.substr(start, pos - start);
    }
};

bool is_digit_char(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

} // namespace

Polynomial Polynomial::parse(std::string_view text) {
    Scanner s{text};
    Polynomial out;
    bool first = true;
    while (!s.done()) {
        int sign = 1;
        char c = s.peek();
        if (c == '+' || c == '-') {
            if (c == '-') sign = -1;
            ++s.pos;
        } else if (!first) {
            throw std::invalid_argument("Polynomial::parse: missing term separator");
        }
        first = false;
        Rational coeff(sign);
        Monomial mono;
        bool saw_factor = false;
        while (true) {
            char head = s.peek();
            if (is_digit_char(head)) {
                std::string_view numerator = s.take_while(is_digit_char);
                std::string digits(numerator);
                if (s.peek() == '/') {
                    ++s.pos;
                    std::string_view denominator = s.take_while(is_digit_char);
                    if (denominator.empty())
                        throw std::invalid_argument("Polynomial::parse: missing denominator");
                    digits += "/";
                    digits += denominator;
                }
                coeff = coeff * Rational::from_string(digits);
                saw_factor = true;
            } else if (is_name_char(head)) {
                std::string_view name = s.take_while(is_name_char);
                std::string_view index = s.take_while(is_digit_char);
                VarId v;
                if (!parse_var(std::string(name) + std::string(index), v))
                    throw std::invalid_argument("Polynomial::parse: bad variable");
                int exponent = 1;
                if (s.peek() == '^') {
                    ++s.pos;
                    std::string_view e = s.take_while(is_digit_char);
                    if (e.empty()) throw std::invalid_argument("Polynomial::parse: bad exponent");
                    exponent = std::stoi(std::string(e));
                }
                mono = mono * Monomial::variable(v, exponent);
                saw_factor = true;
            } else {
                break;
            }
            if (s.peek() == '*') {
                ++s.pos;
                continue;
            }
            break;
        }
        if (!saw_factor) throw std::invalid_argument("Polynomial::parse: empty term");
        out.add_term(mono, coeff);
    }
    return out;
}

} // namespace wschur
