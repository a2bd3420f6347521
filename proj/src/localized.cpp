#include "wschur/localized.hpp"

#include <algorithm>

namespace wschur {

Polynomial DenomGen::expand() const {
    Polynomial out;
    switch (kind_) {
        case Kind::VCh:
            for (int i = 1; i <= d_; ++i) out += Polynomial::variable(var_v(i));
            break;
        case Kind::WLambda:
            for (int entry : lambda_->bar()) out += Polynomial::variable(var_w(entry));
            break;
        case Kind::WPrimeCh:
            for (int i = 1; i <= d_; ++i) out += Polynomial::variable(var_wp(i));
            break;
    }
    return out;
}

std::string DenomGen::to_string() const {
    switch (kind_) {
        case Kind::VCh: return "vch";
        case Kind::WLambda: return "w" + lambda_->to_string();
        case Kind::WPrimeCh: return "wpch";
    }
    return "?";
}

LocalizedElem::LocalizedElem(Polynomial numerator, std::vector<DenomGen> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    std::sort(den_.begin(), den_.end());
    canonicalize();
}

void LocalizedElem::canonicalize() {
    if (num_.is_zero()) den_.clear();
}

Polynomial LocalizedElem::denominator_expanded() const {
    Polynomial out{Rational(1)};
    for (const DenomGen& g : den_) out = out * g.expand();
    return out;
}

bool LocalizedElem::denominator_only_w_lambda() const {
    return std::all_of(den_.begin(), den_.end(),
                       [](const DenomGen& g) { return g.kind() == DenomGen::Kind::WLambda; });
}

LocalizedElem LocalizedElem::operator-() const {
    LocalizedElem out = *this;
    out.num_ = -out.num_;
    return out;
}

namespace {

// Multiset difference a \ b (both sorted).
std::vector<DenomGen> multiset_diff(const std::vector<DenomGen>& a,
                                    const std::vector<DenomGen>& b) {
    std::vector<DenomGen> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<DenomGen> multiset_union_max(const std::vector<DenomGen>& a,
                                         const std::vector<DenomGen>& b) {
    std::vector<DenomGen> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Polynomial expand_gens(const std::vector<DenomGen>& gens) {
    Polynomial out{Rational(1)};
    for (const DenomGen& g : gens) out = out * g.expand();
    return out;
}

} // namespace

LocalizedElem LocalizedElem::operator+(const LocalizedElem& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    std::vector<DenomGen> lcm = multiset_union_max(den_, rhs.den_);
    Polynomial left = num_ * expand_gens(multiset_diff(lcm, den_));
    Polynomial right = rhs.num_ * expand_gens(multiset_diff(lcm, rhs.den_));
    return LocalizedElem(left + right, std::move(lcm));
}

LocalizedElem LocalizedElem::operator-(const LocalizedElem& rhs) const { return *this + (-rhs); }

LocalizedElem LocalizedElem::operator*(const LocalizedElem& rhs) const {
    if (is_zero() || rhs.is_zero()) return LocalizedElem();
    std::vector<DenomGen> den = den_;
    den.insert(den.end(), rhs.den_.begin(), rhs.den_.end());
    return LocalizedElem(num_ * rhs.num_, std::move(den));
}

LocalizedElem LocalizedElem::operator*(const Rational& scalar) const {
    if (scalar.is_zero()) return LocalizedElem();
    LocalizedElem out = *this;
    out.num_ = out.num_ * scalar;
    return out;
}

LocalizedElem LocalizedElem::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("LocalizedElem: negative power");
    LocalizedElem out = one();
    for (int i = 0; i < exponent; ++i) out = out * *this;
    return out;
}

LocalizedElem LocalizedElem::over(const DenomGen& gen) const {
    if (is_zero()) return LocalizedElem();
    std::vector<DenomGen> den = den_;
    den.push_back(gen);
    return LocalizedElem(num_, std::move(den));
}

LocalizedElem LocalizedElem::over(const std::vector<DenomGen>& gens) const {
    if (is_zero()) return LocalizedElem();
    std::vector<DenomGen> den = den_;
    den.insert(den.end(), gens.begin(), gens.end());
    return LocalizedElem(num_, std::move(den));
}

LocalizedElem LocalizedElem::normalized() const {
    if (is_zero()) return LocalizedElem();
    Polynomial num = num_;
    std::vector<DenomGen> den;
    std::size_t i = 0;
    while (i < den_.size()) {
        const DenomGen& g = den_[i];
        std::size_t multiplicity = 1;
        while (i + multiplicity < den_.size() && den_[i + multiplicity] == g) ++multiplicity;
        Polynomial expanded = g.expand();
        std::size_t kept = multiplicity;
        while (kept > 0) {
            auto q = try_exact_divide(num, expanded);
            if (!q) break;
            num = std::move(*q);
            --kept;
        }
        for (std::size_t k = 0; k < kept; ++k) den.push_back(g);
        i += multiplicity;
    }
    return LocalizedElem(std::move(num), std::move(den));
}

std::string LocalizedElem::to_string() const {
    if (den_.empty()) return num_.to_string();
    std::string out = "(" + num_.to_string() + ") / (";
    for (std::size_t i = 0; i < den_.size(); ++i) {
        if (i) out += " * ";
        out += "(" + den_[i].expand().to_string() + ")";
    }
    return out + ")";
}

bool loc_equal(const LocalizedElem& e1, const LocalizedElem& e2) {
    // Only the non-shared generators need expanding.
    std::vector<DenomGen> common;
    std::set_intersection(e1.denominator().begin(), e1.denominator().end(),
                          e2.denominator().begin(), e2.denominator().end(),
                          std::back_inserter(common));
    Polynomial left = e1.numerator() * expand_gens(multiset_diff(e2.denominator(), common));
    Polynomial right = e2.numerator() * expand_gens(multiset_diff(e1.denominator(), common));
    return left == right;
}

LocalizedElem loc_sum(const std::vector<LocalizedElem>& elems) {
    std::vector<DenomGen> lcm;
    for (const LocalizedElem& e : elems) {
        if (e.is_zero()) continue;
        lcm = multiset_union_max(lcm, e.denominator());
    }
    Polynomial num;
    for (const LocalizedElem& e : elems) {
        if (e.is_zero()) continue;
        num += e.numerator() * expand_gens(multiset_diff(lcm, e.denominator()));
    }
    return LocalizedElem(std::move(num), std::move(lcm));
}

std::optional<LocalizedElem> try_loc_divide(const LocalizedElem& e1, const LocalizedElem& e2) {
    if (e2.is_zero()) throw std::domain_error("try_loc_divide: division by zero");
    if (e1.is_zero()) return LocalizedElem();
    Polynomial cleared = e1.numerator() * expand_gens(e2.denominator());
    auto q = try_exact_divide(cleared, e2.numerator());
    if (!q) return std::nullopt;
    return LocalizedElem(std::move(*q), e1.denominator());
}

LocalizedElem substitute(const Polynomial& p,
                         const std::function<std::optional<LocalizedElem>(VarId)>& fn) {
    std::map<std::pair<VarId, int>, LocalizedElem> power_cache;
    auto power_of = [&](VarId v, int e, const LocalizedElem& image) -> const LocalizedElem& {
        auto key = std::make_pair(v, e);
        auto it = power_cache.find(key);
        if (it != power_cache.end()) return it->second;
        return power_cache.emplace(key, image.pow(e)).first->second;
    };
    LocalizedElem out;
    for (const auto& [m, c] : p.terms()) {
        LocalizedElem term_value{Polynomial(c)};
        Monomial fixed;
        for (const auto& [v, e] : m.vars()) {
            auto image = fn(v);
            if (!image) {
                fixed = fixed * Monomial::variable(v, e);
            } else {
                term_value = term_value * power_of(v, e, *image);
            }
        }
        if (!fixed.is_constant())
            term_value = term_value * LocalizedElem(Polynomial::term(fixed, Rational(1)));
        out += term_value;
    }
    return out;
}

bool is_symmetric(const LocalizedElem& e, int d) {
    // Denominator generators are (x,v)-symmetric, so only the numerator moves.
    for (int i = 1; i < d; ++i) {
        if (!(e.numerator().swap_xv_pair(i, i + 1) == e.numerator())) return false;
    }
    return true;
}

} // namespace wschur
