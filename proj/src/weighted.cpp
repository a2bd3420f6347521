#include "wschur/weighted.hpp"

namespace wschur {

namespace {

VarId weight_var(WeightAlphabet alphabet, int l) {
    return alphabet == WeightAlphabet::W ? var_w(l) : var_wp(l);
}

VarId deform_var(SchurAlphabet alphabet, int l) {
    return alphabet == SchurAlphabet::A ? var_a(l) : var_b(l);
}

} // namespace

Polynomial x_ch(int d) {
    Polynomial out;
    for (int i = 1; i <= d; ++i) out += Polynomial::variable(var_x(i));
    return out;
}

Polynomial v_ch(int d) {
    Polynomial out;
    for (int i = 1; i <= d; ++i) out += Polynomial::variable(var_v(i));
    return out;
}

Polynomial a_ch(int d, SchurAlphabet alphabet) {
    Polynomial out;
    for (int i = 1; i <= d; ++i) out += Polynomial::variable(deform_var(alphabet, i));
    return out;
}

Polynomial w_ch(int d, WeightAlphabet alphabet) {
    Polynomial out;
    for (int i = 1; i <= d; ++i) out += Polynomial::variable(weight_var(alphabet, i));
    return out;
}

Polynomial a_lambda(const Partition& lambda, SchurAlphabet alphabet) {
    Polynomial out;
    for (int entry : lambda.bar()) out += Polynomial::variable(deform_var(alphabet, entry));
    return out;
}

Polynomial w_lambda(const Partition& lambda, WeightAlphabet alphabet) {
    Polynomial out;
    for (int entry : lambda.bar()) out += Polynomial::variable(weight_var(alphabet, entry));
    return out;
}

LocalizedElem x_shifted(int i, int d) {
    Polynomial num =
        Polynomial::variable(var_x(i)) * v_ch(d) - Polynomial::variable(var_v(i)) * x_ch(d);
    return LocalizedElem(std::move(num), {DenomGen::v_ch(d)});
}

LocalizedElem a_shifted(int l, int d, SchurAlphabet a_alphabet, WeightAlphabet w_alphabet) {
    Polynomial num = Polynomial::variable(deform_var(a_alphabet, l)) * v_ch(d) -
                     Polynomial::variable(weight_var(w_alphabet, l)) * x_ch(d);
    return LocalizedElem(std::move(num), {DenomGen::v_ch(d)});
}

LocalizedElem zero_shifted(int l, int d, WeightAlphabet w_alphabet) {
    Polynomial num = -(Polynomial::variable(weight_var(w_alphabet, l)) * x_ch(d));
    return LocalizedElem(std::move(num), {DenomGen::v_ch(d)});
}

namespace {

// Substitutes the shifted alphabets cell by cell in the tableau formula.
// Every factor carries a single v_ch denominator, so no division is needed.
LocalizedElem weighted_schur_impl(const Partition& lambda, bool with_a, SchurAlphabet a_alphabet,
                                  WeightAlphabet w_alphabet) {
    const int d = lambda.d();
    LocalizedElem out;
    for (const Tableau& t : enumerate_ssyt(lambda)) {
        LocalizedElem product = LocalizedElem::one();
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (std::size_t j = 0; j < t[i].size(); ++j) {
                int entry = t[i][j];
                int content = static_cast<int>(j) - static_cast<int>(i);
                LocalizedElem factor =
                    with_a ? x_shifted(entry, d) -
                                 a_shifted(entry + content, d, a_alphabet, w_alphabet)
                           : x_shifted(entry, d) - zero_shifted(entry + content, d, w_alphabet);
                product = product * factor;
            }
        }
        out += product;
    }
    return out;
}

} // namespace

LocalizedElem weighted_factorial_schur(const Partition& lambda, SchurAlphabet a_alphabet,
                                       WeightAlphabet w_alphabet) {
    return weighted_schur_impl(lambda, true, a_alphabet, w_alphabet);
}

LocalizedElem weighted_schur(const Partition& lambda, WeightAlphabet w_alphabet) {
    return weighted_schur_impl(lambda, false, SchurAlphabet::A, w_alphabet);
}

namespace {

int checked_row_index(VarId v, int d) {
    if (v.index > d)
        throw std::invalid_argument("psi_mu: variable " + v.to_string() + " exceeds d=" +
                                    std::to_string(d));
    return v.index;
}

} // namespace

Polynomial psi_mu(const Polynomial& p, const Partition& mu) {
    std::vector<int> bar = mu.bar();
    return p.remap_variables([&](VarId v) -> std::optional<VarId> {
        if (v.family == VarFamily::X)
            return var_a(bar[static_cast<std::size_t>(checked_row_index(v, mu.d())) - 1]);
        return std::nullopt;
    });
}

LocalizedElem psi_mu_vw(const LocalizedElem& e, const Partition& mu) {
    std::vector<int> bar = mu.bar();
    Polynomial num = e.numerator().remap_variables([&](VarId v) -> std::optional<VarId> {
        if (v.family == VarFamily::X)
            return var_a(bar[static_cast<std::size_t>(checked_row_index(v, mu.d())) - 1]);
        if (v.family == VarFamily::V)
            return var_w(bar[static_cast<std::size_t>(checked_row_index(v, mu.d())) - 1]);
        return std::nullopt;
    });
    std::vector<DenomGen> den;
    den.reserve(e.denominator().size());
    for (const DenomGen& g : e.denominator()) {
        if (g.kind() == DenomGen::Kind::VCh) {
            if (g.d() != mu.d()) throw std::invalid_argument("psi_mu_vw: mismatched d");
            den.push_back(DenomGen::w_lambda(mu));
        } else {
            den.push_back(g);
        }
    }
    return LocalizedElem(std::move(num), std::move(den));
}

std::optional<LocalizedElem> vanishing_value(const Partition& lambda, const Partition& mu) {
    if (!mu.contains(lambda)) return LocalizedElem::zero();
    if (!(mu == lambda)) return std::nullopt;
    LocalizedElem out = LocalizedElem::one();
    Polynomial a_top = a_lambda(lambda);
    Polynomial w_top = w_lambda(lambda);
    for (const Partition& rho : lambda.lower_set()) {
        Polynomial num = w_lambda(rho) * a_top - w_top * a_lambda(rho);
        out = out * LocalizedElem(std::move(num), {DenomGen::w_lambda(lambda)});
    }
    return out;
}

LocalizedElem weighted_pieri_rhs(const Partition& lambda, bool factorial) {
    const int d = lambda.d();
    const DenomGen w_lam = DenomGen::w_lambda(lambda);
    LocalizedElem out;
    if (factorial) {
        Polynomial diag = w_ch(d, WeightAlphabet::WP) * a_lambda(lambda) -
                          a_ch(d, SchurAlphabet::B) * w_lambda(lambda);
        out += LocalizedElem(std::move(diag), {w_lam}) * weighted_factorial_schur(lambda);
    }
    LocalizedElem box_coeff(w_ch(d, WeightAlphabet::WP), {w_lam});
    for (const Partition& up : lambda.covers_adding_one_box()) {
        out += box_coeff * (factorial ? weighted_factorial_schur(up) : weighted_schur(up));
    }
    return out;
}

} // namespace wschur
