#include "wschur/grassmann.hpp"

#include <algorithm>

#include "wschur/errors.hpp"
#include "wschur/parallel.hpp"

namespace wschur {

void WeightConfig::validate() const {
    if (d < 1) throw std::invalid_argument("WeightConfig: d must be positive");
    if (n <= d) throw std::invalid_argument("WeightConfig: n must exceed d");
    if (static_cast<int>(itw.size()) != n)
        throw std::invalid_argument("WeightConfig: itw must have exactly n entries");
    for (long long w : itw)
        if (w < 0) throw std::invalid_argument("WeightConfig: weights must be nonnegative");
    if (u < 1) throw std::invalid_argument("WeightConfig: u must be positive");
}

Rational WeightConfig::w_lambda_image(const Partition& lambda) const {
    Rational out;
    for (int entry : lambda.bar()) out += w_image(entry);
    return out;
}

WeightConfig WeightConfig::drop_last_stage() const {
    WeightConfig out = *this;
    out.n -= 1;
    out.itw.pop_back();
    out.validate();
    return out;
}

std::string WeightConfig::to_string() const {
    std::string out = "d=" + std::to_string(d) + " n=" + std::to_string(n) + " itw=";
    for (std::size_t i = 0; i < itw.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(itw[i]);
    }
    return out + " u=" + std::to_string(u);
}

Polynomial phi_n(const Polynomial& p, const WeightConfig& cfg) {
    return p.substitute([&](VarId v) -> std::optional<Polynomial> {
        switch (v.family) {
            case VarFamily::W: return Polynomial(cfg.w_image(v.index));
            case VarFamily::A:
                if (v.index <= cfg.n)
                    return -Polynomial::variable(var_y(cfg.n + 1 - v.index));
                return Polynomial();
            case VarFamily::Y: return std::nullopt;
            default:
                throw std::invalid_argument("phi_n: input contains a variable outside "
                                            "the localized coefficient ring: " +
                                            v.to_string());
        }
    });
}

Polynomial phi_n(const LocalizedElem& e, const WeightConfig& cfg) {
    Polynomial out = phi_n(e.numerator(), cfg);
    for (const DenomGen& g : e.denominator()) {
        if (g.kind() != DenomGen::Kind::WLambda)
            throw std::invalid_argument("phi_n: denominator generator " + g.to_string() +
                                        " has no finite-stage image");
        out = out * cfg.w_lambda_image(g.lambda()).reciprocal();
    }
    return out;
}

Polynomial restriction_via_phi(const Partition& lambda, const Partition& mu,
                               const WeightConfig& cfg) {
    if (lambda.d() != cfg.d || mu.d() != cfg.d)
        throw std::invalid_argument("restriction_via_phi: partition d does not match the config");
    return phi_n(psi_mu_vw(weighted_factorial_schur(lambda), mu), cfg);
}

Polynomial restriction_direct(const Partition& lambda, const Partition& mu,
                              const WeightConfig& cfg) {
    if (lambda.d() != cfg.d || mu.d() != cfg.d)
        throw std::invalid_argument("restriction_direct: partition d does not match the config");
    if (!lambda.in_rectangle(cfg.n) || !mu.in_rectangle(cfg.n))
        throw NotInRectangle("restriction_direct: classes must lie in P(d,n)");
    std::vector<int> subset = mu.to_subset(cfg.n);
    Polynomial y_mu;
    Rational q_mu;
    for (int j : subset) {
        y_mu += Polynomial::variable(var_y(j));
        q_mu += cfg.q(j);
    }
    auto y_shifted = [&](int i) { return Polynomial::variable(var_y(i)) - y_mu * (cfg.q(i) / q_mu); };

    Polynomial s = factorial_schur_tableaux(lambda);
    return s.substitute([&](VarId v) -> std::optional<Polynomial> {
        if (v.family == VarFamily::X)
            return -y_shifted(subset[static_cast<std::size_t>(v.index) - 1]);
        if (v.family == VarFamily::A) {
            if (v.index > cfg.n) return Polynomial();
            return -y_shifted(cfg.n + 1 - v.index);
        }
        return std::nullopt;
    });
}

RestrictionTable build_table(const WeightConfig& cfg) {
    cfg.validate();
    RestrictionTable table;
    table.cfg = cfg;
    table.classes = enumerate_partitions(cfg.d, cfg.d * (cfg.n - cfg.d), cfg.n - cfg.d);
    std::vector<std::vector<Polynomial>> rows =
        parallel_map(table.classes, [&](const Partition& lambda) {
            LocalizedElem cls = weighted_factorial_schur(lambda);
            std::vector<Polynomial> row;
            row.reserve(table.classes.size());
            for (const Partition& mu : table.classes)
                row.push_back(phi_n(psi_mu_vw(cls, mu), cfg));
            return row;
        });
    for (std::size_t i = 0; i < table.classes.size(); ++i)
        for (std::size_t j = 0; j < table.classes.size(); ++j)
            table.entries.emplace(std::make_pair(table.classes[i], table.classes[j]),
                                  std::move(rows[i][j]));
    return table;
}

const Polynomial& RestrictionTable::entry(const Partition& lambda, const Partition& mu) const {
    auto it = entries.find(std::make_pair(lambda, mu));
    if (it == entries.end())
        throw std::out_of_range("RestrictionTable: no entry for " + lambda.to_string() + " at " +
                                mu.to_string());
    return it->second;
}

std::map<Partition, Polynomial> expand_over_table(const RestrictionTable& table,
                                                  const std::map<Partition, Polynomial>& values) {
    std::map<Partition, Polynomial> remaining = values;
    std::map<Partition, Polynomial> coeffs;
    for (const Partition& nu : table.classes) {
        auto it = remaining.find(nu);
        Polynomial target = it == remaining.end() ? Polynomial() : it->second;
        if (target.is_zero()) continue;
        auto c = try_exact_divide(target, table.entry(nu, nu));
        if (!c)
            throw Mismatch("expand_over_table: value at " + nu.to_string() +
                           " is not divisible by the diagonal entry");
        if (c->is_zero()) continue;
        for (const Partition& sigma : table.classes) {
            const Polynomial& row = table.entry(nu, sigma);
            if (row.is_zero()) continue;
            remaining[sigma] -= *c * row;
        }
        coeffs.emplace(nu, std::move(*c));
    }
    for (const auto& [sigma, rest] : remaining) {
        if (!rest.is_zero())
            throw Mismatch("expand_over_table: residual at fixed point " + sigma.to_string());
    }
    return coeffs;
}

void CheckReport::require(bool condition, const std::string& what) {
    if (!condition) {
        ok = false;
        failures.push_back(what);
    }
}

CheckReport check_table_invariants(const RestrictionTable& table) {
    CheckReport report;
    for (const Partition& lambda : table.classes) {
        for (const Partition& mu : table.classes) {
            const Polynomial& value = table.entry(lambda, mu);
            if (!mu.contains(lambda)) {
                report.require(value.is_zero(), "entry (" + lambda.to_string() + "," +
                                                    mu.to_string() + ") should vanish");
            }
            if (mu == lambda) {
                report.require(!value.is_zero(),
                               "diagonal entry at " + lambda.to_string() + " should be nonzero");
            }
            if (!value.is_zero()) {
                report.require(value.is_homogeneous_graded() &&
                                   value.graded_degree() == 2 * lambda.size(),
                               "entry (" + lambda.to_string() + "," + mu.to_string() +
                                   ") should be homogeneous of degree " +
                                   std::to_string(2 * lambda.size()));
            }
        }
    }
    return report;
}

namespace {

bool in_table(const RestrictionTable& table, const Partition& lambda) {
    return lambda.in_rectangle(table.cfg.n);
}

} // namespace

// Fixed-point row of the equivariant image of the a-free weighted function:
// the weighted function expands over the factorial basis, each coefficient
// maps through phi_n, and the rectangle classes contribute their rows.
const std::map<Partition, Polynomial>& HomomorphismVerifier::weighted_row(const Partition& nu) {
    auto it = rows_.find(nu);
    if (it != rows_.end()) return it->second;
    ExpansionResult over_factorial = weighted_expand_interpolate(
        weighted_schur(nu), nu.d(), nu.size(), ExpansionBasis::WeightedFactorial);
    std::map<Partition, Polynomial> row;
    for (const Partition& sigma : table_.classes) row.emplace(sigma, Polynomial());
    for (const auto& [tau, coeff] : over_factorial.coefficients) {
        if (!in_table(table_, tau)) continue;
        Polynomial c = phi_n(coeff, table_.cfg);
        for (const Partition& sigma : table_.classes) row[sigma] += c * table_.entry(tau, sigma);
    }
    return rows_.emplace(nu, std::move(row)).first->second;
}

CheckReport HomomorphismVerifier::check(const Partition& lambda, const Partition& mu) {
    CheckReport report;
    const WeightConfig& cfg = table_.cfg;
    const int bound = lambda.size() + mu.size();

    // Factorial side: expand s_lambda^w(v;x|a) s_mu^w(v;x|a) and compare the
    // coefficient-weighted row sums with the pointwise products.
    {
        LocalizedElem product = weighted_factorial_schur(lambda) * weighted_factorial_schur(mu);
        ExpansionResult expansion = weighted_expand_interpolate(
            product, cfg.d, bound, ExpansionBasis::WeightedFactorial);
        report.require(expansion.residual_zero, "factorial product expansion must close");
        for (const Partition& sigma : table_.classes) {
            Polynomial lhs = in_table(table_, lambda) && in_table(table_, mu)
                                 ? table_.entry(lambda, sigma) * table_.entry(mu, sigma)
                                 : restriction_via_phi(lambda, sigma, cfg) *
                                       restriction_via_phi(mu, sigma, cfg);
            Polynomial rhs;
            for (const auto& [nu, coeff] : expansion.coefficients) {
                if (!in_table(table_, nu)) continue;
                rhs += phi_n(coeff, cfg) * table_.entry(nu, sigma);
            }
            report.require(lhs == rhs, "factorial product consistency fails at fixed point " +
                                           sigma.to_string() + " for " + lambda.to_string() +
                                           " * " + mu.to_string());
        }
    }

    // Weighted (a-free) side: same consistency through the rows of the
    // equivariant images of the weighted functions.
    {
        LocalizedElem product = weighted_schur(lambda) * weighted_schur(mu);
        ExpansionResult expansion =
            weighted_expand_interpolate(product, cfg.d, bound, ExpansionBasis::Weighted);
        report.require(expansion.residual_zero, "weighted product expansion must close");
        const auto& row_l = weighted_row(lambda);
        const auto& row_m = weighted_row(mu);
        for (const auto& [nu, coeff] : expansion.coefficients) weighted_row(nu);
        for (const Partition& sigma : table_.classes) {
            Polynomial lhs = row_l.at(sigma) * row_m.at(sigma);
            Polynomial rhs;
            for (const auto& [nu, coeff] : expansion.coefficients)
                rhs += phi_n(coeff, cfg) * weighted_row(nu).at(sigma);
            report.require(lhs == rhs, "weighted product consistency fails at fixed point " +
                                           sigma.to_string() + " for " + lambda.to_string() +
                                           " * " + mu.to_string());
        }
    }
    return report;
}

CheckReport verify_homomorphism(const RestrictionTable& table, const Partition& lambda,
                                const Partition& mu) {
    HomomorphismVerifier verifier(table);
    return verifier.check(lambda, mu);
}

CheckReport check_kills_outside(const RestrictionTable& table, const Partition& lambda) {
    CheckReport report;
    report.require(!in_table(table, lambda), "class " + lambda.to_string() +
                                                 " lies inside the rectangle; nothing to check");
    for (const Partition& mu : table.classes) {
        report.require(restriction_via_phi(lambda, mu, table.cfg).is_zero(),
                       "image of " + lambda.to_string() + " should vanish at " + mu.to_string());
    }
    return report;
}

namespace {

Polynomial stage_projection(const Polynomial& p) {
    return p.substitute([&](VarId v) -> std::optional<Polynomial> {
        if (v.family != VarFamily::Y) return std::nullopt;
        if (v.index == 1) return Polynomial();
        return Polynomial::variable(var_y(v.index - 1));
    });
}

} // namespace

CheckReport pullback_check(const WeightConfig& cfg_next) {
    cfg_next.validate();
    CheckReport report;
    WeightConfig cfg = cfg_next.drop_last_stage();
    RestrictionTable next = build_table(cfg_next);
    RestrictionTable current = build_table(cfg);

    // The fixed-point embedding mu -> {mu_1+1, ..., mu_d+1} keeps the
    // bar-sequence, so stage-n classes reappear verbatim at stage n+1.
    for (const Partition& lambda : next.classes) {
        bool inner = lambda.in_rectangle(cfg.n);
        for (const Partition& mu : current.classes) {
            Polynomial pulled = stage_projection(next.entry(lambda, mu));
            Polynomial expected = inner ? current.entry(lambda, mu) : Polynomial();
            report.require(pulled == expected,
                           "pullback mismatch for class " + lambda.to_string() +
                               " at fixed point " + mu.to_string());
        }
    }

    // Nonequivariant structure constants from the table solve agree across
    // the stages on the shared classes.
    for (const Partition& lambda : current.classes) {
        for (const Partition& mu : current.classes) {
            std::map<Partition, Polynomial> small_product, big_product;
            for (const Partition& sigma : current.classes)
                small_product.emplace(sigma, current.entry(lambda, sigma) *
                                                 current.entry(mu, sigma));
            for (const Partition& sigma : next.classes)
                big_product.emplace(sigma, next.entry(lambda, sigma) * next.entry(mu, sigma));
            std::map<Partition, Polynomial> small_coeffs = expand_over_table(current, small_product);
            std::map<Partition, Polynomial> big_coeffs = expand_over_table(next, big_product);
            for (const Partition& nu : current.classes) {
                Rational lhs = small_coeffs.count(nu)
                                   ? small_coeffs.at(nu).set_family_zero(VarFamily::Y).constant_term()
                                   : Rational();
                Rational rhs = big_coeffs.count(nu)
                                   ? big_coeffs.at(nu).set_family_zero(VarFamily::Y).constant_term()
                                   : Rational();
                report.require(lhs == rhs, "nonequivariant structure constant for " +
                                               nu.to_string() + " in " + lambda.to_string() +
                                               " * " + mu.to_string() +
                                               " changed across stages");
            }
        }
    }
    return report;
}

LocalizedElem evaluate_weights(const Partition& lambda, const WeightConfig& cfg, bool factorial) {
    cfg.validate();
    LocalizedElem e = factorial ? weighted_factorial_schur(lambda) : weighted_schur(lambda);
    int max_w = e.numerator().max_index_in(VarFamily::W);
    if (max_w > cfg.n)
        throw IndexOutOfConfig("evaluate_weights: w index " + std::to_string(max_w) +
                               " exceeds stage " + std::to_string(cfg.n));
    Polynomial num = e.numerator().substitute([&](VarId v) -> std::optional<Polynomial> {
        if (v.family == VarFamily::W) return Polynomial(cfg.w_image(v.index));
        return std::nullopt;
    });
    return LocalizedElem(std::move(num), e.denominator());
}

} // namespace wschur
