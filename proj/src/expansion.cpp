#include "wschur/expansion.hpp"

#include <algorithm>
#include <mutex>

#include "wschur/errors.hpp"

namespace wschur {

const char* basis_name(ExpansionBasis basis) {
    switch (basis) {
        case ExpansionBasis::FactorialA: return "factorial";
        case ExpansionBasis::WeightedFactorial: return "weightedFactorial";
        case ExpansionBasis::Weighted: return "weighted";
    }
    return "?";
}

ExpansionResult expand_factorial(const Polynomial& p, int d,
                                 const std::function<bool(const Partition&)>& filter) {
    ExpansionResult out;
    out.basis = ExpansionBasis::FactorialA;
    if (p.is_zero()) {
        out.residual_zero = true;
        return out;
    }
    const int bound = p.graded_degree() / 2;
    std::vector<Partition> candidates = enumerate_partitions(d, bound);
    if (filter) {
        candidates.erase(std::remove_if(candidates.begin(), candidates.end(),
                                        [&](const Partition& nu) { return !filter(nu); }),
                         candidates.end());
    }

    std::map<Partition, Polynomial> basis_cache;
    auto basis_poly = [&](const Partition& nu) -> const Polynomial& {
        auto it = basis_cache.find(nu);
        if (it != basis_cache.end()) return it->second;
        return basis_cache.emplace(nu, factorial_schur_tableaux(nu)).first->second;
    };

    std::map<Partition, Polynomial> coeffs;
    for (const Partition& nu : candidates) {
        Polynomial t = psi_mu(p, nu);
        for (const auto& [rho, f_rho] : coeffs) {
            if (nu.contains(rho)) t -= f_rho * psi_mu(basis_poly(rho), nu);
        }
        if (t.is_zero()) continue;
        auto f = try_exact_divide(t, psi_mu(basis_poly(nu), nu));
        if (!f)
            throw NotInSpan("expand_factorial: coefficient division failed at " + nu.to_string());
        coeffs.emplace(nu, std::move(*f));
    }

    Polynomial residual = p;
    for (const auto& [nu, f] : coeffs) residual -= f * basis_poly(nu);
    if (!residual.is_zero())
        throw NotInSpan("expand_factorial: nonzero residual at degree bound " +
                        std::to_string(bound));

    for (auto& [nu, f] : coeffs) out.coefficients.emplace(nu, LocalizedElem(std::move(f)));
    out.residual = LocalizedElem(std::move(residual));
    out.residual_zero = true;
    return out;
}

ExpansionResult structure_constants(const Partition& lambda, const Partition& mu) {
    if (lambda.d() != mu.d()) throw std::invalid_argument("structure_constants: mismatched d");
    Polynomial p =
        factorial_schur_tableaux(lambda, SchurAlphabet::B) * factorial_schur_tableaux(mu);
    ExpansionResult out =
        expand_factorial(p, lambda.d(), [&](const Partition& nu) { return nu.contains(mu); });
    const int bound = lambda.size() + mu.size();
    for (const auto& [nu, f] : out.coefficients) {
        if (!nu.contains(mu) || nu.size() > bound)
            throw NotInSpan("structure_constants: support violation at " + nu.to_string());
    }
    return out;
}

namespace {

// Shared memoization for the weighted sweeps: basis elements, their psi
// images, diagonal vanishing values, and the weighted->factorial conversion
// columns. All entries are immutable once inserted; a mutex guards insertion
// so parallel verification sweeps stay safe and deterministic.
class SweepCache {
public:
    static SweepCache& instance() {
        static SweepCache cache;
        return cache;
    }

    const LocalizedElem& basis_elem(bool with_a, const Partition& nu) {
        std::scoped_lock lock(mutex_);
        return basis_unlocked(with_a, nu);
    }

    const LocalizedElem& psi_image(bool with_a, const Partition& rho, const Partition& nu) {
        std::scoped_lock lock(mutex_);
        auto key = std::make_tuple(with_a, rho, nu);
        auto it = psi_.find(key);
        if (it != psi_.end()) return it->second;
        LocalizedElem value = psi_mu_vw(basis_unlocked(with_a, rho), nu).normalized();
        return psi_.emplace(std::move(key), std::move(value)).first->second;
    }

    const LocalizedElem& diagonal(const Partition& nu) {
        std::scoped_lock lock(mutex_);
        auto it = diagonal_.find(nu);
        if (it != diagonal_.end()) return it->second;
        return diagonal_.emplace(nu, *vanishing_value(nu, nu)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<bool, Partition>, LocalizedElem> basis_;
    std::map<std::tuple<bool, Partition, Partition>, LocalizedElem> psi_;
    std::map<Partition, LocalizedElem> diagonal_;

    const LocalizedElem& basis_unlocked(bool with_a, const Partition& nu) {
        auto key = std::make_tuple(with_a, nu);
        auto it = basis_.find(key);
        if (it != basis_.end()) return it->second;
        LocalizedElem value = with_a ? weighted_factorial_schur(nu) : weighted_schur(nu);
        return basis_.emplace(std::move(key), std::move(value)).first->second;
    }
};

// Triangular interpolation over the weighted factorial basis.
std::map<Partition, LocalizedElem> weighted_factorial_sweep(const LocalizedElem& e, int d,
                                                            int degree_bound) {
    SweepCache& cache = SweepCache::instance();
    std::map<Partition, LocalizedElem> coeffs;
    for (const Partition& nu : enumerate_partitions(d, degree_bound)) {
        std::vector<LocalizedElem> parts{psi_mu_vw(e, nu)};
        for (const auto& [rho, f_rho] : coeffs) {
            if (nu.contains(rho)) parts.push_back(-(f_rho * cache.psi_image(true, rho, nu)));
        }
        LocalizedElem t = loc_sum(parts).normalized();
        if (t.is_zero()) continue;
        auto f = try_loc_divide(t, cache.diagonal(nu));
        if (!f)
            throw NotInSpan("weighted expansion: coefficient division failed at " +
                            nu.to_string());
        LocalizedElem coeff = f->normalized();
        if (!coeff.denominator_only_w_lambda())
            throw MembershipViolation("weighted expansion: coefficient at " + nu.to_string() +
                                      " left the localized coefficient ring");
        coeffs.emplace(nu, std::move(coeff));
    }
    return coeffs;
}

LocalizedElem recombine_residual(const std::map<Partition, LocalizedElem>& coeffs, bool with_a,
                                 const LocalizedElem& e) {
    SweepCache& cache = SweepCache::instance();
    std::vector<LocalizedElem> parts{e};
    for (const auto& [nu, f] : coeffs) parts.push_back(-(f * cache.basis_elem(with_a, nu)));
    return loc_sum(parts);
}

// Expansion of the a-free basis element s_nu^w(v;x) over the factorial one;
// unitriangular by size blocks.
const std::map<Partition, LocalizedElem>& conversion_column(int d, const Partition& nu) {
    static std::mutex mutex;
    static std::map<Partition, std::map<Partition, LocalizedElem>> columns;
    std::scoped_lock lock(mutex);
    auto it = columns.find(nu);
    if (it != columns.end()) return it->second;
    std::map<Partition, LocalizedElem> column =
        weighted_factorial_sweep(SweepCache::instance().basis_elem(false, nu), d, nu.size());
    for (const auto& [sigma, entry] : column) {
        if (sigma.size() == nu.size()) {
            bool ok = sigma == nu ? loc_equal(entry, LocalizedElem::one()) : entry.is_zero();
            if (!ok)
                throw Mismatch("weighted basis conversion is not unitriangular at " +
                               nu.to_string());
        }
    }
    return columns.emplace(nu, std::move(column)).first->second;
}

} // namespace

ExpansionResult weighted_expand_interpolate(const LocalizedElem& e, int d, int degree_bound,
                                            ExpansionBasis basis) {
    if (basis == ExpansionBasis::FactorialA)
        throw std::invalid_argument("weighted_expand_interpolate: weighted bases only");
    ExpansionResult out;
    out.basis = basis;

    std::map<Partition, LocalizedElem> f = weighted_factorial_sweep(e, d, degree_bound);

    if (basis == ExpansionBasis::WeightedFactorial) {
        out.coefficients = std::move(f);
        if (!recombine_residual(out.coefficients, true, e).is_zero())
            throw NotInSpan("weighted_expand_interpolate: nonzero residual at degree bound " +
                            std::to_string(degree_bound));
        out.residual = LocalizedElem::zero();
        out.residual_zero = true;
        return out;
    }

    // Weighted basis: back-substitute through the conversion columns by
    // descending size; the same-size blocks are the identity.
    std::vector<Partition> candidates = enumerate_partitions(d, degree_bound);
    std::map<Partition, LocalizedElem> g;
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
        const Partition& nu = *it;
        std::vector<LocalizedElem> parts;
        if (auto found = f.find(nu); found != f.end()) parts.push_back(found->second);
        for (const auto& [tau, g_tau] : g) {
            if (tau.size() <= nu.size()) continue;
            const auto& column = conversion_column(d, tau);
            if (auto entry = column.find(nu); entry != column.end())
                parts.push_back(-(entry->second * g_tau));
        }
        LocalizedElem value = loc_sum(parts).normalized();
        if (value.is_zero()) continue;
        if (!value.denominator_only_w_lambda())
            throw MembershipViolation("weighted expansion: coefficient at " + nu.to_string() +
                                      " left the localized coefficient ring");
        g.emplace(nu, std::move(value));
    }

    out.coefficients = std::move(g);
    if (!recombine_residual(out.coefficients, false, e).is_zero())
        throw NotInSpan("weighted_expand_interpolate: nonzero residual at degree bound " +
                        std::to_string(degree_bound));
    out.residual = LocalizedElem::zero();
    out.residual_zero = true;
    return out;
}

ExpansionResult weighted_expand_pieri(const std::map<Partition, LocalizedElem>& form, int d,
                                      ExpansionBasis basis) {
    if (basis == ExpansionBasis::FactorialA)
        throw std::invalid_argument("weighted_expand_pieri: weighted bases only");
    const bool factorial = basis == ExpansionBasis::WeightedFactorial;
    const Polynomial xch = x_ch(d);
    const Polynomial vch = v_ch(d);

    std::map<Partition, LocalizedElem> work = form;
    while (true) {
        // Pick the coefficient of the highest x-degree; additions from one
        // elimination step always sit strictly below it.
        const Partition* target = nullptr;
        int max_deg = 0;
        for (const auto& [nu, coeff] : work) {
            int deg = coeff.numerator().degree_in(VarFamily::X);
            if (deg > max_deg) {
                max_deg = deg;
                target = &nu;
            }
        }
        if (!target) break;
        const Partition nu = *target;
        const LocalizedElem coeff = work.at(nu);

        Polynomial x_free_part;
        Polynomial x_part;
        for (const auto& [m, c] : coeff.numerator().terms()) {
            if (m.degree_in(VarFamily::X) == 0)
                x_free_part += Polynomial::term(m, c);
            else
                x_part += Polynomial::term(m, c);
        }
        auto reduced = try_exact_divide(x_part, xch);
        if (!reduced)
            throw std::invalid_argument(
                "weighted_expand_pieri: coefficient is not a polynomial in x_ch/v_ch at " +
                nu.to_string());
        // coeff = x-free part + (x_ch/v_ch) * rest
        LocalizedElem rest(std::move(*reduced) * vch, coeff.denominator());
        rest = rest.normalized();
        work[nu] = LocalizedElem(std::move(x_free_part), coeff.denominator());

        const DenomGen w_nu = DenomGen::w_lambda(nu);
        if (factorial) {
            // (x_ch/v_ch) s_nu^w(v;x|a) = (a_nu/w_nu) s_nu^w + sum (1/w_nu) s_nu'^w
            work[nu] += (rest * LocalizedElem(a_lambda(nu))).over(w_nu);
        }
        for (const Partition& up : nu.covers_adding_one_box()) {
            auto it = work.find(up);
            LocalizedElem add = rest.over(w_nu);
            if (it == work.end())
                work.emplace(up, std::move(add));
            else
                it->second += add;
        }
    }

    ExpansionResult out;
    out.basis = basis;
    for (auto& [nu, coeff] : work) {
        LocalizedElem value = coeff.normalized();
        if (value.is_zero()) continue;
        if (value.numerator().uses_family(VarFamily::X) ||
            value.numerator().uses_family(VarFamily::V) || !value.denominator_only_w_lambda())
            throw MembershipViolation("weighted_expand_pieri: coefficient at " + nu.to_string() +
                                      " did not reduce into the localized coefficient ring");
        out.coefficients.emplace(nu, std::move(value));
    }

    // Residual certificate against the value of the input form.
    SweepCache& cache = SweepCache::instance();
    std::vector<LocalizedElem> parts;
    for (const auto& [nu, coeff] : form)
        parts.push_back(coeff * cache.basis_elem(factorial, nu));
    LocalizedElem original = loc_sum(parts);
    if (!recombine_residual(out.coefficients, factorial, original).is_zero())
        throw NotInSpan("weighted_expand_pieri: reduction did not preserve the input value");
    out.residual = LocalizedElem::zero();
    out.residual_zero = true;
    return out;
}

std::map<Partition, LocalizedElem> shifted_ms_form(const Partition& lambda, const Partition& mu,
                                                   bool basis_zero, bool upper_zero) {
    const int d = lambda.d();
    ExpansionResult constants = structure_constants(lambda, mu);
    auto image = [&](bool zero, int l) { return zero ? zero_shifted(l, d) : a_shifted(l, d); };
    std::map<Partition, LocalizedElem> out;
    for (const auto& [nu, coeff] : constants.coefficients) {
        LocalizedElem value =
            substitute(coeff.numerator(), [&](VarId v) -> std::optional<LocalizedElem> {
                if (v.family == VarFamily::A) return image(basis_zero, v.index);
                if (v.family == VarFamily::B) return image(upper_zero, v.index);
                return std::nullopt;
            });
        if (!value.is_zero()) out.emplace(nu, std::move(value));
    }
    return out;
}

} // namespace wschur
