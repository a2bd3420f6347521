#pragma once

#include <map>
#include <string>
#include <vector>

#include "wschur/expansion.hpp"

namespace wschur {

// Finite-stage weight data: row bound d, stage n > d, the first n entries
// of the nonnegative weight sequence, and the positive twist u. Weight
// entries beyond stage n evaluate as 0.
struct WeightConfig {
    int d = 2;
    int n = 4;
    std::vector<long long> itw;
    long long u = 1;

    void validate() const;

    long long itw_at(int l) const { return l >= 1 && l <= n ? itw[static_cast<std::size_t>(l) - 1] : 0; }
    // Image of w_l: itw_l + u/d.
    Rational w_image(int l) const { return Rational(itw_at(l) * d + u, d); }
    // Reversed weight with twist, q_i = itw_{n+1-i} + u/d for 1 <= i <= n.
    Rational q(int i) const { return w_image(n + 1 - i); }
    // Image of w_mu = sum over bar(mu): positive for every partition.
    Rational w_lambda_image(const Partition& lambda) const;

    // Stage n-1 data: same weights with the last entry dropped.
    WeightConfig drop_last_stage() const;

    std::string to_string() const;
};

// The evaluation w_l -> itw_l + u/d, a_l -> -y_{n+1-l} (l <= n, else 0).
// Defined on the localized ring with w_lambda denominators; the input must
// not involve x, v, b, or wp variables.
Polynomial phi_n(const Polynomial& p, const WeightConfig& cfg);
Polynomial phi_n(const LocalizedElem& e, const WeightConfig& cfg);

// Fixed-point restriction of the class lambda at the fixed point mu,
// computed as phi_n(psi_mu_vw(s_lambda^w(v;x|a))).
Polynomial restriction_via_phi(const Partition& lambda, const Partition& mu,
                               const WeightConfig& cfg);

// The same restriction from the factorial Schur evaluation at the shifted
// y-alphabet (y^mu)_i = y_i - (q_i/q_mu) y_mu: s_lambda at
// x_i = -(y^mu)_{mu_i}, a_l = -(y^mu)_{n+1-l}.
Polynomial restriction_direct(const Partition& lambda, const Partition& mu,
                              const WeightConfig& cfg);

struct RestrictionTable {
    WeightConfig cfg;
    std::vector<Partition> classes; // P(d,n) in canonical order
    std::map<std::pair<Partition, Partition>, Polynomial> entries;

    const Polynomial& entry(const Partition& lambda, const Partition& mu) const;
};

RestrictionTable build_table(const WeightConfig& cfg);

// Expands a vector of fixed-point values over the table rows by the
// triangular solve; throws Mismatch when the vector is not in the row span.
std::map<Partition, Polynomial> expand_over_table(
    const RestrictionTable& table, const std::map<Partition, Polynomial>& values);

struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;

    void require(bool condition, const std::string& what);
};

// Table-level invariants: vanishing above the diagonal, nonzero diagonal,
// homogeneity of degree 2|lambda|.
CheckReport check_table_invariants(const RestrictionTable& table);

// Product consistency at every fixed point for both basis expansions of
// s_lambda^w * s_mu^w. The verifier caches the fixed-point rows of the
// a-free weighted functions so sweeps over many pairs stay cheap.
class HomomorphismVerifier {
public:
    explicit HomomorphismVerifier(const RestrictionTable& table) : table_(table) {}
    CheckReport check(const Partition& lambda, const Partition& mu);

private:
    const RestrictionTable& table_;
    std::map<Partition, std::map<Partition, Polynomial>> rows_;

    const std::map<Partition, Polynomial>& weighted_row(const Partition& nu);
};

CheckReport verify_homomorphism(const RestrictionTable& table, const Partition& lambda,
                                const Partition& mu);

// Restriction rows vanish identically when lambda is outside P(d,n).
CheckReport check_kills_outside(const RestrictionTable& table, const Partition& lambda);

// Stage n+1 -> n pullback: y_1 -> 0, y_i -> y_{i-1} carries the stage-n+1
// table onto the stage-n one (and to 0 outside the smaller rectangle), and
// the nonequivariant structure constants from the table solve agree across
// the stages.
CheckReport pullback_check(const WeightConfig& cfg_next);

// s_lambda^w with w_l evaluated at itw_l + u/d; the factorial flag keeps the
// a alphabet. Throws IndexOutOfConfig when a w index exceeds n.
LocalizedElem evaluate_weights(const Partition& lambda, const WeightConfig& cfg, bool factorial);

} // namespace wschur
