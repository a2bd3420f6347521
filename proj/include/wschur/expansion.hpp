#pragma once

#include <functional>
#include <map>

#include "wschur/weighted.hpp"

namespace wschur {

enum class ExpansionBasis { FactorialA, WeightedFactorial, Weighted };

const char* basis_name(ExpansionBasis basis);

// A certified basis expansion: the residual (input minus the recombined
// expansion) was checked to be zero before the result is returned.
struct ExpansionResult {
    ExpansionBasis basis;
    std::map<Partition, LocalizedElem> coefficients;
    LocalizedElem residual;
    bool residual_zero = false;
};

// Expands a symmetric polynomial over the factorial basis {s_nu(x|a)} by
// the triangular interpolation sweep: candidates run over partitions of
// size up to graded_degree/2 in the containment-refining order, each
// coefficient is (psi_nu of the remainder) divided exactly by
// psi_nu(s_nu(x|a)). Throws NotInSpan when a division fails or the final
// residual is nonzero. The optional filter prunes the candidate set; the
// residual check guards against over-pruning.
ExpansionResult expand_factorial(const Polynomial& p, int d,
                                 const std::function<bool(const Partition&)>& filter = nullptr);

// The two-alphabet structure constants: expansion of s_lambda(x|b) *
// s_mu(x|a) over {s_nu(x|a)}. Candidates are restricted to nu containing mu;
// the support bound |nu| <= |lambda|+|mu| is asserted on the result.
ExpansionResult structure_constants(const Partition& lambda, const Partition& mu);

// Expands E over the weighted factorial basis {s_nu^w(v;x|a)} (triangular
// psi sweep, dividing by the diagonal vanishing value), or over the weighted
// basis {s_nu^w(v;x)} (same sweep followed by a size-block back-substitution
// through the expansions of the weighted basis over the factorial one).
// Coefficients keep pure w_lambda denominators; MembershipViolation
// otherwise, NotInSpan when the expansion does not close at degree_bound.
ExpansionResult weighted_expand_interpolate(const LocalizedElem& e, int d, int degree_bound,
                                            ExpansionBasis basis);

// Reduction route: takes the rewritten product form sum_nu g_nu * (basis
// element nu) where each g_nu is a polynomial in x_ch/v_ch over the
// localized coefficient ring, and eliminates every x_ch/v_ch power through
// the one-box product rule until all coefficients are x-free.
ExpansionResult weighted_expand_pieri(const std::map<Partition, LocalizedElem>& form, int d,
                                      ExpansionBasis basis);

// Builds such a form from the two-alphabet structure constants by
// substituting shifted alphabets: the basis alphabet becomes a^{vw} (or
// 0^{vw} when basis_zero), the alphabet attached to lambda becomes a^{vw}
// (or 0^{vw} when upper_zero).
std::map<Partition, LocalizedElem> shifted_ms_form(const Partition& lambda, const Partition& mu,
                                                   bool basis_zero, bool upper_zero);

} // namespace wschur
