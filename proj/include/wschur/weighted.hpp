#pragma once

#include <optional>

#include "wschur/localized.hpp"
#include "wschur/schur.hpp"

namespace wschur {

// Which weight alphabet a weighted Schur function is taken over; WP pairs
// with the B interpolation alphabet the same way W pairs with A.
enum class WeightAlphabet { W, WP };

// Aggregate symbols.
Polynomial x_ch(int d);
Polynomial v_ch(int d);
Polynomial a_ch(int d, SchurAlphabet alphabet = SchurAlphabet::A);
Polynomial w_ch(int d, WeightAlphabet alphabet = WeightAlphabet::W);
// a_lambda = sum of a over bar(lambda); w_lambda likewise.
Polynomial a_lambda(const Partition& lambda, SchurAlphabet alphabet = SchurAlphabet::A);
Polynomial w_lambda(const Partition& lambda, WeightAlphabet alphabet = WeightAlphabet::W);

// Shifted alphabets: x_i^v = x_i - (v_i/v_ch) x_ch and
// a_l^{vw} = a_l - (w_l/v_ch) x_ch; zero_shifted is the a = 0 case.
LocalizedElem x_shifted(int i, int d);
LocalizedElem a_shifted(int l, int d, SchurAlphabet a_alphabet = SchurAlphabet::A,
                        WeightAlphabet w_alphabet = WeightAlphabet::W);
LocalizedElem zero_shifted(int l, int d, WeightAlphabet w_alphabet = WeightAlphabet::W);

// s_lambda(x^v | a^{vw}), formed through the tableau formula so the
// denominator stays a pure v_ch power.
LocalizedElem weighted_factorial_schur(const Partition& lambda,
                                       SchurAlphabet a_alphabet = SchurAlphabet::A,
                                       WeightAlphabet w_alphabet = WeightAlphabet::W);
// s_lambda(x^v | 0^{vw}).
LocalizedElem weighted_schur(const Partition& lambda,
                             WeightAlphabet w_alphabet = WeightAlphabet::W);

// The evaluation psi_mu: x_i -> a_{bar mu_i} on symmetric polynomials.
Polynomial psi_mu(const Polynomial& p, const Partition& mu);
// Its extension to the localized ring: additionally v_i -> w_{bar mu_i},
// turning v_ch denominators into w_mu denominators.
LocalizedElem psi_mu_vw(const LocalizedElem& e, const Partition& mu);

// Closed-form prediction for psi_mu(s_lambda^w(v;x|a)): zero when mu does
// not contain lambda, the lower-set product when mu == lambda, and no
// prediction (nullopt) when mu strictly contains lambda.
std::optional<LocalizedElem> vanishing_value(const Partition& lambda, const Partition& mu);

// Right-hand side of the one-box product rule. The factorial variant uses
// the independent primed alphabets (b, wp) for the one-box factor:
//   ((wp_ch / w_lambda) a_lambda - b_ch) s_lambda^w + sum over one-box
//   additions of (wp_ch / w_lambda) s_lambda'^w,
// and the non-factorial variant keeps only the sum.
LocalizedElem weighted_pieri_rhs(const Partition& lambda, bool factorial);

} // namespace wschur
