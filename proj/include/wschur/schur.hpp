#pragma once

#include <vector>

#include "wschur/errors.hpp"
#include "wschur/partitions.hpp"
#include "wschur/polynomial.hpp"

namespace wschur {

// Which deformation alphabet a factorial Schur function is taken over.
enum class SchurAlphabet { A, B, Zero };

// (y | a)^k = (y - a_1)...(y - a_k); k = 0 gives 1.
Polynomial raising_factorial(const Polynomial& y, SchurAlphabet alphabet, int k);

// Rows of entries, one vector per row of the shape. Rows weakly increase,
// columns strictly increase, entries lie in {1..d}.
using Tableau = std::vector<std::vector<int>>;
std::vector<Tableau> enumerate_ssyt(const Partition& shape);

// det[(x_j|a)^{b_i + d - i}] / prod_{i<j}(x_i - x_j). Throws
// InternalNonDivisible if the division fails (never on valid input).
Polynomial factorial_schur_det(const Partition& lambda, SchurAlphabet alphabet = SchurAlphabet::A);

// sum over semistandard tableaux of prod (x_T(cell) - a_{T(cell)+content}).
Polynomial factorial_schur_tableaux(const Partition& lambda,
                                    SchurAlphabet alphabet = SchurAlphabet::A);

// Specialization at a = 0.
Polynomial ordinary_schur(const Partition& lambda);

} // namespace wschur
