#include "wschur/schur.hpp"

namespace wschur {

namespace {

Polynomial alphabet_entry(SchurAlphabet alphabet, int l) {
    switch (alphabet) {
        case SchurAlphabet::A: return Polynomial::variable(var_a(l));
        case SchurAlphabet::B: return Polynomial::variable(var_b(l));
        case SchurAlphabet::Zero: return Polynomial();
    }
    return Polynomial();
}

} // namespace

Polynomial raising_factorial(const Polynomial& y, SchurAlphabet alphabet, int k) {
    if (k < 0) throw std::invalid_argument("raising_factorial: negative length");
    Polynomial out{Rational(1)};
    for (int l = 1; l <= k; ++l) out = out * (y - alphabet_entry(alphabet, l));
    return out;
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape) {
    const int d = shape.d();
    std::vector<Tableau> out;
    Tableau current;
    for (int i = 1; i <= d; ++i)
        current.emplace_back(static_cast<std::size_t>(shape.row(i)), 0);

    // Column-major fill: left neighbor and the cell above are already set.
    std::vector<std::pair<int, int>> cells; // (row, col), 0-based
    for (int col = 0; col < shape.row(1); ++col)
        for (int row = 0; row < d; ++row)
            if (shape.row(row + 1) > col) cells.push_back({row, col});

    auto fill = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            Tableau t;
            for (const auto& row : current)
                if (!row.empty()) t.push_back(row);
            if (t.empty()) t.push_back({});
            out.push_back(std::move(t));
            return;
        }
        auto [row, col] = cells[k];
        int low = 1;
        if (row > 0) low = std::max(low, current[static_cast<std::size_t>(row) - 1][col] + 1);
        if (col > 0) low = std::max(low, current[static_cast<std::size_t>(row)][col - 1]);
        for (int value = low; value <= d; ++value) {
            current[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = value;
            self(self, k + 1);
        }
    };
    fill(fill, 0);
    return out;
}

namespace {

Polynomial determinant_cofactor(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Polynomial out;
    std::vector<std::vector<Polynomial>> minor(n - 1, std::vector<Polynomial>(n - 1));
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t mj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                minor[i - 1][mj++] = m[i][j];
            }
        }
        Polynomial contribution = m[0][col] * determinant_cofactor(minor);
        if (col % 2 == 0)
            out += contribution;
        else
            out -= contribution;
    }
    return out;
}

// Fraction-free Gaussian elimination; every division is exact.
Polynomial determinant_bareiss(std::vector<std::vector<Polynomial>> m) {
    const std::size_t n = m.size();
    Polynomial previous_pivot{Rational(1)};
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Polynomial();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial numerator = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = try_exact_divide(numerator, previous_pivot);
                if (!q)
                    throw InternalNonDivisible("determinant_bareiss: non-exact pivot division");
                m[i][j] = std::move(*q);
            }
            m[i][k] = Polynomial();
        }
        previous_pivot = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

} // namespace

Polynomial factorial_schur_det(const Partition& lambda, SchurAlphabet alphabet) {
    const int d = lambda.d();
    std::vector<std::vector<Polynomial>> m(static_cast<std::size_t>(d),
                                           std::vector<Polynomial>(static_cast<std::size_t>(d)));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            m[i - 1][j - 1] = raising_factorial(Polynomial::variable(var_x(j)), alphabet,
                                                lambda.row(i) + d - i);
    Polynomial det = d <= 4 ? determinant_cofactor(m) : determinant_bareiss(std::move(m));

    Polynomial vandermonde{Rational(1)};
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            vandermonde =
                vandermonde * (Polynomial::variable(var_x(i)) - Polynomial::variable(var_x(j)));

    auto quotient = try_exact_divide(det, vandermonde);
    if (!quotient)
        throw InternalNonDivisible("factorial_schur_det: Vandermonde does not divide " +
                                   lambda.to_string());
    return *quotient;
}

Polynomial factorial_schur_tableaux(const Partition& lambda, SchurAlphabet alphabet) {
    Polynomial out;
    for (const Tableau& t : enumerate_ssyt(lambda)) {
        Polynomial product{Rational(1)};
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (std::size_t j = 0; j < t[i].size(); ++j) {
                int entry = t[i][j];
                int content = static_cast<int>(j) - static_cast<int>(i);
                product = product * (Polynomial::variable(var_x(entry)) -
                                     alphabet_entry(alphabet, entry + content));
            }
        }
        out += product;
    }
    return out;
}

Polynomial ordinary_schur(const Partition& lambda) {
    return factorial_schur_tableaux(lambda, SchurAlphabet::Zero);
}

} // namespace wschur
