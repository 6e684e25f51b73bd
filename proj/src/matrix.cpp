#include "isotor/matrix.hpp"

namespace isotor {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::size_t rank_over_Q(const ExactMatrix& m) {
    const std::size_t r = m.rows, c = m.cols;
    if (r == 0 || c == 0) return 0;

    // Clear denominators row by row; scaling a row by a positive integer
    // does not change the rank.
    std::vector<std::vector<Int>> a(r, std::vector<Int>(c));
    for (std::size_t i = 0; i < r; ++i) {
        Int lcm = 1;
        for (std::size_t j = 0; j < c; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < c; ++j) {
            Rat scaled = m.at(i, j) * Rat(lcm);
            a[i][j] = scaled.get_num();
        }
    }

    // Bareiss: divisions below are exact, which bounds coefficient growth.
    std::size_t rank = 0;
    Int prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        std::size_t piv = row;
        while (piv < r && a[piv][col] == 0) ++piv;
        if (piv == r) continue;
        std::swap(a[piv], a[row]);
        for (std::size_t i = row + 1; i < r; ++i) {
            for (std::size_t j = col + 1; j < c; ++j)
                a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace isotor
