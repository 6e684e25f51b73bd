#ifndef ISOTOR_MATRIX_HPP
#define ISOTOR_MATRIX_HPP

#include "isotor/rational.hpp"

#include <cstddef>
#include <vector>

namespace isotor {

/// Dense matrix over Q, row major.
struct ExactMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> entries;

    ExactMatrix() = default;
    ExactMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, Rat(0)) {}

    Rat& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    static ExactMatrix identity(std::size_t n);
};

/// Exact rank by fraction-free (Bareiss) elimination on a denominator-cleared copy.
std::size_t rank_over_Q(const ExactMatrix& m);

} // namespace isotor

#endif
