#include "ihq/linalg.hpp"

#include <cstddef>

namespace ihq {

int matrix_rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            Rational factor = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

std::vector<int> independent_columns(const Matrix& m) {
    std::vector<int> kept;
    if (m.empty()) return kept;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    // echelon basis of the column space built so far, each with its lead row
    std::vector<std::vector<Rational>> basis;
    std::vector<std::size_t> leads;
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<Rational> v(rows);
        for (std::size_t r = 0; r < rows; ++r) v[r] = m[r][j];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (v[leads[b]].is_zero()) continue;
            Rational factor = v[leads[b]] / basis[b][leads[b]];
            for (std::size_t r = 0; r < rows; ++r) v[r] -= factor * basis[b][r];
        }
        std::size_t lead = 0;
        while (lead < rows && v[lead].is_zero()) ++lead;
        if (lead == rows) continue;
        basis.push_back(std::move(v));
        leads.push_back(lead);
        kept.push_back(static_cast<int>(j));
    }
    return kept;
}

}  // namespace ihq
