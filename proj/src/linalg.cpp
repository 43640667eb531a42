#include "hypersplit/linalg.hpp"

#include <cstddef>
#include <utility>

#include "hypersplit/errors.hpp"

namespace hypersplit {

namespace {

// Row echelon form in place. Returns the pivot column of each pivot row.
std::vector<int> echelon(RatMatrix& m) {
    std::vector<int> pivot_cols;
    if (m.empty()) return pivot_cols;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat factor = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    return pivot_cols;
}

}  // namespace

Rat determinant(RatMatrix matrix) {
    std::size_t n = matrix.size();
    Rat det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && matrix[p][c] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(matrix[p], matrix[c]);
            det = -det;
        }
        det *= matrix[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (matrix[i][c] == 0) continue;
            Rat factor = matrix[i][c] / matrix[c][c];
            for (std::size_t j = c; j < n; ++j) matrix[i][j] -= factor * matrix[c][j];
        }
    }
    return det;
}

int matrix_rank(RatMatrix matrix) {
    return static_cast<int>(echelon(matrix).size());
}

std::vector<Rat> kernel_vector(RatMatrix matrix) {
    if (matrix.empty()) throw ValidationError("kernel_vector: empty matrix");
    std::size_t cols = matrix[0].size();
    std::vector<int> pivot_cols = echelon(matrix);
    if (pivot_cols.size() >= cols) throw ValidationError("kernel_vector: trivial kernel");

    // Free column: the first column that is not a pivot. Set it to 1 and
    // back-substitute the pivot variables.
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_cols) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < cols && is_pivot[free_col]) ++free_col;

    std::vector<Rat> x(cols, Rat(0));
    x[free_col] = 1;
    for (int r = static_cast<int>(pivot_cols.size()) - 1; r >= 0; --r) {
        int pc = pivot_cols[r];
        Rat sum(0);
        for (std::size_t j = pc + 1; j < cols; ++j) sum += matrix[r][j] * x[j];
        x[pc] = -sum / matrix[r][pc];
    }
    return x;
}

}  // namespace hypersplit
