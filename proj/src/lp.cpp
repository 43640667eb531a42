#include "hypersplit/lp.hpp"

#include <cassert>
#include <cstddef>

#include "hypersplit/errors.hpp"

namespace hypersplit {

// Phase-1 simplex over exact rationals. The system rows.x >= rhs is put in
// standard form with a split x = u - v, one surplus variable per row, and
// one artificial variable per row; the artificials are minimized. Bland's
// rule on both the entering and the leaving choice guarantees termination.
std::optional<std::vector<Rat>> find_feasible_point(int dim, const RatMatrix& rows,
                                                    const std::vector<Rat>& rhs) {
    const int m = static_cast<int>(rows.size());
    if (m == 0) return std::vector<Rat>(dim, Rat(0));
    assert(static_cast<int>(rhs.size()) == m);

    const int surplus0 = 2 * dim;
    const int artificial0 = surplus0 + m;
    const int ncols = artificial0 + m;
    const int rhs_col = ncols;

    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(ncols + 1, Rat(0)));
    for (int i = 0; i < m; ++i) {
        int sign = rhs[i] < 0 ? -1 : 1;
        for (int j = 0; j < dim; ++j) {
            t[i][j] = sign * rows[i][j];
            t[i][dim + j] = -t[i][j];
        }
        t[i][surplus0 + i] = Rat(-sign);
        t[i][artificial0 + i] = 1;
        t[i][rhs_col] = sign * rhs[i];
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = artificial0 + i;

    // Reduced costs for min(sum of artificials) with the artificial basis.
    std::vector<Rat> obj(ncols + 1, Rat(0));
    for (int j = 0; j <= ncols; ++j) {
        Rat sum(0);
        for (int i = 0; i < m; ++i) sum += t[i][j];
        obj[j] = (j >= artificial0 && j < ncols) ? Rat(Rat(1) - sum) : Rat(-sum);
    }

    for (;;) {
        // Entering: smallest index with a negative reduced cost. Artificial
        // columns never re-enter.
        int entering = -1;
        for (int j = 0; j < artificial0; ++j) {
            if (obj[j] < 0) {
                entering = j;
                break;
            }
        }
        if (entering < 0) break;

        // Leaving: minimum ratio, ties by smallest basic variable index.
        int leaving = -1;
        Rat best_ratio(0);
        for (int i = 0; i < m; ++i) {
            if (t[i][entering] <= 0) continue;
            Rat ratio = t[i][rhs_col] / t[i][entering];
            if (leaving < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving < 0) {
            // The phase-1 objective is bounded below by zero, so an
            // unbounded direction indicates a construction bug.
            throw ValidationError("phase-1 simplex became unbounded");
        }

        Rat pivot = t[leaving][entering];
        for (int j = 0; j <= ncols; ++j) t[leaving][j] /= pivot;
        for (int i = 0; i < m; ++i) {
            if (i == leaving || t[i][entering] == 0) continue;
            Rat factor = t[i][entering];
            for (int j = 0; j <= ncols; ++j) t[i][j] -= factor * t[leaving][j];
        }
        if (obj[entering] != 0) {
            Rat factor = obj[entering];
            for (int j = 0; j <= ncols; ++j) obj[j] -= factor * t[leaving][j];
        }
        basis[leaving] = entering;
    }

    Rat residual(0);
    for (int i = 0; i < m; ++i) {
        if (basis[i] >= artificial0) residual += t[i][rhs_col];
    }
    if (residual > 0) return std::nullopt;

    std::vector<Rat> x(dim, Rat(0));
    for (int i = 0; i < m; ++i) {
        if (basis[i] < dim) {
            x[basis[i]] += t[i][rhs_col];
        } else if (basis[i] < 2 * dim) {
            x[basis[i] - dim] -= t[i][rhs_col];
        }
    }
    return x;
}

}  // namespace hypersplit
