#ifndef HYPERSPLIT_LINALG_HPP
#define HYPERSPLIT_LINALG_HPP

#include <vector>

#include "hypersplit/rational.hpp"

namespace hypersplit {

using RatMatrix = std::vector<std::vector<Rat>>;

// Exact determinant of a square matrix by Gaussian elimination.
Rat determinant(RatMatrix matrix);

// Rank of an arbitrary matrix.
int matrix_rank(RatMatrix matrix);

// One nonzero vector in the kernel of a matrix with more columns than
// its rank. Throws ValidationError if the kernel is trivial.
std::vector<Rat> kernel_vector(RatMatrix matrix);

}  // namespace hypersplit

#endif
