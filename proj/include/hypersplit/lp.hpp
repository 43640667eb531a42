#ifndef HYPERSPLIT_LP_HPP
#define HYPERSPLIT_LP_HPP

#include <optional>
#include <vector>

#include "hypersplit/linalg.hpp"
#include "hypersplit/rational.hpp"

namespace hypersplit {

// Searches for x in Q^dim with rows[i] . x >= rhs[i] for every i, by an
// exact phase-1 simplex with Bland's rule. Returns the found point, or
// nullopt when the system is infeasible. Fully deterministic.
std::optional<std::vector<Rat>> find_feasible_point(int dim, const RatMatrix& rows,
                                                    const std::vector<Rat>& rhs);

}  // namespace hypersplit

#endif
