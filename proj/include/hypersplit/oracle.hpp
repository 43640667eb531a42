#ifndef HYPERSPLIT_ORACLE_HPP
#define HYPERSPLIT_ORACLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hypersplit/bitset.hpp"
#include "hypersplit/core_greedy.hpp"
#include "hypersplit/geometry.hpp"

namespace hypersplit {

// Hard limits for the exhaustive routines. They refuse loudly instead of
// truncating, so a result from this module is always exact.
struct OracleBudget {
    int max_edges = 20;
    int max_subset_points = 14;
};

// Smallest k with eval(K) = f_max over some |K| = k, plus the first such K
// in (size, lexicographic) enumeration order.
std::pair<int, std::vector<int>> exact_min_cover(const SubmodularObjective& obj,
                                                 const OracleBudget& budget = {});

// All strictly separable point subsets as canonical (up-to-complement)
// classes, excluding the empty and full subsets. Each of the 2^n candidate
// subsets is decided by exact linear feasibility, independently of the
// combinatorial enumeration.
std::vector<Bitset> realizable_subsets(const PointConfig& config,
                                       const OracleBudget& budget = {});

struct SubmodularityReport {
    bool ok = true;
    std::vector<int> smaller;  // B
    std::vector<int> larger;   // A, with B subset of A
    int edge = -1;             // e outside A

    bool operator==(const SubmodularityReport&) const = default;
};

// Randomized check of monotonicity and diminishing returns on sampled
// chains B subset of A subset of edges minus {e}. Deterministic for a fixed
// seed; returns the first violating chain if one is found.
SubmodularityReport check_submodular(const SubmodularObjective& obj, int trials,
                                     std::uint64_t seed);

}  // namespace hypersplit

#endif
