#include "hypersplit/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "hypersplit/errors.hpp"

namespace hypersplit {

namespace {

void check_budget(const OracleBudget& budget) {
    if (budget.max_edges < 1 || budget.max_subset_points < 1) {
        throw ValidationError("oracle budget limits must be positive");
    }
}

}  // namespace

std::pair<int, std::vector<int>> exact_min_cover(const SubmodularObjective& obj,
                                                 const OracleBudget& budget) {
    check_budget(budget);
    const int m = obj.edge_count();
    if (m > budget.max_edges) {
        throw BudgetError("exhaustive cover search over " + std::to_string(m) +
                          " edges exceeds the budget of " + std::to_string(budget.max_edges));
    }
    const std::int64_t target = obj.f_max();
    for (int size = 0; size <= m; ++size) {
        std::vector<int> combo(size);
        for (int i = 0; i < size; ++i) combo[i] = i;
        for (;;) {
            if (obj.eval(combo) == target) return {size, combo};
            int i = size - 1;
            while (i >= 0 && combo[i] == m - size + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    throw std::logic_error("the full edge set does not reach f_max");
}

std::vector<Bitset> realizable_subsets(const PointConfig& config, const OracleBudget& budget) {
    check_budget(budget);
    const int n = static_cast<int>(config.points.size());
    if (n > budget.max_subset_points) {
        throw BudgetError("separability scan over " + std::to_string(n) +
                          " points exceeds the budget of " +
                          std::to_string(budget.max_subset_points));
    }
    std::vector<Bitset> classes;
    // Each complement pair has exactly one side avoiding point 0, so even
    // masks cover every nontrivial class once.
    for (std::uint64_t mask = 2; mask < (std::uint64_t{1} << n); mask += 2) {
        Bitset subset(n);
        for (int i = 1; i < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) subset.set(i);
        }
        try {
            (void)witness_for_subset(config, subset);
        } catch (const NonRealizableError&) {
            continue;
        }
        classes.push_back(subset.canonical_key());
    }
    std::sort(classes.begin(), classes.end(), BitsetLexLess{});
    return classes;
}

SubmodularityReport check_submodular(const SubmodularObjective& obj, int trials,
                                     std::uint64_t seed) {
    SubmodularityReport report;
    const int m = obj.edge_count();
    if (m == 0) return report;

    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const int e = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
        std::vector<int> larger;
        std::vector<int> smaller;
        for (int j = 0; j < m; ++j) {
            if (j == e) continue;
            if (rng() & 1) {
                larger.push_back(j);
                if (rng() & 1) smaller.push_back(j);
            }
        }
        const std::int64_t at_smaller = obj.eval(smaller);
        const std::int64_t at_larger = obj.eval(larger);
        std::vector<int> with_edge = smaller;
        with_edge.push_back(e);
        const std::int64_t smaller_plus = obj.eval(with_edge);
        with_edge = larger;
        with_edge.push_back(e);
        const std::int64_t larger_plus = obj.eval(with_edge);

        const bool monotone = at_smaller <= at_larger && at_larger <= larger_plus &&
                              at_smaller <= smaller_plus;
        const bool diminishing = larger_plus - at_larger <= smaller_plus - at_smaller;
        if (!monotone || !diminishing) {
            report.ok = false;
            report.smaller = std::move(smaller);
            report.larger = std::move(larger);
            report.edge = e;
            return report;
        }
    }
    return report;
}

}  // namespace hypersplit
