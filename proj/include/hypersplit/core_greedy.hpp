#ifndef HYPERSPLIT_CORE_GREEDY_HPP
#define HYPERSPLIT_CORE_GREEDY_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace hypersplit {

class SubmodularObjective;

// Incremental evaluation of one growing solution. gain() must be safe to
// call concurrently on a const state; add() is single-threaded.
class EvalState {
public:
    virtual ~EvalState() = default;
    virtual std::int64_t value() const = 0;
    virtual std::int64_t gain(int edge) const = 0;
    virtual void add(int edge) = 0;
};

// A monotone, integer-valued, submodular set function over an indexed edge
// family. eval() recomputes from scratch; make_state() hands the solver an
// incremental evaluator (the default one just re-evaluates).
class SubmodularObjective {
public:
    SubmodularObjective() = default;
    SubmodularObjective(const SubmodularObjective&) = delete;
    SubmodularObjective& operator=(const SubmodularObjective&) = delete;
    virtual ~SubmodularObjective() = default;

    virtual int edge_count() const = 0;

    // Value of the function on a subset given as distinct edge indices in
    // any order.
    virtual std::int64_t eval(std::span<const int> edges) const = 0;

    virtual std::unique_ptr<EvalState> make_state() const;

    // Value on the full edge family, computed once and cached.
    std::int64_t f_max() const;

private:
    mutable std::once_flag fmax_once_;
    mutable std::int64_t fmax_ = 0;
};

struct GreedyStep {
    int edge = -1;
    std::int64_t gain = 0;
    std::int64_t deficiency_after = 0;

    bool operator==(const GreedyStep&) const = default;
};

struct GreedyTrace {
    std::vector<GreedyStep> steps;
    std::int64_t final_value = 0;

    bool operator==(const GreedyTrace&) const = default;
};

enum class GreedyMode { kNaive, kLazy };

struct GreedyResult {
    std::vector<int> solution;  // ascending edge indices
    GreedyTrace trace;
};

// f(current + e) - f(current); zero when e is already in current.
std::int64_t marginal_gain(const SubmodularObjective& obj, std::span<const int> current, int edge);

// Greedy cover: repeatedly add the edge of maximum marginal gain (ties by
// smallest index) until the value reaches f_max. The lazy mode keeps stale
// gains in a priority queue and re-evaluates only the top entry, which is
// valid because gains only shrink; both modes return identical results.
// threads > 1 parallelizes the naive candidate scan; the winner is chosen
// by (gain, index) order, so the result does not depend on scheduling.
GreedyResult greedy_cover(const SubmodularObjective& obj, GreedyMode mode = GreedyMode::kNaive,
                          int threads = 1);

}  // namespace hypersplit

#endif
