#include "hypersplit/core_greedy.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <thread>

#include "hypersplit/errors.hpp"

namespace hypersplit {

namespace {

// Fallback incremental evaluator: keeps the chosen set and re-evaluates
// the objective for every gain query.
class GenericState final : public EvalState {
public:
    explicit GenericState(const SubmodularObjective& obj) : obj_(obj), value_(obj.eval({})) {}

    std::int64_t value() const override { return value_; }

    std::int64_t gain(int edge) const override {
        std::vector<int> extended = chosen_;
        extended.push_back(edge);
        return obj_.eval(extended) - value_;
    }

    void add(int edge) override {
        chosen_.push_back(edge);
        value_ = obj_.eval(chosen_);
    }

private:
    const SubmodularObjective& obj_;
    std::vector<int> chosen_;
    std::int64_t value_;
};

struct Candidate {
    std::int64_t gain = -1;
    int edge = -1;
};

// (gain desc, index asc): the order every scan and queue uses.
bool better(const Candidate& a, const Candidate& b) {
    return a.gain > b.gain || (a.gain == b.gain && a.edge < b.edge);
}

Candidate scan_range(const EvalState& state, std::span<const char> taken, int begin, int end) {
    Candidate best;
    for (int e = begin; e < end; ++e) {
        if (taken[e]) continue;
        std::int64_t g = state.gain(e);
        // Ascending scan: the first maximum seen already has the smallest
        // index, and zero-gain edges are never candidates.
        if (g > 0 && g > best.gain) best = {g, e};
    }
    return best;
}

Candidate best_candidate(const EvalState& state, const std::vector<char>& taken, int edge_count,
                         int threads) {
    if (threads <= 1 || edge_count < 2 * threads) {
        return scan_range(state, taken, 0, edge_count);
    }
    std::vector<Candidate> partial(threads);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    int chunk = (edge_count + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        int begin = w * chunk;
        int end = std::min(edge_count, begin + chunk);
        workers.emplace_back([&, w, begin, end] { partial[w] = scan_range(state, taken, begin, end); });
    }
    for (auto& th : workers) th.join();
    Candidate best;
    for (const Candidate& c : partial) {
        if (c.edge >= 0 && (best.edge < 0 || better(c, best))) best = c;
    }
    return best;
}

GreedyResult run_naive(const SubmodularObjective& obj, int threads) {
    const int edge_count = obj.edge_count();
    const std::int64_t target = obj.f_max();
    auto state = obj.make_state();

    GreedyResult result;
    std::vector<char> taken(edge_count, 0);
    while (state->value() < target) {
        Candidate best = best_candidate(*state, taken, edge_count, threads);
        assert(best.edge >= 0 && best.gain > 0);
        state->add(best.edge);
        taken[best.edge] = 1;
        result.solution.push_back(best.edge);
        result.trace.steps.push_back({best.edge, best.gain, target - state->value()});
    }
    result.trace.final_value = state->value();
    std::sort(result.solution.begin(), result.solution.end());
    return result;
}

GreedyResult run_lazy(const SubmodularObjective& obj) {
    const int edge_count = obj.edge_count();
    const std::int64_t target = obj.f_max();
    auto state = obj.make_state();

    struct Entry {
        std::int64_t gain;
        int edge;
        int round;  // the iteration this gain was computed in
    };
    auto worse = [](const Entry& a, const Entry& b) {
        return a.gain < b.gain || (a.gain == b.gain && a.edge > b.edge);
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> queue(worse);
    for (int e = 0; e < edge_count; ++e) {
        std::int64_t g = state->gain(e);
        if (g > 0) queue.push({g, e, 0});
    }

    GreedyResult result;
    int round = 0;
    while (state->value() < target) {
        assert(!queue.empty());
        Entry top = queue.top();
        queue.pop();
        if (top.round != round) {
            std::int64_t g = state->gain(top.edge);
            if (g > 0) queue.push({g, top.edge, round});
            continue;
        }
        state->add(top.edge);
        result.solution.push_back(top.edge);
        result.trace.steps.push_back({top.edge, top.gain, target - state->value()});
        ++round;
    }
    result.trace.final_value = state->value();
    std::sort(result.solution.begin(), result.solution.end());
    return result;
}

}  // namespace

std::unique_ptr<EvalState> SubmodularObjective::make_state() const {
    return std::make_unique<GenericState>(*this);
}

std::int64_t SubmodularObjective::f_max() const {
    std::call_once(fmax_once_, [this] {
        std::vector<int> all(edge_count());
        std::iota(all.begin(), all.end(), 0);
        fmax_ = eval(all);
    });
    return fmax_;
}

std::int64_t marginal_gain(const SubmodularObjective& obj, std::span<const int> current, int edge) {
    if (edge < 0 || edge >= obj.edge_count()) {
        throw std::out_of_range("marginal_gain: edge index " + std::to_string(edge) +
                                " out of range 0.." + std::to_string(obj.edge_count() - 1));
    }
    for (int e : current) {
        if (e == edge) return 0;
    }
    std::vector<int> extended(current.begin(), current.end());
    extended.push_back(edge);
    return obj.eval(extended) - obj.eval(current);
}

GreedyResult greedy_cover(const SubmodularObjective& obj, GreedyMode mode, int threads) {
    if (threads < 1) throw ValidationError("greedy_cover: threads must be >= 1");
    return mode == GreedyMode::kLazy ? run_lazy(obj) : run_naive(obj, threads);
}

}  // namespace hypersplit
