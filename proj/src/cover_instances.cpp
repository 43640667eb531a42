#include "hypersplit/cover_instances.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hypersplit/errors.hpp"

namespace hypersplit {

namespace {

void check_members(const std::vector<int>& members, int n, const std::string& what) {
    std::vector<char> seen(n, 0);
    for (int v : members) {
        if (v < 0 || v >= n) {
            throw ValidationError(what + ": index " + std::to_string(v) +
                                  " outside universe of size " + std::to_string(n));
        }
        if (seen[v]) throw ValidationError(what + ": duplicate index " + std::to_string(v));
        seen[v] = 1;
    }
}

std::vector<Bitset> build_edges(int n, const std::vector<std::vector<int>>& edges) {
    std::vector<Bitset> out;
    out.reserve(edges.size());
    for (std::size_t j = 0; j < edges.size(); ++j) {
        check_members(edges[j], n, "edge " + std::to_string(j));
        out.push_back(Bitset::from_indices(n, edges[j]));
    }
    return out;
}

std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<std::vector<int>> groups_per_element(int n, std::size_t group_count,
                                                 auto member_list) {
    std::vector<std::vector<int>> groups_of(n);
    for (std::size_t g = 0; g < group_count; ++g)
        for (int v : member_list(g)) groups_of[v].push_back(static_cast<int>(g));
    return groups_of;
}

// Splits every face of the partition that edge e crosses. fid maps each
// element to its face id, fsize holds face sizes indexed by id; split-off
// parts (the side inside e) get fresh ids at the end.
void refine(std::vector<int>& fid, std::vector<std::int64_t>& fsize, const Bitset& e) {
    std::vector<std::int64_t> in_count(fsize.size(), 0);
    e.for_each([&](int v) { ++in_count[fid[v]]; });
    std::vector<int> moved(fsize.size(), -1);
    const int faces = static_cast<int>(fsize.size());
    for (int f = 0; f < faces; ++f) {
        if (in_count[f] > 0 && in_count[f] < fsize[f]) {
            moved[f] = static_cast<int>(fsize.size());
            fsize.push_back(in_count[f]);
            fsize[f] -= in_count[f];
        }
    }
    e.for_each([&](int v) {
        if (moved[fid[v]] != -1) fid[v] = moved[fid[v]];
    });
}

void check_edge_universe(const Bitset& e, int n, std::size_t index) {
    if (e.universe() != n) {
        throw ValidationError("edge " + std::to_string(index) + ": universe " +
                              std::to_string(e.universe()) + " does not match instance universe " +
                              std::to_string(n));
    }
}

}  // namespace

// ── Constructors ────────────────────────────────────────────────────

SetSystem make_set_system(int ground_size, const std::vector<std::vector<int>>& edges) {
    if (ground_size < 1) throw ValidationError("ground size must be at least 1");
    return SetSystem{ground_size, build_edges(ground_size, edges)};
}

PCMSInstance make_pcms(int universe_size, const std::vector<std::vector<int>>& edges,
                       const std::vector<std::pair<std::vector<int>, std::int64_t>>& ground_sets) {
    if (universe_size < 1) throw ValidationError("universe size must be at least 1");
    if (ground_sets.empty()) throw ValidationError("at least one ground set is required");
    PCMSInstance inst;
    inst.universe_size = universe_size;
    inst.edges = build_edges(universe_size, edges);
    for (std::size_t i = 0; i < ground_sets.size(); ++i) {
        const auto& [members, demand] = ground_sets[i];
        const std::string what = "ground set " + std::to_string(i);
        check_members(members, universe_size, what);
        if (demand < 0) throw ValidationError(what + ": demand must be non-negative");
        if (demand > static_cast<std::int64_t>(members.size())) {
            throw ValidationError(what + ": demand " + std::to_string(demand) +
                                  " exceeds set size " + std::to_string(members.size()));
        }
        inst.ground_sets.push_back({sorted_copy(members), demand});
    }
    return inst;
}

PTDInstance make_ptd(SetSystem system, std::vector<std::int64_t> demands) {
    const int n = system.ground_size;
    if (static_cast<int>(demands.size()) != n) {
        throw ValidationError("expected " + std::to_string(n) + " demands, got " +
                              std::to_string(demands.size()));
    }
    for (int v = 0; v < n; ++v) {
        if (demands[v] < 1 || demands[v] > n) {
            throw ValidationError("demand of element " + std::to_string(v) + " is " +
                                  std::to_string(demands[v]) + ", must be between 1 and " +
                                  std::to_string(n));
        }
    }
    return PTDInstance{std::move(system), std::move(demands)};
}

RMCInstance make_rmc(int universe_size, const std::vector<std::vector<int>>& edges,
                     const std::vector<std::pair<std::vector<int>, std::int64_t>>& ground_sets) {
    if (universe_size < 1) throw ValidationError("universe size must be at least 1");
    if (ground_sets.empty()) throw ValidationError("at least one ground set is required");
    RMCInstance inst;
    inst.universe_size = universe_size;
    inst.edges = build_edges(universe_size, edges);
    for (std::size_t i = 0; i < ground_sets.size(); ++i) {
        const auto& [members, target] = ground_sets[i];
        const std::string what = "ground set " + std::to_string(i);
        check_members(members, universe_size, what);
        if (target < 1 || target > static_cast<std::int64_t>(members.size())) {
            throw ValidationError(what + ": target " + std::to_string(target) +
                                  " must be between 1 and the set size " +
                                  std::to_string(members.size()));
        }
        inst.ground_sets.push_back({sorted_copy(members), target});
    }
    return inst;
}

std::vector<std::pair<int, int>> duplicate_edges(std::span<const Bitset> edges) {
    std::map<Bitset, int, BitsetLexLess> first;
    std::vector<std::pair<int, int>> dups;
    for (std::size_t j = 0; j < edges.size(); ++j) {
        auto [it, fresh] = first.emplace(edges[j], static_cast<int>(j));
        if (!fresh) dups.emplace_back(static_cast<int>(j), it->second);
    }
    return dups;
}

// ── Arrangement machinery ───────────────────────────────────────────

std::vector<std::vector<int>> arrangement(int n, std::span<const Bitset> edges) {
    if (n < 1) throw ValidationError("universe size must be at least 1");
    std::vector<int> fid(n, 0);
    std::vector<std::int64_t> fsize{n};
    for (std::size_t j = 0; j < edges.size(); ++j) {
        check_edge_universe(edges[j], n, j);
        refine(fid, fsize, edges[j]);
    }
    // Renumber by first occurrence so faces come out ordered by their
    // smallest member, sorted internally.
    std::vector<int> order(fsize.size(), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (order[fid[v]] == -1) order[fid[v]] = next++;
    std::vector<std::vector<int>> faces(next);
    for (int v = 0; v < n; ++v) faces[order[fid[v]]].push_back(v);
    return faces;
}

std::vector<int> face_of(int v, int n, std::span<const Bitset> edges) {
    if (v < 0 || v >= n) {
        throw ValidationError("element " + std::to_string(v) + " outside universe of size " +
                              std::to_string(n));
    }
    std::vector<int> face;
    for (int u = 0; u < n; ++u) {
        bool same = true;
        for (std::size_t j = 0; j < edges.size(); ++j) {
            check_edge_universe(edges[j], n, j);
            if (edges[j].test(u) != edges[j].test(v)) {
                same = false;
                break;
            }
        }
        if (same) face.push_back(u);
    }
    return face;
}

std::vector<std::pair<int, int>> cut_of(const Bitset& e) {
    const int n = e.universe();
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (e.test(x) != e.test(y)) pairs.emplace_back(x, y);
    return pairs;
}

int pair_index(int x, int y, int n) {
    if (x < 0 || y <= x || y >= n) {
        throw ValidationError("pair {" + std::to_string(x) + ", " + std::to_string(y) +
                              "} is not an ordered pair inside a universe of size " +
                              std::to_string(n));
    }
    return x * n - x * (x + 1) / 2 + (y - x - 1);
}

std::pair<int, int> pair_from_index(int index, int n) {
    const int total = n * (n - 1) / 2;
    if (index < 0 || index >= total) {
        throw ValidationError("pair index " + std::to_string(index) + " outside 0.." +
                              std::to_string(total - 1));
    }
    int x = 0;
    while (index >= n - 1 - x) {
        index -= n - 1 - x;
        ++x;
    }
    return {x, x + 1 + index};
}

// ── PCMS objective ──────────────────────────────────────────────────

PcmsObjective::PcmsObjective(PCMSInstance inst) : inst_(std::move(inst)) {
    groups_of_ = groups_per_element(
        inst_.universe_size, inst_.ground_sets.size(),
        [&](std::size_t g) -> const std::vector<int>& { return inst_.ground_sets[g].members; });
}

std::int64_t PcmsObjective::eval(std::span<const int> edges) const {
    Bitset covered(inst_.universe_size);
    for (int e : edges) covered = covered | inst_.edges.at(e);
    std::int64_t total = 0;
    for (const auto& gs : inst_.ground_sets) {
        std::int64_t c = 0;
        for (int v : gs.members) c += covered.test(v);
        total += std::min(c, gs.demand);
    }
    return total;
}

std::int64_t PcmsObjective::demand_cap() const {
    std::int64_t cap = 0;
    for (const auto& gs : inst_.ground_sets) cap += gs.demand;
    return cap;
}

std::vector<std::int64_t> PcmsObjective::group_service(std::span<const int> edges) const {
    Bitset covered(inst_.universe_size);
    for (int e : edges) covered = covered | inst_.edges.at(e);
    std::vector<std::int64_t> service;
    service.reserve(inst_.ground_sets.size());
    for (const auto& gs : inst_.ground_sets) {
        std::int64_t c = 0;
        for (int v : gs.members) c += covered.test(v);
        service.push_back(std::min(c, gs.demand));
    }
    return service;
}

namespace {

class PcmsState final : public EvalState {
public:
    PcmsState(const PCMSInstance& inst, const std::vector<std::vector<int>>& groups_of)
        : inst_(&inst),
          groups_of_(&groups_of),
          covered_(inst.universe_size, 0),
          count_(inst.ground_sets.size(), 0) {}

    std::int64_t value() const override { return value_; }

    std::int64_t gain(int e) const override {
        const Bitset& edge = inst_->edges.at(e);
        std::vector<std::int64_t> delta(inst_->ground_sets.size(), 0);
        std::int64_t g = 0;
        edge.for_each([&](int v) {
            if (covered_[v]) return;
            for (int gi : (*groups_of_)[v]) {
                if (count_[gi] + delta[gi] < inst_->ground_sets[gi].demand) ++g;
                ++delta[gi];
            }
        });
        return g;
    }

    void add(int e) override {
        const Bitset& edge = inst_->edges.at(e);
        edge.for_each([&](int v) {
            if (covered_[v]) return;
            covered_[v] = 1;
            for (int gi : (*groups_of_)[v]) {
                ++count_[gi];
                if (count_[gi] <= inst_->ground_sets[gi].demand) ++value_;
            }
        });
    }

private:
    const PCMSInstance* inst_;
    const std::vector<std::vector<int>>* groups_of_;
    std::vector<char> covered_;
    std::vector<std::int64_t> count_;
    std::int64_t value_ = 0;
};

}  // namespace

std::unique_ptr<EvalState> PcmsObjective::make_state() const {
    return std::make_unique<PcmsState>(inst_, groups_of_);
}

// ── RMC objective ───────────────────────────────────────────────────

RmcObjective::RmcObjective(RMCInstance inst) : inst_(std::move(inst)) {
    groups_of_ = groups_per_element(
        inst_.universe_size, inst_.ground_sets.size(),
        [&](std::size_t g) -> const std::vector<int>& { return inst_.ground_sets[g].members; });
}

std::int64_t RmcObjective::eval(std::span<const int> edges) const {
    const int n = inst_.universe_size;
    std::vector<int> fid(n, 0);
    std::vector<std::int64_t> fsize{n};
    for (int e : edges) refine(fid, fsize, inst_.edges.at(e));
    std::int64_t total = 0;
    for (const auto& gs : inst_.ground_sets)
        for (int v : gs.members)
            total += std::min<std::int64_t>(n - fsize[fid[v]], n - gs.target);
    return total;
}

std::int64_t RmcObjective::demand_cap() const {
    const int n = inst_.universe_size;
    std::int64_t cap = 0;
    for (const auto& gs : inst_.ground_sets)
        cap += static_cast<std::int64_t>(gs.members.size()) * (n - gs.target);
    return cap;
}

std::vector<std::int64_t> RmcObjective::group_service(std::span<const int> edges) const {
    const int n = inst_.universe_size;
    std::vector<int> fid(n, 0);
    std::vector<std::int64_t> fsize{n};
    for (int e : edges) refine(fid, fsize, inst_.edges.at(e));
    std::vector<std::int64_t> service;
    service.reserve(inst_.ground_sets.size());
    for (const auto& gs : inst_.ground_sets) {
        std::int64_t total = 0;
        for (int v : gs.members)
            total += std::min<std::int64_t>(n - fsize[fid[v]], n - gs.target);
        service.push_back(total);
    }
    return service;
}

namespace {

class RmcState final : public EvalState {
public:
    RmcState(const RMCInstance& inst, const std::vector<std::vector<int>>& groups_of)
        : inst_(&inst),
          groups_of_(&groups_of),
          fid_(inst.universe_size, 0),
          fsize_{inst.universe_size} {}

    std::int64_t value() const override { return value_; }

    // A face of size s crossed by the edge shrinks to in-count or
    // s - in-count for each of its members; only crossed faces move.
    std::int64_t gain(int e) const override {
        const Bitset& edge = inst_->edges.at(e);
        const int n = inst_->universe_size;
        std::vector<std::int64_t> in_count(fsize_.size(), 0);
        edge.for_each([&](int v) { ++in_count[fid_[v]]; });
        std::int64_t g = 0;
        for (int v = 0; v < n; ++v) {
            const int f = fid_[v];
            const std::int64_t s = fsize_[f];
            const std::int64_t ic = in_count[f];
            if (ic == 0 || ic == s) continue;
            const std::int64_t s_new = edge.test(v) ? ic : s - ic;
            for (int gi : (*groups_of_)[v]) {
                const std::int64_t t = inst_->ground_sets[gi].target;
                g += std::min<std::int64_t>(n - s_new, n - t) -
                     std::min<std::int64_t>(n - s, n - t);
            }
        }
        return g;
    }

    void add(int e) override {
        value_ += gain(e);
        refine(fid_, fsize_, inst_->edges.at(e));
    }

private:
    const RMCInstance* inst_;
    const std::vector<std::vector<int>>* groups_of_;
    std::vector<int> fid_;
    std::vector<std::int64_t> fsize_;
    std::int64_t value_ = 0;
};

}  // namespace

std::unique_ptr<EvalState> RmcObjective::make_state() const {
    return std::make_unique<RmcState>(inst_, groups_of_);
}

// ── Reductions ──────────────────────────────────────────────────────

PCMSInstance ptd_to_pcms(const PTDInstance& inst) {
    const int n = inst.system.ground_size;
    const int universe = n * (n - 1) / 2;
    PCMSInstance out;
    out.universe_size = universe;
    out.edges.reserve(inst.system.edges.size());
    for (std::size_t j = 0; j < inst.system.edges.size(); ++j) {
        const Bitset& e = inst.system.edges[j];
        check_edge_universe(e, n, j);
        Bitset cut(universe);
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if (e.test(x) != e.test(y)) cut.set(pair_index(x, y, n));
        out.edges.push_back(std::move(cut));
    }
    // Ground set of element v: the pairs containing v. Separating v from
    // all but d(v) elements means covering n - d(v) of them.
    for (int v = 0; v < n; ++v) {
        PcmsGroundSet gs;
        gs.members.reserve(n - 1);
        for (int u = 0; u < v; ++u) gs.members.push_back(pair_index(u, v, n));
        for (int w = v + 1; w < n; ++w) gs.members.push_back(pair_index(v, w, n));
        gs.demand = n - inst.demands[v];
        out.ground_sets.push_back(std::move(gs));
    }
    return out;
}

PTDInstance reduce_by_half(SetSystem system) {
    const int n = system.ground_size;
    if (n < 2) throw ValidationError("halving needs a universe of at least 2 elements");
    std::vector<std::int64_t> demands(n, n / 2);
    return make_ptd(std::move(system), std::move(demands));
}

PTDInstance rmc_group_ptd(const RMCInstance& inst, int group) {
    if (group < 0 || group >= static_cast<int>(inst.ground_sets.size())) {
        throw ValidationError("ground set index " + std::to_string(group) + " out of range");
    }
    const int n = inst.universe_size;
    std::vector<std::int64_t> demands(n, n);
    for (int v : inst.ground_sets[group].members) demands[v] = inst.ground_sets[group].target;
    return make_ptd(SetSystem{n, inst.edges}, std::move(demands));
}

// ── Solvers ─────────────────────────────────────────────────────────

namespace {

// First-occurrence representatives under the given key; reps come out in
// ascending original order, so remapped solutions stay sorted.
std::vector<int> representatives(std::span<const Bitset> edges, bool up_to_complement) {
    std::map<Bitset, int, BitsetLexLess> first;
    std::vector<int> reps;
    for (std::size_t j = 0; j < edges.size(); ++j) {
        Bitset key = up_to_complement ? edges[j].canonical_key() : edges[j];
        if (first.emplace(std::move(key), static_cast<int>(j)).second)
            reps.push_back(static_cast<int>(j));
    }
    return reps;
}

void remap_trace(GreedyTrace& trace, const std::vector<int>& reps) {
    for (auto& step : trace.steps) step.edge = reps[step.edge];
}

}  // namespace

PcmsSolveResult solve_pcms(const PCMSInstance& inst, GreedyMode mode, int threads) {
    const std::vector<int> reps = representatives(inst.edges, false);
    PCMSInstance sub{inst.universe_size, {}, inst.ground_sets};
    sub.edges.reserve(reps.size());
    for (int j : reps) sub.edges.push_back(inst.edges[j]);
    PcmsObjective obj(std::move(sub));
    GreedyResult res = greedy_cover(obj, mode, threads);

    PcmsSolveResult out;
    out.feasible = obj.f_max() == obj.demand_cap();
    if (!out.feasible) {
        const auto service = obj.group_service(res.solution);
        for (std::size_t g = 0; g < service.size(); ++g) {
            const std::int64_t demand = obj.instance().ground_sets[g].demand;
            if (service[g] < demand)
                out.shortfalls.push_back({static_cast<int>(g), service[g], demand});
        }
    }
    out.chosen.reserve(res.solution.size());
    for (int e : res.solution) out.chosen.push_back(reps[e]);
    out.trace = std::move(res.trace);
    remap_trace(out.trace, reps);
    return out;
}

RmcSolveResult solve_rmc(const RMCInstance& inst, GreedyMode mode, int threads) {
    // An edge and its complement induce the same cut, so they are
    // interchangeable here; collapse them onto the first occurrence.
    const std::vector<int> reps = representatives(inst.edges, true);
    RMCInstance sub{inst.universe_size, {}, inst.ground_sets};
    sub.edges.reserve(reps.size());
    for (int j : reps) sub.edges.push_back(inst.edges[j]);
    RmcObjective obj(std::move(sub));
    GreedyResult res = greedy_cover(obj, mode, threads);

    RmcSolveResult out;
    out.feasible = obj.f_max() == obj.demand_cap();
    if (!out.feasible) {
        const auto service = obj.group_service(res.solution);
        const int n = inst.universe_size;
        for (std::size_t g = 0; g < service.size(); ++g) {
            const auto& gs = obj.instance().ground_sets[g];
            const std::int64_t cap = static_cast<std::int64_t>(gs.members.size()) * (n - gs.target);
            if (service[g] < cap)
                out.shortfalls.push_back({static_cast<int>(g), service[g], cap});
        }
    }
    out.chosen.reserve(res.solution.size());
    for (int e : res.solution) out.chosen.push_back(reps[e]);
    out.trace = std::move(res.trace);
    remap_trace(out.trace, reps);
    out.violations = verify_rmc(inst, out.chosen);
    std::vector<Bitset> sel;
    sel.reserve(out.chosen.size());
    for (int e : out.chosen) sel.push_back(inst.edges[e]);
    out.faces = arrangement(inst.universe_size, sel);
    return out;
}

PtdSolveResult solve_ptd(const PTDInstance& inst, GreedyMode mode, int threads) {
    PcmsSolveResult base = solve_pcms(ptd_to_pcms(inst), mode, threads);
    PtdSolveResult out;
    out.chosen = std::move(base.chosen);
    out.trace = std::move(base.trace);
    out.feasible = base.feasible;
    out.shortfalls = std::move(base.shortfalls);
    // Face check against demands on the original system, independent of
    // the pair-covering route.
    std::vector<Bitset> sel;
    sel.reserve(out.chosen.size());
    for (int e : out.chosen) sel.push_back(inst.system.edges[e]);
    const auto faces = arrangement(inst.system.ground_size, sel);
    for (const auto& face : faces)
        for (int v : face)
            if (static_cast<std::int64_t>(face.size()) > inst.demands[v])
                out.violations.push_back({face, v});
    return out;
}

std::vector<FaceViolation> verify_rmc(const RMCInstance& inst, std::span<const int> chosen) {
    std::vector<Bitset> sel;
    sel.reserve(chosen.size());
    for (int e : chosen) sel.push_back(inst.edges.at(e));
    const auto faces = arrangement(inst.universe_size, sel);
    std::vector<std::vector<char>> in_group(inst.ground_sets.size());
    for (std::size_t g = 0; g < inst.ground_sets.size(); ++g) {
        in_group[g].assign(inst.universe_size, 0);
        for (int v : inst.ground_sets[g].members) in_group[g][v] = 1;
    }
    std::vector<FaceViolation> violations;
    for (const auto& face : faces) {
        for (std::size_t g = 0; g < inst.ground_sets.size(); ++g) {
            std::int64_t occupancy = 0;
            for (int v : face) occupancy += in_group[g][v];
            if (occupancy > inst.ground_sets[g].target)
                violations.push_back({face, static_cast<int>(g)});
        }
    }
    return violations;
}

}  // namespace hypersplit
