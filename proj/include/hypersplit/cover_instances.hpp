#ifndef HYPERSPLIT_COVER_INSTANCES_HPP
#define HYPERSPLIT_COVER_INSTANCES_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "hypersplit/bitset.hpp"
#include "hypersplit/core_greedy.hpp"

namespace hypersplit {

// ── Abstract instances ──────────────────────────────────────────────

struct SetSystem {
    int ground_size = 0;
    std::vector<Bitset> edges;
};

struct PcmsGroundSet {
    std::vector<int> members;  // sorted ascending
    std::int64_t demand = 0;   // elements of the set that must be covered
};

// Partial cover with multiple ground sets.
struct PCMSInstance {
    int universe_size = 0;
    std::vector<Bitset> edges;
    std::vector<PcmsGroundSet> ground_sets;
};

// Partition to demand: every element's face must shrink to at most its
// demand. Demands of zero are unsatisfiable (an element always occupies
// its own face) and are rejected at construction.
struct PTDInstance {
    SetSystem system;
    std::vector<std::int64_t> demands;  // per element, 1 <= d(v) <= n
};

struct RmcGroundSet {
    std::vector<int> members;
    std::int64_t target = 0;  // maximum allowed face occupancy
};

// Reduce measures via cuts: every face of the chosen arrangement may hold
// at most target_i members of ground set i.
struct RMCInstance {
    int universe_size = 0;
    std::vector<Bitset> edges;
    std::vector<RmcGroundSet> ground_sets;
};

// Validating constructors. All throw ValidationError naming the offending
// field; edge subsets are given as index lists.
SetSystem make_set_system(int ground_size, const std::vector<std::vector<int>>& edges);
PCMSInstance make_pcms(int universe_size, const std::vector<std::vector<int>>& edges,
                       const std::vector<std::pair<std::vector<int>, std::int64_t>>& ground_sets);
PTDInstance make_ptd(SetSystem system, std::vector<std::int64_t> demands);
RMCInstance make_rmc(int universe_size, const std::vector<std::vector<int>>& edges,
                     const std::vector<std::pair<std::vector<int>, std::int64_t>>& ground_sets);

// Indices of edges that duplicate an earlier edge exactly, as (dup, first)
// pairs. Duplicates are legal input; callers may want to warn.
std::vector<std::pair<int, int>> duplicate_edges(std::span<const Bitset> edges);

// ── Arrangement machinery ───────────────────────────────────────────

// Partition of 0..n-1 where two elements share a face iff they belong to
// exactly the same edges. Faces are ordered by smallest member and sorted
// internally.
std::vector<std::vector<int>> arrangement(int n, std::span<const Bitset> edges);

// The face of arrangement(n, edges) containing v.
std::vector<int> face_of(int v, int n, std::span<const Bitset> edges);

// Unordered pairs {x, y} with x in e, y outside e, sorted lexicographically.
std::vector<std::pair<int, int>> cut_of(const Bitset& e);

// Row-major index of pair {x, y}, x < y, in the K_n edge universe.
int pair_index(int x, int y, int n);
std::pair<int, int> pair_from_index(int index, int n);

// ── Objectives ──────────────────────────────────────────────────────

// Service objective of a PCMS instance: sum over ground sets of the
// covered member count, capped at the demand.
class PcmsObjective final : public SubmodularObjective {
public:
    explicit PcmsObjective(PCMSInstance inst);

    int edge_count() const override { return static_cast<int>(inst_.edges.size()); }
    std::int64_t eval(std::span<const int> edges) const override;
    std::unique_ptr<EvalState> make_state() const override;

    // Sum of demands; the objective is capped here iff the instance is
    // satisfiable by the full edge family.
    std::int64_t demand_cap() const;
    // Per-group capped service of an edge subset.
    std::vector<std::int64_t> group_service(std::span<const int> edges) const;

    const PCMSInstance& instance() const { return inst_; }

private:
    PCMSInstance inst_;
    std::vector<std::vector<int>> groups_of_;  // element -> ground set indices
};

// Separation objective of an RMC instance, evaluated through per-element
// face sizes: sum over ground sets i and members v of
// min(n - |face(v)|, n - target_i).
class RmcObjective final : public SubmodularObjective {
public:
    explicit RmcObjective(RMCInstance inst);

    int edge_count() const override { return static_cast<int>(inst_.edges.size()); }
    std::int64_t eval(std::span<const int> edges) const override;
    std::unique_ptr<EvalState> make_state() const override;

    std::int64_t demand_cap() const;
    std::vector<std::int64_t> group_service(std::span<const int> edges) const;

    const RMCInstance& instance() const { return inst_; }

private:
    RMCInstance inst_;
    std::vector<std::vector<int>> groups_of_;  // element -> ground set indices
};

// ── Reductions ──────────────────────────────────────────────────────

// Pair-cutting reduction: PCMS over the
// n(n-1)/2 pair universe with ground set E_v = {pairs containing v} and
// demand n - d(v); edge j is the cut set of edge j. An edge set meets all
// PTD demands iff it meets all demands of the reduced instance.
PCMSInstance ptd_to_pcms(const PTDInstance& inst);

// Demand floor(n/2) for every element. Rejects n < 2.
PTDInstance reduce_by_half(SetSystem system);

// The i-th summand of the RMC objective as its own PTD instance: demand
// target_i for members of ground set i, n for everyone else.
PTDInstance rmc_group_ptd(const RMCInstance& inst, int group);

// ── Solvers ─────────────────────────────────────────────────────────

struct GroupShortfall {
    int group = 0;  // ground set index (element index for PTD)
    std::int64_t achieved = 0;
    std::int64_t demand = 0;

    bool operator==(const GroupShortfall&) const = default;
};

struct FaceViolation {
    std::vector<int> face;
    int group = 0;

    bool operator==(const FaceViolation&) const = default;
};

struct PcmsSolveResult {
    std::vector<int> chosen;  // ascending original edge indices
    GreedyTrace trace;
    bool feasible = false;  // f_max reaches the sum of demands
    std::vector<GroupShortfall> shortfalls;
};

struct RmcSolveResult {
    std::vector<int> chosen;
    GreedyTrace trace;
    bool feasible = false;
    std::vector<GroupShortfall> shortfalls;
    std::vector<FaceViolation> violations;     // faces over target, from verify_rmc
    std::vector<std::vector<int>> faces;       // final arrangement of chosen edges
};

struct PtdSolveResult {
    std::vector<int> chosen;
    GreedyTrace trace;
    bool feasible = false;
    std::vector<GroupShortfall> shortfalls;    // group = element index
    std::vector<FaceViolation> violations;     // faces over demand, group = element
};

// Greedy cover over the service objective. Infeasibility (demands beyond
// what all edges achieve) is a reported outcome, never an error; the
// returned set still achieves f_max and shortfalls list the gaps. Exact
// duplicate edges are collapsed onto their first occurrence before solving.
PcmsSolveResult solve_pcms(const PCMSInstance& inst, GreedyMode mode = GreedyMode::kNaive,
                           int threads = 1);

// Greedy cover over the separation objective, plus an arrangement-based
// verification of every face against every target. Edges equal up to
// complement are collapsed before solving (their cuts coincide).
RmcSolveResult solve_rmc(const RMCInstance& inst, GreedyMode mode = GreedyMode::kNaive,
                         int threads = 1);

// Solves PTD through the pair-cutting reduction, then checks faces against
// demands on the original system.
PtdSolveResult solve_ptd(const PTDInstance& inst, GreedyMode mode = GreedyMode::kNaive,
                         int threads = 1);

// Every (face, ground set) pair of arrangement(chosen) whose occupancy
// exceeds the target. Computed from the arrangement alone, independently
// of the separation objective.
std::vector<FaceViolation> verify_rmc(const RMCInstance& inst, std::span<const int> chosen);

}  // namespace hypersplit

#endif
