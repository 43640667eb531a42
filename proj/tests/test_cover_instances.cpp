#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <random>
#include <vector>

#include "doctest.h"
#include "hypersplit/bitset.hpp"
#include "hypersplit/cover_instances.hpp"
#include "hypersplit/errors.hpp"

namespace {

using hypersplit::Bitset;
using hypersplit::ValidationError;

Bitset bs(int n, std::initializer_list<int> xs) {
    const std::vector<int> v(xs);
    return Bitset::from_indices(n, v);
}

std::vector<Bitset> edge_list(int n, std::initializer_list<std::initializer_list<int>> es) {
    std::vector<Bitset> out;
    for (const auto& e : es) out.push_back(bs(n, e));
    return out;
}

// Random set system plus a subset mask enumerator, for round-trip checks.
struct RandomSystem {
    int n = 0;
    std::vector<Bitset> edges;
};

RandomSystem random_system(std::mt19937_64& rng, int max_n, int max_edges) {
    RandomSystem sys;
    sys.n = 2 + static_cast<int>(rng() % (max_n - 1));
    const int m = 1 + static_cast<int>(rng() % max_edges);
    for (int j = 0; j < m; ++j) {
        Bitset e(sys.n);
        for (int v = 0; v < sys.n; ++v)
            if (rng() % 2) e.set(v);
        sys.edges.push_back(std::move(e));
    }
    return sys;
}

std::vector<int> mask_to_subset(std::uint32_t mask, int m) {
    std::vector<int> subset;
    for (int e = 0; e < m; ++e)
        if (mask & (1u << e)) subset.push_back(e);
    return subset;
}

}  // namespace

TEST_CASE("arrangement matches the worked five-element partition") {
    // Elements relabeled 0-based from the 1..5 description.
    const auto edges = edge_list(5, {{0, 1, 2}, {2, 3, 4}});
    const std::vector<std::vector<int>> expected{{0, 1}, {2}, {3, 4}};
    CHECK(hypersplit::arrangement(5, edges) == expected);

    CHECK(hypersplit::face_of(2, 5, edges) == std::vector<int>{2});
    CHECK(hypersplit::face_of(0, 5, edges) == std::vector<int>{0, 1});
    CHECK_THROWS_AS(hypersplit::face_of(5, 5, edges), ValidationError);
}

TEST_CASE("arrangement of no edges is one face") {
    const std::vector<Bitset> none;
    CHECK(hypersplit::arrangement(4, none) ==
          std::vector<std::vector<int>>{{0, 1, 2, 3}});
    CHECK(hypersplit::face_of(2, 4, none) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("an edge and its complement split identically") {
    const auto a = edge_list(6, {{1, 4, 5}});
    const auto b = edge_list(6, {{0, 2, 3}});
    CHECK(hypersplit::arrangement(6, a) == hypersplit::arrangement(6, b));
}

TEST_CASE("arrangement is a partition agreeing with face_of") {
    std::mt19937_64 rng(7151);
    for (int trial = 0; trial < 40; ++trial) {
        const RandomSystem sys = random_system(rng, 10, 6);
        const auto faces = hypersplit::arrangement(sys.n, sys.edges);

        std::vector<char> seen(sys.n, 0);
        int previous_min = -1;
        for (const auto& face : faces) {
            REQUIRE(!face.empty());
            CHECK(std::is_sorted(face.begin(), face.end()));
            CHECK(face.front() > previous_min);
            previous_min = face.front();
            for (int v : face) {
                CHECK(!seen[v]);
                seen[v] = 1;
                CHECK(hypersplit::face_of(v, sys.n, sys.edges) == face);
            }
        }
        CHECK(std::count(seen.begin(), seen.end(), 1) == sys.n);
    }
}

TEST_CASE("cut_of lists the crossing pairs") {
    using Pairs = std::vector<std::pair<int, int>>;
    CHECK(hypersplit::cut_of(bs(3, {0})) == Pairs{{0, 1}, {0, 2}});
    CHECK(hypersplit::cut_of(bs(4, {0, 1})) == Pairs{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(hypersplit::cut_of(bs(4, {})).empty());
    CHECK(hypersplit::cut_of(bs(4, {0, 1, 2, 3})).empty());

    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 30; ++trial) {
        const RandomSystem sys = random_system(rng, 9, 3);
        for (const auto& e : sys.edges) {
            const auto cut = hypersplit::cut_of(e);
            CHECK(static_cast<int>(cut.size()) == e.count() * (sys.n - e.count()));
            CHECK(cut == hypersplit::cut_of(e.complement()));
        }
    }
}

TEST_CASE("pair indexing is a lexicographic bijection") {
    for (int n = 2; n <= 10; ++n) {
        int expected = 0;
        for (int x = 0; x < n; ++x) {
            for (int y = x + 1; y < n; ++y) {
                CHECK(hypersplit::pair_index(x, y, n) == expected);
                CHECK(hypersplit::pair_from_index(expected, n) == std::pair<int, int>{x, y});
                ++expected;
            }
        }
        CHECK(expected == n * (n - 1) / 2);
    }
    CHECK_THROWS_AS(hypersplit::pair_index(1, 1, 3), ValidationError);
    CHECK_THROWS_AS(hypersplit::pair_index(0, 3, 3), ValidationError);
    CHECK_THROWS_AS(hypersplit::pair_from_index(3, 3), ValidationError);
}

TEST_CASE("service objective on the two-demand toy") {
    const auto inst = hypersplit::make_pcms(4, {{0, 2}, {1, 3}}, {{{0, 1}, 2}, {{2, 3}, 1}});
    const hypersplit::PcmsObjective obj(inst);

    CHECK(obj.eval(std::vector<int>{}) == 0);
    CHECK(obj.eval(std::vector<int>{0}) == 2);
    CHECK(obj.eval(std::vector<int>{1}) == 2);
    CHECK(obj.eval(std::vector<int>{0, 1}) == 3);
    CHECK(obj.f_max() == 3);
    CHECK(obj.demand_cap() == 3);

    const auto res = hypersplit::solve_pcms(inst);
    CHECK(res.chosen == std::vector<int>{0, 1});
    CHECK(res.feasible);
    CHECK(res.shortfalls.empty());
    CHECK(res.trace.steps.size() == 2);
    // No single edge reaches the cap, so two is optimal.
    CHECK(obj.eval(std::vector<int>{0}) < 3);
    CHECK(obj.eval(std::vector<int>{1}) < 3);
}

TEST_CASE("uncoverable demand is reported, not thrown") {
    const auto inst = hypersplit::make_pcms(3, {{0}}, {{{1, 2}, 1}});
    const auto res = hypersplit::solve_pcms(inst);
    CHECK(res.chosen.empty());
    CHECK(!res.feasible);
    REQUIRE(res.shortfalls.size() == 1);
    CHECK(res.shortfalls[0].group == 0);
    CHECK(res.shortfalls[0].achieved == 0);
    CHECK(res.shortfalls[0].demand == 1);
}

TEST_CASE("a single exact edge covers in one step") {
    const auto inst = hypersplit::make_pcms(4, {{0, 1}}, {{{0, 1, 2}, 2}});
    const auto res = hypersplit::solve_pcms(inst);
    CHECK(res.chosen == std::vector<int>{0});
    CHECK(res.feasible);
    CHECK(res.trace.steps.size() == 1);
}

TEST_CASE("duplicate edges collapse to the first occurrence") {
    const auto dups = hypersplit::duplicate_edges(edge_list(3, {{0, 1}, {2}, {0, 1}}));
    CHECK(dups == std::vector<std::pair<int, int>>{{2, 0}});

    const auto inst = hypersplit::make_pcms(3, {{2}, {0, 1}, {0, 1}}, {{{0, 1, 2}, 3}});
    const auto res = hypersplit::solve_pcms(inst);
    CHECK(res.chosen == std::vector<int>{0, 1});
    REQUIRE(res.trace.steps.size() == 2);
    CHECK(res.trace.steps[0].edge == 1);
    CHECK(res.trace.steps[1].edge == 0);
}

TEST_CASE("incremental service state matches full evaluation") {
    std::mt19937_64 rng(91250);
    for (int trial = 0; trial < 40; ++trial) {
        const RandomSystem sys = random_system(rng, 9, 6);
        std::vector<std::pair<std::vector<int>, std::int64_t>> groups;
        const int m = 1 + static_cast<int>(rng() % 4);
        for (int g = 0; g < m; ++g) {
            std::vector<int> members;
            for (int v = 0; v < sys.n; ++v)
                if (rng() % 2) members.push_back(v);
            groups.push_back({members, static_cast<std::int64_t>(rng() % (members.size() + 1))});
        }
        std::vector<std::vector<int>> raw_edges;
        for (const auto& e : sys.edges) raw_edges.push_back(e.members());
        const auto inst = hypersplit::make_pcms(sys.n, raw_edges, groups);
        const hypersplit::PcmsObjective obj(inst);

        auto state = obj.make_state();
        std::vector<int> current;
        for (const auto& e : sys.edges) {
            (void)e;
            const int pick = static_cast<int>(rng() % sys.edges.size());
            CHECK(state->gain(pick) == hypersplit::marginal_gain(obj, current, pick));
            if (std::find(current.begin(), current.end(), pick) == current.end()) {
                state->add(pick);
                current.push_back(pick);
            }
            CHECK(state->value() == obj.eval(current));
        }
    }
}

TEST_CASE("separation objective is zero when targets equal the universe") {
    const auto inst = hypersplit::make_rmc(4, {{0, 1}, {2}}, {{{0, 1, 2, 3}, 4}});
    const hypersplit::RmcObjective obj(inst);
    CHECK(obj.f_max() == 0);
    CHECK(obj.demand_cap() == 0);

    const auto res = hypersplit::solve_rmc(inst);
    CHECK(res.chosen.empty());
    CHECK(res.feasible);
    CHECK(res.violations.empty());
    CHECK(res.faces == std::vector<std::vector<int>>{{0, 1, 2, 3}});
}

TEST_CASE("four collinear points with singleton target need every threshold") {
    // Thresholds of four ordered elements, as prefix sets.
    const auto inst = hypersplit::make_rmc(4, {{0}, {0, 1}, {0, 1, 2}}, {{{0, 1, 2, 3}, 1}});
    const hypersplit::RmcObjective obj(inst);
    CHECK(obj.eval(std::vector<int>{}) == 0);
    CHECK(obj.f_max() == 12);
    CHECK(obj.demand_cap() == 12);
    // Exhaustively, only the full threshold set reaches the cap.
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
        const auto subset = mask_to_subset(mask, 3);
        if (mask == 7)
            CHECK(obj.eval(subset) == 12);
        else
            CHECK(obj.eval(subset) < 12);
    }

    const auto res = hypersplit::solve_rmc(inst);
    CHECK(res.chosen == std::vector<int>{0, 1, 2});
    CHECK(res.feasible);
    CHECK(res.violations.empty());
    CHECK(res.faces.size() == 4);
}

TEST_CASE("one shared edge can satisfy two disjoint groups") {
    const auto inst = hypersplit::make_rmc(4, {{0, 2}}, {{{0, 1}, 1}, {{2, 3}, 1}});
    const auto res = hypersplit::solve_rmc(inst);
    CHECK(res.chosen == std::vector<int>{0});
    // Both targets hold on the two faces even though the separation
    // objective cannot reach its cap with this edge family.
    CHECK(res.violations.empty());
    CHECK(!res.feasible);
    CHECK(!res.shortfalls.empty());
}

TEST_CASE("verify_rmc flags oversize faces") {
    const auto inst = hypersplit::make_rmc(5, {{0, 1, 2}, {2, 3, 4}}, {{{0, 1, 2, 3, 4}, 2}});
    CHECK(hypersplit::verify_rmc(inst, std::vector<int>{0, 1}).empty());

    const auto none = hypersplit::verify_rmc(inst, std::vector<int>{});
    REQUIRE(none.size() == 1);
    CHECK(none[0].face == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(none[0].group == 0);
}

TEST_CASE("complement-duplicate edges collapse for separation solving") {
    const auto inst = hypersplit::make_rmc(4, {{0, 1}, {2, 3}}, {{{0, 1, 2, 3}, 2}});
    const auto res = hypersplit::solve_rmc(inst);
    CHECK(res.chosen == std::vector<int>{0});
    CHECK(res.feasible);
    CHECK(res.violations.empty());
}

TEST_CASE("incremental separation state matches full evaluation") {
    std::mt19937_64 rng(551177);
    for (int trial = 0; trial < 40; ++trial) {
        const RandomSystem sys = random_system(rng, 9, 6);
        std::vector<std::pair<std::vector<int>, std::int64_t>> groups;
        const int m = 1 + static_cast<int>(rng() % 3);
        for (int g = 0; g < m; ++g) {
            std::vector<int> members;
            for (int v = 0; v < sys.n; ++v)
                if (rng() % 2) members.push_back(v);
            if (members.empty()) members.push_back(static_cast<int>(rng() % sys.n));
            groups.push_back(
                {members, 1 + static_cast<std::int64_t>(rng() % members.size())});
        }
        std::vector<std::vector<int>> raw_edges;
        for (const auto& e : sys.edges) raw_edges.push_back(e.members());
        const auto inst = hypersplit::make_rmc(sys.n, raw_edges, groups);
        const hypersplit::RmcObjective obj(inst);

        auto state = obj.make_state();
        std::vector<int> current;
        for (std::size_t step = 0; step < sys.edges.size(); ++step) {
            const int pick = static_cast<int>(rng() % sys.edges.size());
            CHECK(state->gain(pick) == hypersplit::marginal_gain(obj, current, pick));
            if (std::find(current.begin(), current.end(), pick) == current.end()) {
                state->add(pick);
                current.push_back(pick);
            }
            CHECK(state->value() == obj.eval(current));
        }
    }
}

TEST_CASE("separation objective equals the sum of its per-group reductions") {
    std::mt19937_64 rng(881);
    for (int trial = 0; trial < 25; ++trial) {
        const RandomSystem sys = random_system(rng, 7, 5);
        std::vector<std::pair<std::vector<int>, std::int64_t>> groups;
        const int m = 1 + static_cast<int>(rng() % 3);
        for (int g = 0; g < m; ++g) {
            std::vector<int> members;
            for (int v = 0; v < sys.n; ++v)
                if (rng() % 2) members.push_back(v);
            if (members.empty()) members.push_back(0);
            groups.push_back(
                {members, 1 + static_cast<std::int64_t>(rng() % members.size())});
        }
        std::vector<std::vector<int>> raw_edges;
        for (const auto& e : sys.edges) raw_edges.push_back(e.members());
        const auto inst = hypersplit::make_rmc(sys.n, raw_edges, groups);
        const hypersplit::RmcObjective whole(inst);

        std::vector<std::unique_ptr<hypersplit::PcmsObjective>> parts;
        for (int g = 0; g < m; ++g)
            parts.push_back(std::make_unique<hypersplit::PcmsObjective>(
                hypersplit::ptd_to_pcms(hypersplit::rmc_group_ptd(inst, g))));

        const int edges = static_cast<int>(sys.edges.size());
        for (std::uint32_t mask = 0; mask < (1u << edges); ++mask) {
            const auto subset = mask_to_subset(mask, edges);
            std::int64_t total = 0;
            for (const auto& part : parts) total += part->eval(subset);
            CHECK(whole.eval(subset) == total);
        }
    }
}

TEST_CASE("pair reduction on the two-element system") {
    const auto sys = hypersplit::make_set_system(2, {{0}});
    const auto inst = hypersplit::make_ptd(sys, {1, 1});
    const auto pcms = hypersplit::ptd_to_pcms(inst);
    CHECK(pcms.universe_size == 1);
    REQUIRE(pcms.ground_sets.size() == 2);
    CHECK(pcms.ground_sets[0].members == std::vector<int>{0});
    CHECK(pcms.ground_sets[1].members == std::vector<int>{0});
    CHECK(pcms.ground_sets[0].demand == 1);

    const auto res = hypersplit::solve_ptd(inst);
    CHECK(res.chosen == std::vector<int>{0});
    CHECK(res.feasible);
    CHECK(res.violations.empty());
}

TEST_CASE("pair reduction reports unmet demands and oversize faces") {
    const auto sys = hypersplit::make_set_system(3, {{0}});
    const auto inst = hypersplit::make_ptd(sys, {1, 1, 1});
    const auto res = hypersplit::solve_ptd(inst);
    CHECK(res.chosen == std::vector<int>{0});
    CHECK(!res.feasible);
    REQUIRE(res.shortfalls.size() == 2);
    CHECK(res.shortfalls[0].group == 1);
    CHECK(res.shortfalls[0].achieved == 1);
    CHECK(res.shortfalls[0].demand == 2);
    CHECK(res.shortfalls[1].group == 2);
    REQUIRE(res.violations.size() == 2);
    CHECK(res.violations[0].face == std::vector<int>{1, 2});
    CHECK(res.violations[0].group == 1);
    CHECK(res.violations[1].group == 2);
}

TEST_CASE("the worked partition meets demand two everywhere") {
    const auto sys = hypersplit::make_set_system(5, {{0, 1, 2}, {2, 3, 4}});
    const auto inst = hypersplit::make_ptd(sys, {2, 2, 2, 2, 2});
    const auto res = hypersplit::solve_ptd(inst);
    CHECK(res.chosen == std::vector<int>{0, 1});
    CHECK(res.feasible);
    CHECK(res.violations.empty());
}

TEST_CASE("halving demands") {
    const auto sys5 = hypersplit::make_set_system(5, {{0, 1, 2}, {2, 3, 4}});
    CHECK(hypersplit::reduce_by_half(sys5).demands == std::vector<std::int64_t>(5, 2));
    const auto sys4 = hypersplit::make_set_system(4, {{0}});
    CHECK(hypersplit::reduce_by_half(sys4).demands == std::vector<std::int64_t>(4, 2));

    const auto sys2 = hypersplit::make_set_system(2, {{0}});
    const auto res = hypersplit::solve_ptd(hypersplit::reduce_by_half(sys2));
    CHECK(res.chosen == std::vector<int>{0});
    CHECK(res.feasible);

    CHECK_THROWS_AS(hypersplit::reduce_by_half(hypersplit::make_set_system(1, {})),
                    ValidationError);
}

TEST_CASE("a one-element system is already partitioned") {
    const auto sys = hypersplit::make_set_system(1, {});
    const auto inst = hypersplit::make_ptd(sys, {1});
    const auto res = hypersplit::solve_ptd(inst);
    CHECK(res.chosen.empty());
    CHECK(res.feasible);
    CHECK(res.violations.empty());
}

TEST_CASE("pair reduction round trip on exhaustive subsets") {
    std::mt19937_64 rng(33991);
    for (int trial = 0; trial < 30; ++trial) {
        const RandomSystem sys = random_system(rng, 7, 5);
        std::vector<std::int64_t> demands(sys.n);
        for (auto& d : demands) d = 1 + static_cast<std::int64_t>(rng() % sys.n);
        std::vector<std::vector<int>> raw_edges;
        for (const auto& e : sys.edges) raw_edges.push_back(e.members());
        const auto inst =
            hypersplit::make_ptd(hypersplit::make_set_system(sys.n, raw_edges), demands);
        const auto pcms = hypersplit::ptd_to_pcms(inst);
        const hypersplit::PcmsObjective obj(pcms);

        const int edges = static_cast<int>(sys.edges.size());
        for (std::uint32_t mask = 0; mask < (1u << edges); ++mask) {
            const auto subset = mask_to_subset(mask, edges);

            std::vector<Bitset> chosen;
            for (int e : subset) chosen.push_back(sys.edges[e]);
            bool demands_met = true;
            std::int64_t by_faces = 0;
            for (int v = 0; v < sys.n; ++v) {
                const auto face = hypersplit::face_of(v, sys.n, chosen);
                if (static_cast<std::int64_t>(face.size()) > demands[v]) demands_met = false;
                by_faces += std::min<std::int64_t>(sys.n - face.size(), sys.n - demands[v]);
            }

            // Pair-covering value equals the arrangement-side formula.
            CHECK(obj.eval(subset) == by_faces);

            bool covers = true;
            Bitset covered(pcms.universe_size);
            for (int e : subset) covered = covered | pcms.edges[e];
            for (const auto& gs : pcms.ground_sets) {
                std::int64_t c = 0;
                for (int p : gs.members) c += covered.test(p);
                if (c < gs.demand) covers = false;
            }
            CHECK(demands_met == covers);
        }
    }
}

TEST_CASE("greedy separation leaves no violations when feasible") {
    std::mt19937_64 rng(24680);
    int feasible_seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const RandomSystem sys = random_system(rng, 8, 7);
        std::vector<std::pair<std::vector<int>, std::int64_t>> groups;
        const int m = 1 + static_cast<int>(rng() % 3);
        for (int g = 0; g < m; ++g) {
            std::vector<int> members;
            for (int v = 0; v < sys.n; ++v)
                if (rng() % 2) members.push_back(v);
            if (members.empty()) members.push_back(0);
            groups.push_back(
                {members, 1 + static_cast<std::int64_t>(rng() % members.size())});
        }
        std::vector<std::vector<int>> raw_edges;
        for (const auto& e : sys.edges) raw_edges.push_back(e.members());
        const auto inst = hypersplit::make_rmc(sys.n, raw_edges, groups);
        const auto res = hypersplit::solve_rmc(inst);
        if (res.feasible) {
            ++feasible_seen;
            CHECK(res.violations.empty());
            CHECK(res.shortfalls.empty());
        }
        CHECK(res.violations == hypersplit::verify_rmc(inst, res.chosen));
    }
    CHECK(feasible_seen > 0);
}

TEST_CASE("construction rejects malformed instances") {
    CHECK_THROWS_AS(hypersplit::make_set_system(0, {}), ValidationError);
    CHECK_THROWS_AS(hypersplit::make_set_system(3, {{0, 3}}), ValidationError);
    CHECK_THROWS_AS(hypersplit::make_set_system(3, {{1, 1}}), ValidationError);

    CHECK_THROWS_AS(hypersplit::make_pcms(3, {{0}}, {}), ValidationError);
    CHECK_THROWS_AS(hypersplit::make_pcms(3, {{0}}, {{{0, 1}, 3}}), ValidationError);
    CHECK_THROWS_AS(hypersplit::make_pcms(3, {{0}}, {{{0, 1}, -1}}), ValidationError);

    const auto sys = hypersplit::make_set_system(3, {{0}});
    CHECK_THROWS_AS(hypersplit::make_ptd(sys, {1, 1}), ValidationError);
    CHECK_THROWS_AS(hypersplit::make_ptd(sys, {0, 1, 1}), ValidationError);
    CHECK_THROWS_AS(hypersplit::make_ptd(sys, {1, 1, 4}), ValidationError);

    CHECK_THROWS_AS(hypersplit::make_rmc(3, {{0}}, {{{0, 1}, 0}}), ValidationError);
    CHECK_THROWS_AS(hypersplit::make_rmc(3, {{0}}, {{{0, 1}, 3}}), ValidationError);
    CHECK_THROWS_AS(hypersplit::make_rmc(3, {{0}}, {}), ValidationError);

    // Universe mismatch between an edge and the arrangement it joins.
    std::vector<Bitset> wrong{Bitset(3)};
    CHECK_THROWS_AS(hypersplit::arrangement(4, wrong), ValidationError);
}
