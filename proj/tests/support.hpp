#ifndef HYPERSPLIT_TESTS_SUPPORT_HPP
#define HYPERSPLIT_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hypersplit/geometry.hpp"

namespace test_support {

inline std::vector<hypersplit::Rat> pt(std::initializer_list<long> coords) {
    std::vector<hypersplit::Rat> p;
    for (long c : coords) p.emplace_back(c);
    return p;
}

inline hypersplit::PointConfig one_group(int dim, std::vector<std::vector<hypersplit::Rat>> points,
                                         std::int64_t target) {
    std::vector<int> all(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) all[i] = static_cast<int>(i);
    return hypersplit::make_point_config(dim, std::move(points),
                                         {hypersplit::PointGroup{"all", all, target}});
}

inline hypersplit::PointConfig unit_square(std::int64_t target) {
    return one_group(2, {pt({0, 0}), pt({1, 0}), pt({1, 1}), pt({0, 1})}, target);
}

inline hypersplit::PointConfig random_gp_config(std::mt19937_64& rng, int dim, int n,
                                                std::int64_t target = 1) {
    for (;;) {
        std::vector<std::vector<hypersplit::Rat>> points;
        std::set<std::vector<long>> used;
        while (static_cast<int>(points.size()) < n) {
            std::vector<long> raw(dim);
            for (long& c : raw) c = static_cast<long>(rng() % 41) - 20;
            if (!used.insert(raw).second) continue;
            std::vector<hypersplit::Rat> p;
            for (long c : raw) p.emplace_back(c);
            points.push_back(std::move(p));
        }
        hypersplit::PointConfig config = one_group(dim, std::move(points), target);
        if (hypersplit::check_general_position(config).ok) return config;
    }
}

}  // namespace test_support

#endif
