#include <random>
#include <vector>

#include "doctest.h"
#include "hypersplit/errors.hpp"
#include "hypersplit/linalg.hpp"
#include "hypersplit/lp.hpp"
#include "hypersplit/rational.hpp"

namespace {

using hypersplit::Rat;
using hypersplit::RatMatrix;

std::vector<Rat> rats(std::initializer_list<const char*> texts) {
    std::vector<Rat> out;
    for (const char* t : texts) out.push_back(hypersplit::parse_rational(t));
    return out;
}

}  // namespace

TEST_CASE("rational literals parse exactly") {
    CHECK(hypersplit::parse_rational("3") == Rat(3));
    CHECK(hypersplit::parse_rational("-12") == Rat(-12));
    CHECK(hypersplit::parse_rational("+4") == Rat(4));
    CHECK(hypersplit::parse_rational("2/4") == Rat(1, 2));
    CHECK(hypersplit::parse_rational("-6/4") == Rat(-3, 2));
    CHECK(hypersplit::parse_rational("2.75") == Rat(11, 4));
    CHECK(hypersplit::parse_rational("-0.5") == Rat(-1, 2));
    CHECK(hypersplit::parse_rational("09") == Rat(9));
    CHECK(hypersplit::parse_rational("0.125") == Rat(1, 8));

    for (const char* bad : {"", "+", "-", "1e5", "1/0", "1/2/3", "2.", ".5", "1.5/2",
                            "0x10", "a", "1 2", "--3"}) {
        CHECK_THROWS_AS(hypersplit::parse_rational(bad), hypersplit::ParseError);
    }
}

TEST_CASE("formatting is the canonical fraction") {
    CHECK(hypersplit::format_rational(Rat(5)) == "5");
    CHECK(hypersplit::format_rational(Rat(-5)) == "-5");
    CHECK(hypersplit::format_rational(Rat(1, 2)) == "1/2");
    CHECK(hypersplit::format_rational(hypersplit::parse_rational("2/4")) == "1/2");
    CHECK(hypersplit::format_rational(hypersplit::parse_rational("-2.75")) == "-11/4");
    CHECK(hypersplit::format_rational(Rat(0)) == "0");
}

TEST_CASE("primitive normalization") {
    CHECK(hypersplit::normalize_primitive(rats({"1/2", "1/3"})) == rats({"3", "2"}));
    CHECK(hypersplit::normalize_primitive(rats({"-2", "4"})) == rats({"1", "-2"}));
    CHECK(hypersplit::normalize_primitive(rats({"0", "-3/7", "6"})) == rats({"0", "1", "-14"}));
    CHECK(hypersplit::normalize_primitive(rats({"5"})) == rats({"1"}));
    CHECK_THROWS_AS(hypersplit::normalize_primitive(rats({"0", "0"})),
                    hypersplit::ValidationError);
}

TEST_CASE("determinants and ranks") {
    CHECK(hypersplit::determinant({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}) == Rat(-2));
    CHECK(hypersplit::determinant({{Rat(2)}}) == Rat(2));
    CHECK(hypersplit::determinant({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == Rat(0));
    CHECK(hypersplit::determinant({{Rat(1, 2), Rat(0), Rat(0)},
                                   {Rat(0), Rat(1, 3), Rat(0)},
                                   {Rat(0), Rat(0), Rat(6)}}) == Rat(1));

    CHECK(hypersplit::matrix_rank({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
    CHECK(hypersplit::matrix_rank({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == 2);
    CHECK(hypersplit::matrix_rank({{Rat(0), Rat(0)}}) == 0);
    CHECK(hypersplit::matrix_rank({{Rat(1), Rat(2), Rat(3)}}) == 1);
}

TEST_CASE("kernel vectors annihilate their matrix") {
    const RatMatrix singular{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    const auto k = hypersplit::kernel_vector(singular);
    REQUIRE(k.size() == 2);
    bool nonzero = false;
    for (const Rat& x : k) nonzero = nonzero || x != 0;
    CHECK(nonzero);
    for (const auto& row : singular) {
        Rat dot(0);
        for (std::size_t j = 0; j < row.size(); ++j) dot += row[j] * k[j];
        CHECK(dot == 0);
    }

    CHECK_THROWS_AS(hypersplit::kernel_vector(RatMatrix{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}),
                    hypersplit::ValidationError);
}

TEST_CASE("feasible points satisfy every constraint") {
    // 2 <= x <= 5 in one variable.
    const auto box = hypersplit::find_feasible_point(
        1, {{Rat(1)}, {Rat(-1)}}, {Rat(2), Rat(-5)});
    REQUIRE(box.has_value());
    CHECK((*box)[0] >= 2);
    CHECK((*box)[0] <= 5);

    // Empty interval.
    CHECK(!hypersplit::find_feasible_point(1, {{Rat(1)}, {Rat(-1)}}, {Rat(3), Rat(-2)})
               .has_value());

    // No constraints: the origin works.
    const auto origin = hypersplit::find_feasible_point(3, {}, {});
    REQUIRE(origin.has_value());
    CHECK(*origin == std::vector<Rat>(3, Rat(0)));

    // Margin-form separation: a point below a line, one above.
    const auto sep = hypersplit::find_feasible_point(
        3, {{Rat(0), Rat(0), Rat(-1)}, {Rat(-1), Rat(-1), Rat(1)}}, {Rat(1), Rat(1)});
    REQUIRE(sep.has_value());
    CHECK(-(*sep)[2] >= 1);
    CHECK(-(*sep)[0] - (*sep)[1] + (*sep)[2] >= 1);
}

TEST_CASE("random inequality systems: found points verify, reruns agree") {
    std::mt19937_64 rng(57);
    int feasible_count = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int dim = 1 + static_cast<int>(rng() % 3);
        const int m = 1 + static_cast<int>(rng() % 5);
        RatMatrix rows(m, std::vector<Rat>(dim));
        std::vector<Rat> rhs(m);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < dim; ++j)
                rows[i][j] = Rat(static_cast<long>(rng() % 9) - 4);
            rhs[i] = Rat(static_cast<long>(rng() % 9) - 4);
        }
        const auto x = hypersplit::find_feasible_point(dim, rows, rhs);
        const auto again = hypersplit::find_feasible_point(dim, rows, rhs);
        CHECK(x == again);
        if (x.has_value()) {
            ++feasible_count;
            for (int i = 0; i < m; ++i) {
                Rat dot(0);
                for (int j = 0; j < dim; ++j) dot += rows[i][j] * (*x)[j];
                CHECK(dot >= rhs[i]);
            }
        }
    }
    CHECK(feasible_count > 0);
}
