#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "toric/graver.hpp"
#include "toric/lawrence.hpp"

using namespace toric;

TEST_CASE("normal_form examples") {
    const std::vector<Move> g{{2, -1}};
    CHECK(normal_form({4, -2}, g).is_zero());
    CHECK(normal_form({2, -1}, {}) == IntVec{2, -1});
    const std::vector<Move> h{{1, -2, 1}};
    CHECK(normal_form({1, -2, 1}, h).is_zero());
    CHECK(normal_form({-2, 4, -2}, h).is_zero());
}

TEST_CASE("graver_basis examples") {
    CHECK(graver_basis(make_curve({1, 2})).moves == std::vector<Move>{{2, -1}});
    CHECK(graver_basis(make_curve({1, 1})).moves == std::vector<Move>{{1, -1}});
    const Configuration c = make_curve({1, 3, 6, 8});
    const GraverBasis g = graver_basis(c);
    CHECK(g.config_digest == c.digest());
    const Int K = max_abs_entry(g.moves) + 1;
    CHECK(graver_oracle_box(c, K).moves == g.moves);
}

TEST_CASE("box oracle examples") {
    CHECK(graver_oracle_box(make_curve({1, 2}), 3).moves == std::vector<Move>{{2, -1}});
    const auto g345 = graver_oracle_box(make_curve({3, 4, 5}), 4).moves;
    CHECK(std::find(g345.begin(), g345.end(), Move{1, -2, 1}) != g345.end());
    CHECK(graver_oracle_box(make_curve({1, 1}), 1).moves == std::vector<Move>{{1, -1}});
    CHECK_THROWS_AS(graver_oracle_box(make_curve({1, 1}), 0), DimensionError);
}

TEST_CASE("Graver basis invariants and the direct scan") {
    for (auto e : std::vector<std::vector<Int>>{{3, 4, 5}, {2, 5, 7}, {1, 5, 20, 24}, {4, 6, 9}}) {
        const Configuration c = make_curve(std::span<const Int>(e));
        const auto g = graver_basis(c).moves;
        CHECK(std::is_sorted(g.begin(), g.end()));
        for (const auto& u : g) {
            CHECK(in_lattice(c, u));
            CHECK(is_sign_canonical(u));
            for (const auto& v : g)
                if (u != v) {
                    CHECK_FALSE(conformal_leq(v, u));
                    CHECK_FALSE(conformal_leq(-v, u));
                }
        }
        const Int K = max_abs_entry(g) + 1;
        if (e.size() <= 3 || K <= 25) CHECK(oracle::curve_graver_box(e, K) == g);
    }
}

TEST_CASE("A_5 has 46 Graver elements") {
    CHECK(graver_basis(make_curve({1, 5, 20, 24})).moves.size() == 46);
}

TEST_CASE("Graver basis of a small Lawrence lifting") {
    const Configuration base = make_curve({1, 2});
    const Configuration l = lift(base, 2);
    const auto g = graver_basis(l).moves;
    CHECK(g == graver_oracle_box(Configuration(l.matrix(), l.grading()), 3).moves);
}

TEST_CASE("budget exhaustion is explicit") {
    GraverLimits tiny;
    tiny.max_elements = 2;
    CHECK_THROWS_AS(graver_basis(make_curve({1, 5, 20, 24}), tiny), BudgetExceeded);
    GraverLimits small_box;
    small_box.max_box_points = 10;
    CHECK_THROWS_AS(graver_oracle_box(make_curve({1, 5, 20, 24}), 3, small_box), BudgetExceeded);
}
