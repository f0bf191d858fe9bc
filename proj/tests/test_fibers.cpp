#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toric/fibers.hpp"
#include "toric/lawrence.hpp"

using namespace toric;

TEST_CASE("enumerate_fiber examples") {
    const Configuration a = make_curve({1, 5, 20, 24});
    const Fiber f = enumerate_fiber(a, IntVec{25});
    CHECK(f.size() == 9);
    CHECK_FALSE(f.truncated);
    std::vector<FiberPoint> first_zero;
    for (const auto& t : f.points)
        if (t[0] == 0) first_zero.push_back(t);
    CHECK(first_zero == std::vector<FiberPoint>{{0, 1, 1, 0}, {0, 5, 0, 0}});
    CHECK(enumerate_fiber(make_curve({2, 3}), IntVec{1}).size() == 0);
}

TEST_CASE("fibers agree with brute force on a corpus") {
    for (auto e : std::vector<std::vector<Int>>{
             {1, 5, 20, 24}, {3, 4, 5}, {2, 3}, {4, 6, 9, 11}, {5, 7, 7}, {1, 3, 6, 8}}) {
        const Configuration c = make_curve(std::span<const Int>(e));
        for (Int b = 0; b <= 40; ++b) {
            const Fiber f = enumerate_fiber(c, IntVec{b});
            CHECK(f.points == oracle::curve_fiber(e, b));
            CHECK(std::is_sorted(f.points.begin(), f.points.end()));
        }
    }
}

TEST_CASE("general configurations and boxes") {
    const Configuration c(IntMat::from_rows({{1, 1, 1, 1}, {0, 1, 2, 3}}), IntVec{1, 0});
    const Fiber f = enumerate_fiber(c, IntVec{3, 3});
    for (const auto& t : f.points) CHECK(multidegree(c, t) == IntVec{3, 3});
    CHECK(f.points == std::vector<FiberPoint>{{0, 3, 0, 0}, {1, 1, 1, 0}, {2, 0, 0, 1}});
    const Fiber boxed = enumerate_fiber(c, IntVec{3, 3}, kDefaultFiberCap, IntVec{1, 1, 1, 1});
    CHECK(boxed.points == std::vector<FiberPoint>{{1, 1, 1, 0}});
}

TEST_CASE("cap truncates without error") {
    const Fiber f = enumerate_fiber(make_curve({1, 1}), IntVec{10}, 3);
    CHECK(f.truncated);
    CHECK(f.size() == 3);
    CHECK_THROWS_AS(enumerate_fiber(make_curve({1, 1}), IntVec{1}, 0), DimensionError);
}

TEST_CASE("fiber_of examples") {
    CHECK(fiber_of(make_curve({1, 1}), {1, -1}).points == std::vector<FiberPoint>{{0, 1}, {1, 0}});
    CHECK(fiber_of(make_curve({3, 4, 5}), {1, -2, 1}).points ==
          std::vector<FiberPoint>{{0, 2, 0}, {1, 0, 1}});
    const Fiber f = fiber_of(make_curve({1, 5, 20, 24}), {1, -1, -1, 1});
    CHECK(f.size() == 9);
    CHECK(f.contains({1, 0, 0, 1}));
    CHECK(f.contains({5, 0, 1, 0}));
    CHECK(f.contains({25, 0, 0, 0}));
}

TEST_CASE("sc_decompositions examples") {
    const Configuration a = make_curve({1, 5, 20, 24});
    const Move u{1, -1, -1, 1};
    const auto all = sc_decompositions(a, u);
    CHECK(all.size() == 9);

    std::vector<std::pair<Move, Move>> first_zero;
    std::vector<Move> second_zero_rights;
    for (const auto& d : all) {
        CHECK(is_semiconformal(u, d.left, d.right));
        if (d.pivot[0] == 0) first_zero.emplace_back(d.left, d.right);
        if (d.pivot[1] == 0) second_zero_rights.push_back(d.right);
    }
    CHECK(first_zero == std::vector<std::pair<Move, Move>>{{{1, -1, -1, 1}, {0, 0, 0, 0}},
                                                           {{1, -5, 0, 1}, {0, 4, -1, 0}}});
    std::sort(second_zero_rights.begin(), second_zero_rights.end());
    CHECK(second_zero_rights == std::vector<Move>{{1, -1, -1, 1}, {5, -1, 0, 0}, {25, -1, -1, 0}});

    const auto trivial = sc_decompositions(make_curve({1, 1}), {1, -1});
    CHECK(trivial.size() == 2);
    for (const auto& d : trivial) CHECK_FALSE(d.proper());
}

TEST_CASE("is_semiconformal examples and the equivalent inequality form") {
    CHECK(is_semiconformal({1, -1, -1, 1}, {1, -5, 0, 1}, {0, 4, -1, 0}));
    CHECK(is_semiconformal({1, -1}, {1, -1}, {0, 0}));
    CHECK_FALSE(is_semiconformal({1, -1, -1, 1}, {0, 4, -1, 0}, {1, -5, 0, 1}));
    CHECK_THROWS_AS(is_semiconformal({1}, {1, 0}, {0}), DimensionError);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const IntVec v = oracle::random_vec(rng, 4, -3, 3);
        const IntVec w = oracle::random_vec(rng, 4, -3, 3);
        const IntVec u = v + w;
        const bool ineq = leq(sign_split(v).plus, sign_split(u).plus) &&
                          leq(sign_split(w).minus, sign_split(u).minus);
        CHECK(is_semiconformal(u, v, w) == ineq);
    }
}

TEST_CASE("sc decompositions biject with the fiber") {
    for (auto e : std::vector<std::vector<Int>>{{3, 4, 5}, {1, 5, 20, 24}, {4, 6, 9}}) {
        const Configuration c = make_curve(std::span<const Int>(e));
        for (const auto& u : kernel_basis(c).vectors) {
            const auto decs = sc_decompositions(c, u);
            CHECK(decs.size() == fiber_of(c, u).size());
            std::size_t improper = 0;
            for (const auto& d : decs) {
                CHECK(is_semiconformal(u, d.left, d.right));
                CHECK(in_lattice(c, d.left));
                CHECK(in_lattice(c, d.right));
                if (!d.proper()) ++improper;
            }
            CHECK(improper == 2);
        }
    }
}

TEST_CASE("zero is never a proper semiconformal sum") {
    for (auto e : std::vector<std::vector<Int>>{{3, 4, 5}, {2, 7}}) {
        const Configuration c = make_curve(std::span<const Int>(e));
        const auto decs = sc_decompositions(c, IntVec(e.size()));
        CHECK(decs.size() == 1);
        CHECK(decs.front().left.is_zero());
        CHECK(decs.front().right.is_zero());
    }
}

TEST_CASE("Lawrence fibers: examples and brute force") {
    const std::vector<Int> a{1, 3, 6, 8};
    const Configuration base = make_curve({1, 3, 6, 8});
    // positive part of the n = 3 witness
    const IntMat plus = IntMat::from_rows({{1, 0, 0, 1}, {0, 0, 4, 0}, {0, 1, 0, 2}});
    const Fiber f = enumerate_lawrence_fiber(base, 3, plus);
    CHECK(f.size() == 2);
    const IntMat minus = IntMat::from_rows({{0, 1, 1, 0}, {0, 0, 0, 3}, {1, 0, 3, 0}});
    CHECK(f.contains(plus.flatten()));
    CHECK(f.contains(minus.flatten()));
    CHECK(f.points == oracle::lawrence_fiber(a, 3, {9, 24, 19}, {1, 1, 4, 3}));

    const Configuration a5 = make_curve({1, 5, 20, 24});
    const IntMat p5 = IntMat::from_rows({{1, 0, 0, 1}, {1, 0, 0, 1}, {1, 0, 0, 1},
                                          {0, 0, 6, 0}, {0, 3, 0, 2}});
    const Fiber f5 = enumerate_lawrence_fiber(a5, 5, p5);
    REQUIRE(f5.size() == 2);
    IntVec totals(4);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t k = 0; k < 4; ++k) totals[k] += f5.points[0][i * 4 + k];
    CHECK(totals == IntVec{3, 3, 6, 5});

    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        IntMat target(2, 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t k = 0; k < 4; ++k) target(i, k) = std::uniform_int_distribution<Int>(0, 2)(rng);
        const Fiber lf = enumerate_lawrence_fiber(base, 2, target);
        std::vector<Int> rows, cols(4);
        for (std::size_t i = 0; i < 2; ++i) rows.push_back(dot(base.matrix().row(0), target.row(i)));
        for (std::size_t k = 0; k < 4; ++k) cols[k] = target(0, k) + target(1, k);
        CHECK(lf.points == oracle::lawrence_fiber(a, 2, rows, cols));
        // the generic walker on the lifted matrix agrees
        const Configuration lifted = lift(base, 2);
        const Configuration plain(lifted.matrix(), lifted.grading());
        CHECK(enumerate_fiber(plain, multidegree(plain, target.flatten())).points == lf.points);
        for (const auto& t : lf.points)
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t k = 0; k < 4; ++k) CHECK(t[i * 4 + k] <= cols[k]);
    }
}

TEST_CASE("single-row Lawrence fiber matches the stacked matrix [A; I]") {
    const Configuration base = make_curve({3, 4, 5});
    const Configuration stacked(IntMat::from_rows({{3, 4, 5}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                                IntVec{0, 1, 1, 1});
    for (const IntMat& target : {IntMat::from_rows({{2, 1, 1}}), IntMat::from_rows({{0, 3, 0}})}) {
        const Fiber lf = enumerate_lawrence_fiber(base, 1, target);
        CHECK(lf.points == enumerate_fiber(stacked, multidegree(stacked, target.flatten())).points);
        CHECK(lf.points == std::vector<FiberPoint>{target.flatten()});
    }
}
