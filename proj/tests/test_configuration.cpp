#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/configuration.hpp"

using namespace toric;

namespace {

void check_kernel(const Configuration& c) {
    const LatticeBasis b = kernel_basis(c);
    CHECK(b.rank == c.cols() - matrix_rank(c.matrix()));
    CHECK(b.vectors.size() == b.rank);
    for (const auto& v : b.vectors) {
        CHECK(in_lattice(c, v));
        CHECK(is_sign_canonical(v));
    }
    if (b.rank == 0) return;
    const IntMat basis = rows_matrix(b.vectors, c.cols());
    CHECK(matrix_rank(basis) == b.rank);
    // saturated: all elementary divisors are 1
    for (Int d : elementary_divisors(basis)) CHECK(d == 1);
}

} // namespace

TEST_CASE("make_curve") {
    const Configuration a = make_curve({1, 5, 20, 24});
    CHECK(a.kind() == ConfigKind::curve);
    CHECK(a.rows() == 1);
    CHECK(a.cols() == 4);
    CHECK(a.grading() == IntVec{1});
    CHECK(make_curve({3, 4, 5}).cols() == 3);
    CHECK(make_curve({1, 3, 6, 8}).curve_entries() == std::vector<Int>{1, 3, 6, 8});
    CHECK_THROWS_AS(make_curve({1, 0, 3}), InvalidConfiguration);
    CHECK_THROWS_AS(make_curve({2, -1}), InvalidConfiguration);
}

TEST_CASE("general configurations need a positivity certificate") {
    CHECK_NOTHROW(Configuration(IntMat::from_rows({{1, 1, 1}, {0, 1, 2}}), IntVec{1, 0}));
    CHECK_THROWS_AS(Configuration(IntMat::from_rows({{1, 0, 1}, {0, 0, 1}}), IntVec{1, 1}),
                    InvalidConfiguration);
    CHECK_THROWS_AS(Configuration(IntMat::from_rows({{1, 1}, {0, 1}}), IntVec{0, 1}),
                    InvalidConfiguration);
    CHECK_THROWS_AS(Configuration(IntMat::from_rows({{1, -1}}), IntVec{1}),
                    InvalidConfiguration);
}

TEST_CASE("kernel_basis examples") {
    auto b = kernel_basis(make_curve({1, 1}));
    CHECK(b.rank == 1);
    CHECK(b.vectors == std::vector<Move>{{1, -1}});

    b = kernel_basis(make_curve({2, 3}));
    CHECK(b.vectors == std::vector<Move>{{3, -2}});

    const Configuration c = make_curve({1, 3, 6, 8});
    b = kernel_basis(c);
    CHECK(b.rank == 3);
    for (const auto& v : b.vectors) CHECK(v[0] + 3 * v[1] + 6 * v[2] + 8 * v[3] == 0);
}

TEST_CASE("kernel_basis is saturated on a corpus") {
    for (auto e : std::vector<std::vector<Int>>{
             {1, 5, 20, 24}, {3, 4, 5}, {6, 10, 15}, {4, 6, 9, 11}, {12, 12, 7}, {5}, {2, 4}})
        check_kernel(make_curve(std::span<const Int>(e)));
    check_kernel(Configuration(IntMat::from_rows({{1, 1, 1, 1}, {0, 1, 2, 3}}), IntVec{1, 0}));
    check_kernel(Configuration(IntMat::from_rows({{2, 0, 1, 3}, {0, 2, 1, 3}}), IntVec{1, 1}));
}

TEST_CASE("multidegree") {
    const Configuration a = make_curve({1, 5, 20, 24});
    CHECK(multidegree(a, {0, 1, 1, 0}) == IntVec{25});
    CHECK(multidegree(a, {0, 0, 0, 0}) == IntVec{0});
    CHECK(multidegree(a, {3, 0, 3, 0}) == IntVec{63});
    CHECK_THROWS_AS(multidegree(a, {1, 2}), DimensionError);
}

TEST_CASE("elementary divisors detect torsion") {
    CHECK(elementary_divisors(IntMat::from_rows({{2, 0}, {0, 3}})) == std::vector<Int>{1, 6});
    CHECK(elementary_divisors(IntMat::from_rows({{2, 4}})) == std::vector<Int>{2});
}
