#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toric/family.hpp"
#include "toric/lawrence.hpp"

using namespace toric;

TEST_CASE("lift shapes and grading") {
    const Configuration l = lift(make_curve({1, 5, 20, 24}), 2);
    CHECK(l.rows() == 6);
    CHECK(l.cols() == 8);
    CHECK(l.kind() == ConfigKind::lawrence);
    const Configuration l11 = lift(make_curve({1, 1}), 2);
    CHECK(l11.rows() == 4);
    CHECK(l11.cols() == 4);
    for (Int d : l11.column_degrees()) CHECK(d == 1);
    CHECK(l11.matrix() == IntMat::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}}));
    const Configuration l3 = lift(make_curve({1, 3, 6, 8}), 3);
    CHECK(l3.rows() == 7);
    CHECK(l3.cols() == 12);
    CHECK_THROWS_AS(lift(make_curve({1, 1}), 1), DimensionError);
}

TEST_CASE("type_of") {
    CHECK(type_of(witness(5).move) == 5);
    CHECK(type_of(IntMat(3, 4)) == 0);
    CHECK(type_of(type6_examples()[0]) == 6);
}

TEST_CASE("membership predicate matches the lifted kernel") {
    const Configuration base = make_curve({1, 3, 6, 8});
    const Configuration l = lift(base, 3);
    std::mt19937 rng(9);
    for (int trial = 0; trial < 3000; ++trial) {
        const IntVec v = oracle::random_vec(rng, 12, -2, 2);
        CHECK(in_lifted_lattice(base, as_lifted(v, 3, 4).matrix) == in_lattice(l, v));
    }
    // every lifted kernel basis vector and every row permutation of it
    for (const auto& v : kernel_basis(l).vectors) {
        IntMat m = as_lifted(v, 3, 4).matrix;
        CHECK(in_lifted_lattice(base, m));
        std::vector<IntVec> rows{m.row_vec(0), m.row_vec(1), m.row_vec(2)};
        std::sort(rows.begin(), rows.end());
        do {
            const IntMat p = IntMat::from_rows(rows, 4);
            CHECK(in_lifted_lattice(base, p));
            CHECK(type_of(p) == type_of(m));
        } while (std::next_permutation(rows.begin(), rows.end()));
    }
}

TEST_CASE("σ and π") {
    const LiftedMove u{IntMat::from_rows({{1, -1}, {-1, 1}})};
    const LiftedMove s = embed_zero_columns(u, 3);
    CHECK(s.matrix == IntMat::from_rows({{1, -1, 0}, {-1, 1, 0}}));
    CHECK(project_columns(s, 2).matrix == u.matrix);
    CHECK(in_lifted_lattice(make_curve({1, 1, 7}), s.matrix));
    const LiftedMove w{IntMat::from_rows({{2, -1, 0}, {-2, 1, 0}})};
    CHECK(in_lifted_lattice(make_curve({1, 2}), project_columns(w, 2).matrix));
    CHECK_THROWS_AS(embed_zero_columns(u, 1), DimensionError);
}

TEST_CASE("complexity profile examples") {
    const ComplexityProfile p = complexity_profile(make_curve({1, 5, 20, 24}), 3);
    REQUIRE(p.per_r.size() == 2);
    CHECK(p.per_r[0].basis_size == 46);
    CHECK(p.per_r[0].max_type == 2);
    CHECK(p.per_r[1].basis_size == 174);
    CHECK(p.per_r[1].max_type == 3);
    CHECK(p.complexity_lower_bound == 3);
    CHECK_FALSE(p.truncated);

    const ComplexityProfile q = complexity_profile(make_curve({1, 1}), 2);
    CHECK(q.per_r[0].max_type == 2);
}

TEST_CASE("per-type counts satisfy the binomial lifting identity") {
    // A type-k generator of A^(r) is a full-type generator of A^(k) placed in k
    // of the r rows, so size(r) = Σ_k C(r,k)·N_k.
    const ComplexityProfile p = complexity_profile(make_curve({1, 5, 20, 24}), 4);
    REQUIRE(p.per_r.size() == 3);
    std::vector<std::size_t> full(5, 0);
    for (const auto& row : p.per_r) full[row.r] = row.type_counts[row.r];
    auto choose = [](std::size_t n, std::size_t k) {
        std::size_t c = 1;
        for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
        return c;
    };
    for (const auto& row : p.per_r)
        for (std::size_t k = 2; k <= row.r; ++k) CHECK(row.type_counts[k] == choose(row.r, k) * full[k]);
}

TEST_CASE("budget exhaustion truncates the profile") {
    ProfileOptions o;
    o.markov.completion.max_elements = 50;
    const ComplexityProfile p = complexity_profile(make_curve({1, 5, 20, 24}), 4, o);
    CHECK(p.truncated.has_value());
    CHECK(p.per_r.size() < 3);
}

TEST_CASE("restriction examples") {
    CHECK(check_restriction(make_curve({1, 3, 6, 8}), 3, 2).holds);
    CHECK(check_restriction(make_curve({1, 2}), 1, 2).holds);
    const RestrictionReport rep = check_restriction(make_curve({1, 2}), 1, 2);
    CHECK(rep.prefix_universal_size == 0);
    CHECK(rep.restricted_universal_size == 0);
}

TEST_CASE("restriction on a non-prefix-closed example") {
    const RestrictionReport rep = check_restriction(make_curve({3, 4, 5, 7}), 3, 2);
    CHECK(rep.holds);
    CHECK(rep.prefix_universal_size > 0);
}

TEST_CASE("non-complete-intersection triple forces type 3") {
    const ComplexityProfile p = complexity_profile(make_curve({3, 4, 5, 7}), 3);
    REQUIRE(p.per_r.size() == 2);
    CHECK(p.per_r[1].max_type >= 3);
}
