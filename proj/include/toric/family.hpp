#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "toric/fibers.hpp"
#include "toric/lawrence.hpp"

namespace toric {

/// A_n = (1, n, n²−n, n²−1), n ≥ 3.
struct FamilyMember {
    std::size_t n = 0;
    Configuration config;
};

FamilyMember curve_family(std::size_t n);

/// The n×4 element of L(A_n⁽ⁿ⁾) of type n: n−2 rows (1,−1,−1,1), then
/// (0,0,n+1,−n), then (2−n,n−2,−3,2).
struct Witness {
    FamilyMember member;
    LiftedMove move;
};

Witness witness(std::size_t n);

/// Pivots of the fiber of a fixed move that survive a coordinate filter,
/// compared against the expected closed form.
struct PivotCheck {
    bool pass = false;
    Move move;
    IntVec degree;
    std::size_t fiber_size = 0;
    std::vector<FiberPoint> pivots;
    std::vector<FiberPoint> expected;
    std::vector<ScDecomposition> decompositions;
};

/// Fiber of (1,−1,−1,1) at degree n², pivots with first coordinate 0:
/// exactly (0,1,1,0) and (0,n,0,0).
PivotCheck check_unit_row_first_zero(std::size_t n);

/// Same fiber, pivots with second coordinate 0: exactly (1,0,0,1), (n,0,1,0)
/// and (n²,0,0,0).
PivotCheck check_unit_row_second_zero(std::size_t n);

/// Fiber of (2−n,n−2,−3,2) at degree 3n²−2n−2, pivots with first two
/// coordinates in [0, n−2]: exactly (0,n−2,0,2) and (n−2,0,3,0), so every
/// decomposition under that sign pattern is improper.
PivotCheck check_last_row_rigid(std::size_t n);

struct WitnessCheck {
    bool pass = false;
    std::size_t fiber_size = 0;
    std::vector<FiberPoint> points;
    IntVec column_totals;
};

/// The Lawrence fiber at the positive part of witness(n) is {u⁺, u⁻}.
WitnessCheck verify_witness_indispensable(std::size_t n, std::size_t cap = kDefaultFiberCap);

struct ReferenceRow {
    std::size_t r;
    std::size_t size;
    std::size_t max_type;
};

/// Published minimal Markov basis sizes and types of A_5⁽ʳ⁾, r = 2..7.
const std::vector<ReferenceRow>& a5_reference_rows();

struct TableCheck {
    bool pass = false;
    ComplexityProfile profile;
    /// One entry per computed row: whether (size, max type) matches.
    std::vector<bool> matches;
};

TableCheck a5_table(std::size_t rmax, const ProfileOptions& options = {});

/// The two 6×4 matrices listed for A_5⁽⁶⁾, exactly as printed.
const std::array<IntMat, 2>& type6_examples();

struct MatrixAudit {
    IntMat matrix;
    bool rows_in_lattice = false;
    IntVec column_sums;
    std::size_t type = 0;
    /// Every distinct row permutation stays in L(A_5⁽⁶⁾) with type 6.
    bool permutations_ok = false;
    std::size_t distinct_permutations = 0;
    bool member() const { return rows_in_lattice && column_sums.is_zero(); }
};

struct Type6Check {
    bool pass = false;
    std::array<MatrixAudit, 2> audits;
};

Type6Check verify_type6_examples();
/// Audit of arbitrary 6×4 matrices under the same rules.
Type6Check audit_type6(const std::array<IntMat, 2>& matrices);

/// Minimal Markov basis of the triple has exactly two elements.
bool is_complete_intersection(const std::array<Int, 3>& triple,
                              const MarkovOptions& options = {});

struct CiCheck {
    bool pass = false;
    std::vector<std::pair<std::array<Int, 3>, bool>> subsets;
    std::size_t curve_generators = 0;
};

/// Every 3-subset of A_n is a complete intersection and A_n has a 3-element
/// minimal Markov basis.
CiCheck verify_subsets_ci(std::size_t n, const MarkovOptions& options = {});

/// (1, n, n²−n, n²−1, extras...).
Configuration extended_curve(std::size_t n, const std::vector<Int>& extras);

} // namespace toric
