#include "toric/family.hpp"

#include <algorithm>

namespace toric {

namespace {

Int as_int(std::size_t n) { return static_cast<Int>(n); }

void require_family_n(std::size_t n) {
    if (n < 3) throw DimensionError("family member needs n >= 3, got " + std::to_string(n));
}

PivotCheck pivot_check(std::size_t n, const Move& u, std::vector<FiberPoint> expected,
                       bool (*keep)(const FiberPoint&, std::size_t)) {
    const FamilyMember a = curve_family(n);
    PivotCheck out;
    out.move = u;
    out.degree = multidegree(a.config, sign_split(u).plus);
    const Fiber f = fiber_of(a.config, u);
    if (f.truncated) throw TruncatedFiber("fiber of " + to_string(u) + " exceeds the cap");
    out.fiber_size = f.size();
    for (const auto& t : f.points)
        if (keep(t, n)) {
            out.pivots.push_back(t);
            out.decompositions.push_back({sign_split(u).plus - t, t - sign_split(u).minus, t});
        }
    std::sort(expected.begin(), expected.end());
    out.expected = std::move(expected);
    out.pass = out.pivots == out.expected;
    return out;
}

} // namespace

FamilyMember curve_family(std::size_t n) {
    require_family_n(n);
    const Int k = as_int(n);
    const Int sq = checked_mul(k, k);
    return FamilyMember{n, make_curve({1, k, checked_sub(sq, k), checked_sub(sq, 1)})};
}

Witness witness(std::size_t n) {
    FamilyMember member = curve_family(n);
    const Int k = as_int(n);
    IntMat m(n, 4);
    for (std::size_t i = 0; i + 2 < n; ++i) {
        m(i, 0) = 1;
        m(i, 1) = -1;
        m(i, 2) = -1;
        m(i, 3) = 1;
    }
    m(n - 2, 2) = k + 1;
    m(n - 2, 3) = -k;
    m(n - 1, 0) = 2 - k;
    m(n - 1, 1) = k - 2;
    m(n - 1, 2) = -3;
    m(n - 1, 3) = 2;
    if (!in_lifted_lattice(member.config, m))
        throw InvalidConfiguration("witness matrix is not a lattice element");
    return Witness{std::move(member), LiftedMove{std::move(m)}};
}

PivotCheck check_unit_row_first_zero(std::size_t n) {
    const Int k = as_int(n);
    return pivot_check(n, Move{1, -1, -1, 1}, {FiberPoint{0, 1, 1, 0}, FiberPoint{0, k, 0, 0}},
                       [](const FiberPoint& t, std::size_t) { return t[0] == 0; });
}

PivotCheck check_unit_row_second_zero(std::size_t n) {
    const Int k = as_int(n);
    return pivot_check(n, Move{1, -1, -1, 1},
                       {FiberPoint{1, 0, 0, 1}, FiberPoint{k, 0, 1, 0},
                        FiberPoint{checked_mul(k, k), 0, 0, 0}},
                       [](const FiberPoint& t, std::size_t) { return t[1] == 0; });
}

PivotCheck check_last_row_rigid(std::size_t n) {
    const Int k = as_int(n);
    return pivot_check(n, Move{2 - k, k - 2, -3, 2},
                       {FiberPoint{0, k - 2, 0, 2}, FiberPoint{k - 2, 0, 3, 0}},
                       [](const FiberPoint& t, std::size_t m) {
                           const Int top = as_int(m) - 2;
                           return t[0] <= top && t[1] <= top;
                       });
}

WitnessCheck verify_witness_indispensable(std::size_t n, std::size_t cap) {
    const Witness w = witness(n);
    IntMat plus(n, 4);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < 4; ++k) plus(i, k) = std::max<Int>(w.move.matrix(i, k), 0);
    const Fiber f = enumerate_lawrence_fiber(w.member.config, n, plus, cap);
    if (f.truncated) throw TruncatedFiber("witness fiber exceeds the cap");
    WitnessCheck out;
    out.fiber_size = f.size();
    out.points = f.points;
    out.column_totals = IntVec(4);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < 4; ++k) out.column_totals[k] += plus(i, k);
    const auto split = sign_split(w.move.flatten());
    out.pass = f.size() == 2 && f.contains(split.plus) && f.contains(split.minus);
    return out;
}

const std::vector<ReferenceRow>& a5_reference_rows() {
    static const std::vector<ReferenceRow> rows{
        {2, 46, 2}, {3, 174, 3}, {4, 528, 4}, {5, 1520, 5}, {6, 4110, 6}, {7, 10206, 6}};
    return rows;
}

TableCheck a5_table(std::size_t rmax, const ProfileOptions& options) {
    if (rmax < 2 || rmax > 7) throw DimensionError("table rows exist for r = 2..7");
    TableCheck out;
    out.profile = complexity_profile(curve_family(5).config, rmax, options);
    out.pass = true;
    for (const auto& row : out.profile.per_r) {
        const auto& ref = a5_reference_rows()[row.r - 2];
        const bool ok = row.basis_size == ref.size && row.max_type == ref.max_type;
        out.matches.push_back(ok);
        out.pass = out.pass && ok;
    }
    return out;
}

const std::array<IntMat, 2>& type6_examples() {
    static const std::array<IntMat, 2> m{
        IntMat::from_rows({{0, 0, -6, 5},
                           {-2, 2, -4, 3},
                           {-2, 2, -4, 3},
                           {-2, 2, -4, 3},
                           {3, -3, 3, -2},
                           {3, -3, 3, -2}}),
        IntMat::from_rows({{0, 0, -6, 5},
                           {0, 0, -6, 5},
                           {-1, 1, -5, 4},
                           {-1, 1, -5, 4},
                           {-1, 1, -5, 4},
                           {3, -3, 3, -2}})};
    return m;
}

Type6Check audit_type6(const std::array<IntMat, 2>& matrices) {
    const Configuration a5 = curve_family(5).config;
    Type6Check out;
    out.pass = true;
    for (std::size_t k = 0; k < 2; ++k) {
        const IntMat& m = matrices[k];
        if (m.rows() != 6 || m.cols() != 4) throw DimensionError("type-6 audit needs 6x4 matrices");
        MatrixAudit& audit = out.audits[k];
        audit.matrix = m;
        audit.rows_in_lattice = true;
        for (std::size_t i = 0; i < 6; ++i)
            audit.rows_in_lattice = audit.rows_in_lattice && in_lattice(a5, m.row_vec(i));
        audit.column_sums = IntVec(4);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                audit.column_sums[j] = checked_add(audit.column_sums[j], m(i, j));
        audit.type = type_of(m);

        std::vector<IntVec> rows;
        for (std::size_t i = 0; i < 6; ++i) rows.push_back(m.row_vec(i));
        std::sort(rows.begin(), rows.end());
        audit.permutations_ok = true;
        do {
            const IntMat p = IntMat::from_rows(rows, 4);
            ++audit.distinct_permutations;
            audit.permutations_ok =
                audit.permutations_ok && in_lifted_lattice(a5, p) && type_of(p) == 6;
        } while (std::next_permutation(rows.begin(), rows.end()));
        out.pass = out.pass && audit.member() && audit.type == 6 && audit.permutations_ok;
    }
    return out;
}

Type6Check verify_type6_examples() { return audit_type6(type6_examples()); }

bool is_complete_intersection(const std::array<Int, 3>& triple, const MarkovOptions& options) {
    const Configuration c = make_curve({triple[0], triple[1], triple[2]});
    const std::size_t codim = kernel_basis(c).rank;
    if (codim != 2) throw DimensionError("triple has kernel rank " + std::to_string(codim));
    return minimal_markov_basis(c, options).moves.size() == codim;
}

CiCheck verify_subsets_ci(std::size_t n, const MarkovOptions& options) {
    const FamilyMember a = curve_family(n);
    const auto e = a.config.curve_entries();
    CiCheck out;
    out.pass = true;
    for (std::size_t skip = 4; skip-- > 0;) {
        std::array<Int, 3> t{};
        std::size_t k = 0;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != skip) t[k++] = e[i];
        const bool ci = is_complete_intersection(t, options);
        out.subsets.emplace_back(t, ci);
        out.pass = out.pass && ci;
    }
    out.curve_generators = minimal_markov_basis(a.config, options).moves.size();
    out.pass = out.pass && out.curve_generators == 3;
    return out;
}

Configuration extended_curve(std::size_t n, const std::vector<Int>& extras) {
    std::vector<Int> entries = curve_family(n).config.curve_entries();
    entries.insert(entries.end(), extras.begin(), extras.end());
    return make_curve(entries);
}

} // namespace toric
