#include "toric/lawrence.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace toric {

namespace {

std::vector<Move> canonical_sorted(std::vector<Move> v) {
    for (auto& m : v) m = canonicalize_sign(m);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

Configuration lift(const Configuration& base, std::size_t r) {
    if (r < 2) throw DimensionError("Lawrence lifting needs r >= 2");
    const std::size_t m = base.rows();
    const std::size_t n = base.cols();
    const std::size_t rows = checked_add(static_cast<Int>(checked_mul(static_cast<Int>(r),
                                                                      static_cast<Int>(m))),
                                         static_cast<Int>(n));
    const std::size_t cols = static_cast<std::size_t>(checked_mul(static_cast<Int>(r),
                                                                  static_cast<Int>(n)));
    IntMat L(rows, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t k = 0; k < n; ++k) L(i * m + a, i * n + k) = base.matrix()(a, k);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < n; ++k) L(r * m + k, i * n + k) = 1;
    IntVec grading(rows);
    for (std::size_t k = 0; k < n; ++k) grading[r * m + k] = 1;
    return Configuration::make_lawrence(base, r, std::move(L), std::move(grading));
}

std::size_t type_of(const IntMat& m) {
    std::size_t t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto row = m.row(i);
        if (std::any_of(row.begin(), row.end(), [](Int x) { return x != 0; })) ++t;
    }
    return t;
}

std::size_t type_of(const LiftedMove& m) { return type_of(m.matrix); }

std::size_t LiftedMove::type() const { return type_of(matrix); }

LiftedMove as_lifted(const Move& u, std::size_t r, std::size_t n) {
    if (u.size() != r * n) throw DimensionError("lifted move has wrong length");
    return LiftedMove{IntMat(r, n, u.entries())};
}

bool in_lifted_lattice(const Configuration& base, const IntMat& m) {
    if (m.cols() != base.cols()) throw DimensionError("lifted move has wrong column count");
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!in_lattice(base, m.row_vec(i))) return false;
    for (std::size_t k = 0; k < m.cols(); ++k) {
        Int s = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) s = checked_add(s, m(i, k));
        if (s != 0) return false;
    }
    return true;
}

LiftedMove embed_zero_columns(const LiftedMove& u, std::size_t n) {
    const IntMat& a = u.matrix;
    if (n < a.cols()) throw DimensionError("cannot embed into fewer columns");
    IntMat out(a.rows(), n);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) out(i, k) = a(i, k);
    return LiftedMove{std::move(out)};
}

LiftedMove project_columns(const LiftedMove& v, std::size_t s) {
    const IntMat& a = v.matrix;
    if (s > a.cols()) throw DimensionError("cannot project onto more columns");
    IntMat out(a.rows(), s);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < s; ++k) out(i, k) = a(i, k);
    return LiftedMove{std::move(out)};
}

std::size_t max_type(const std::vector<Move>& moves, std::size_t r, std::size_t n) {
    std::size_t t = 0;
    for (const auto& u : moves) t = std::max(t, type_of(as_lifted(u, r, n)));
    return t;
}

ComplexityProfile complexity_profile(const Configuration& curve, std::size_t rmax,
                                     const ProfileOptions& options) {
    if (rmax < 2) throw DimensionError("complexity profile needs rmax >= 2");
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    const std::size_t n = curve.cols();
    ComplexityProfile profile;
    std::vector<Move> previous;
    for (std::size_t r = 2; r <= rmax; ++r) {
        if (options.max_seconds > 0 && elapsed() > options.max_seconds) {
            profile.truncated = "r=" + std::to_string(r) + ": time budget of " +
                                std::to_string(options.max_seconds) + " s spent";
            break;
        }
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const Configuration lifted = lift(curve, r);
            const bool seed = r >= 3 && options.markov.seed_with_previous_lift;
            const auto gens = lawrence_generating_set(curve, r, seed ? &previous : nullptr,
                                                      options.markov);
            MarkovBasis basis = minimize_markov(lifted, gens, options.markov);
            ComplexityRow row;
            row.r = r;
            row.basis_size = basis.moves.size();
            row.type_counts.assign(r + 1, 0);
            for (const auto& u : basis.moves) ++row.type_counts[type_of(as_lifted(u, r, n))];
            row.max_type = max_type(basis.moves, r, n);
            row.seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            profile.complexity_lower_bound = std::max(profile.complexity_lower_bound, row.max_type);
            profile.per_r.push_back(std::move(row));
            previous = std::move(basis.moves);
        } catch (const BudgetExceeded& e) {
            profile.truncated = "r=" + std::to_string(r) + ": " + e.what();
            break;
        } catch (const TruncatedFiber& e) {
            profile.truncated = "r=" + std::to_string(r) + ": " + e.what();
            break;
        }
    }
    return profile;
}

RestrictionReport check_restriction(const Configuration& curve, std::size_t s, std::size_t r,
                                    const MarkovOptions& options) {
    const auto entries = curve.curve_entries();
    const std::size_t n = entries.size();
    if (s == 0 || s > n) throw DimensionError("restriction prefix must have 1..n entries");
    const Configuration prefix = make_curve(std::span<const Int>(entries.data(), s));

    std::vector<Move> embedded;
    for (const auto& u : universal_markov_basis(lift(prefix, r), options).moves)
        embedded.push_back(embed_zero_columns(as_lifted(u, r, s), n).flatten());
    embedded = canonical_sorted(std::move(embedded));

    std::vector<Move> restricted;
    for (const auto& v : universal_markov_basis(lift(curve, r), options).moves) {
        const LiftedMove lv = as_lifted(v, r, n);
        bool zero_tail = true;
        for (std::size_t i = 0; i < r && zero_tail; ++i)
            for (std::size_t k = s; k < n && zero_tail; ++k) zero_tail = lv.matrix(i, k) == 0;
        if (zero_tail) restricted.push_back(v);
    }
    restricted = canonical_sorted(std::move(restricted));

    RestrictionReport report;
    report.prefix_universal_size = embedded.size();
    report.restricted_universal_size = restricted.size();
    std::set_difference(embedded.begin(), embedded.end(), restricted.begin(), restricted.end(),
                        std::back_inserter(report.only_in_prefix));
    std::set_difference(restricted.begin(), restricted.end(), embedded.begin(), embedded.end(),
                        std::back_inserter(report.only_in_restricted));
    report.holds = report.only_in_prefix.empty() && report.only_in_restricted.empty();
    return report;
}

} // namespace toric
