#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/configuration.hpp"
#include "toric/markov.hpp"

namespace toric {

/// r-th Lawrence lifting: r diagonal copies of A stacked over r copies of the
/// n×n identity, (rm+n)×rn. Grading = indicator of the identity-block rows.
Configuration lift(const Configuration& base, std::size_t r);

/// An element of L(A⁽ʳ⁾) viewed as an r×n matrix.
struct LiftedMove {
    IntMat matrix;

    std::size_t type() const;
    /// Row-major flattening, the coordinate order used by lift().
    Move flatten() const { return matrix.flatten(); }
};

/// Reshapes a move of A⁽ʳ⁾ (length r·n) into its r×n matrix.
LiftedMove as_lifted(const Move& u, std::size_t r, std::size_t n);

/// Number of nonzero rows.
std::size_t type_of(const LiftedMove& m);
std::size_t type_of(const IntMat& m);

/// Rows in L(A) and column sums zero.
bool in_lifted_lattice(const Configuration& base, const IntMat& m);

/// σ: pads every row with zero columns up to n.
LiftedMove embed_zero_columns(const LiftedMove& u, std::size_t n);

/// π: keeps the first s columns.
LiftedMove project_columns(const LiftedMove& v, std::size_t s);

/// Largest type among moves of A⁽ʳ⁾.
std::size_t max_type(const std::vector<Move>& moves, std::size_t r, std::size_t n);

struct ComplexityRow {
    std::size_t r = 0;
    std::size_t basis_size = 0;
    std::size_t max_type = 0;
    double seconds = 0;
    /// Number of minimal generators of each type 1..r (index 0 unused).
    std::vector<std::size_t> type_counts;
};

struct ComplexityProfile {
    std::vector<ComplexityRow> per_r;
    /// Max of max_type over the computed rows; a lower bound for m(A).
    std::size_t complexity_lower_bound = 0;
    /// Set when some r ≤ rmax could not be computed; names the r and the reason.
    std::optional<std::string> truncated;
};

struct ProfileOptions {
    MarkovOptions markov;
    /// Stop before starting an r once this many seconds have elapsed (0: none).
    double max_seconds = 0;
};

/// Minimal Markov bases of A⁽ʳ⁾ for r = 2..rmax. A budget failure at some r
/// ends the profile with `truncated` set instead of throwing.
ComplexityProfile complexity_profile(const Configuration& curve, std::size_t rmax,
                                     const ProfileOptions& options = {});

struct RestrictionReport {
    bool holds = false;
    std::size_t prefix_universal_size = 0;
    std::size_t restricted_universal_size = 0;
    std::vector<Move> only_in_prefix;     // σ(M(B⁽ʳ⁾)) \ (M(A⁽ʳ⁾) ∩ L(B⁽ʳ⁾))
    std::vector<Move> only_in_restricted; // the reverse difference
};

/// Compares σ(M(B⁽ʳ⁾)) with the elements of M(A⁽ʳ⁾) whose last n − s columns
/// vanish, where B is the curve on the first s entries of A.
RestrictionReport check_restriction(const Configuration& curve, std::size_t s, std::size_t r,
                                    const MarkovOptions& options = {});

} // namespace toric
