#pragma once

#include <cstddef>
#include <vector>

#include "toric/intcore.hpp"

namespace toric {

/// Term order for binomial completion. Only the listed coordinates are
/// monomial variables; every other coordinate of a move is carried along but
/// ignored by the order and by divisibility (it is "free"). The order is
/// graded reverse lexicographic with `variables.back()` the cheapest variable.
/// `weights` (one per listed variable, all positive) must make every input
/// binomial homogeneous.
struct BinomialOrder {
    std::vector<std::size_t> variables;
    std::vector<Int> weights;
};

struct CompletionLimits {
    std::size_t max_elements = 1'000'000;
    /// Wall-clock limit in seconds; 0 disables it.
    double max_seconds = 0;
};

struct CompletionStats {
    std::size_t pairs_created = 0;
    std::size_t pairs_reduced = 0;
    std::size_t pairs_skipped_chain = 0;
    std::size_t elements_added = 0;
    std::size_t final_size = 0;
};

/// Buchberger completion of the binomials x^{g⁺} − x^{g⁻} of the generators,
/// carried out on exponent vectors (common monomial factors cancel as soon as
/// they appear). Returns a minimal Gröbner basis of a binomial ideal J with
/// ⟨generators⟩ ⊆ J ⊆ ⟨generators⟩ : (∏ x_i)^∞; since no returned vector has a
/// common factor, J is saturated with respect to the cheapest variable.
///
/// Throws BudgetExceeded when a limit is hit.
std::vector<IntVec> complete_binomials(const std::vector<IntVec>& generators,
                                       const BinomialOrder& order,
                                       const CompletionLimits& limits = {},
                                       CompletionStats* stats = nullptr);

} // namespace toric
