#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/configuration.hpp"

namespace toric {

/// Default maximum number of points collected from one fiber.
inline constexpr std::size_t kDefaultFiberCap = 10'000'000;

/// A nonnegative point t with A·t equal to its fiber's degree.
using FiberPoint = IntVec;

/// F_b = {t ∈ Nⁿ : A·t = b}. Points are lexicographically sorted and distinct.
/// When `truncated` is set the point list is a strict prefix of the full fiber
/// and no exact statement may be derived from it.
struct Fiber {
    IntVec degree;
    std::vector<FiberPoint> points;
    bool truncated = false;

    std::size_t size() const noexcept { return points.size(); }
    bool contains(const FiberPoint& t) const;
};

/// Depth-first enumeration over coordinates, left to right. Coordinate j is
/// bounded by the box (if any), by the residual degree of every row, and by the
/// remaining grading budget. Lawrence liftings are dispatched to the
/// row-structured enumeration.
Fiber enumerate_fiber(const Configuration& config, const IntVec& degree,
                      std::size_t cap = kDefaultFiberCap,
                      const std::optional<IntVec>& box = std::nullopt);

/// Fiber at the degree A·u⁺; contains u⁺ and u⁻.
Fiber fiber_of(const Configuration& config, const Move& u, std::size_t cap = kDefaultFiberCap);

/// Fiber of A^(r) at the degree of the r×n matrix `target` (target ≥ 0),
/// enumerated row by row. Each row is drawn from the base fiber of its own
/// row degree, boxed by what is left of the column totals. Points are the
/// flattened (row-major) matrices, in lexicographic order.
Fiber enumerate_lawrence_fiber(const Configuration& base, std::size_t r, const IntMat& target,
                               std::size_t cap = kDefaultFiberCap);

/// Same enumeration from explicit row degrees (r×m, row-major) and column totals.
Fiber lawrence_fiber_at(const Configuration& base, std::size_t r, const IntVec& row_degrees,
                        const IntVec& column_totals, std::size_t cap = kDefaultFiberCap);

/// u = left +sc right, with left = u⁺ − pivot and right = pivot − u⁻.
struct ScDecomposition {
    Move left;
    Move right;
    FiberPoint pivot;

    /// Both parts nonzero, i.e. the pivot is neither u⁺ nor u⁻.
    bool proper() const { return !left.is_zero() && !right.is_zero(); }
};

/// One semiconformal decomposition per point of fiber_of(u), in fiber order.
/// Throws TruncatedFiber if the fiber could not be enumerated completely.
std::vector<ScDecomposition> sc_decompositions(const Configuration& config, const Move& u,
                                               std::size_t cap = kDefaultFiberCap);

/// u = v + w with v(i) > 0 ⇒ w(i) ≥ 0 and w(i) < 0 ⇒ v(i) ≤ 0.
bool is_semiconformal(const IntVec& u, const IntVec& v, const IntVec& w);

} // namespace toric
