#pragma once

#include <memory>
#include <string>
#include <vector>

#include "toric/intcore.hpp"

namespace toric {

enum class ConfigKind { curve, lawrence, general };

std::string to_string(ConfigKind kind);

/// A nonnegative integer matrix A together with a grading certificate h
/// (h·a_j > 0 for every column a_j), which proves L(A) ∩ Nⁿ = {0}.
///
/// Lawrence liftings remember their base configuration and r so that fiber
/// enumeration can work row by row.
class Configuration {
public:
    /// General configuration; throws InvalidConfiguration on a negative entry,
    /// a zero column, or a grading with h·a_j <= 0 for some column.
    Configuration(IntMat matrix, IntVec grading);

    static Configuration make_lawrence(const Configuration& base, std::size_t r, IntMat matrix,
                                       IntVec grading);

    const IntMat& matrix() const noexcept { return matrix_; }
    const IntVec& grading() const noexcept { return grading_; }
    ConfigKind kind() const noexcept { return kind_; }

    std::size_t rows() const noexcept { return matrix_.rows(); }
    std::size_t cols() const noexcept { return matrix_.cols(); }

    /// h·a_j for each column j; all strictly positive.
    const IntVec& column_degrees() const noexcept { return column_degrees_; }

    /// Base configuration and r for a Lawrence lifting, null / 0 otherwise.
    const Configuration* lawrence_base() const noexcept { return base_.get(); }
    std::size_t lawrence_r() const noexcept { return r_; }

    /// Curve entries (the single row); throws for non-curves.
    std::vector<Int> curve_entries() const;

    /// Stable textual identifier of the matrix (kind, shape, entries).
    std::string digest() const;

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.matrix_ == b.matrix_ && a.kind_ == b.kind_;
    }

private:
    IntMat matrix_;
    IntVec grading_;
    IntVec column_degrees_;
    ConfigKind kind_ = ConfigKind::general;
    std::shared_ptr<const Configuration> base_;
    std::size_t r_ = 0;

    friend Configuration make_curve(std::span<const Int> entries);
};

/// 1×n configuration with grading (1).
Configuration make_curve(std::span<const Int> entries);
inline Configuration make_curve(std::initializer_list<Int> entries) {
    return make_curve(std::span<const Int>(entries.begin(), entries.size()));
}

struct LatticeBasis {
    std::vector<Move> vectors;
    std::size_t rank = 0;
};

/// Integer basis of ker_Z(A) from unimodular column reduction to Hermite form.
/// The result is saturated; vectors are sign-canonical.
LatticeBasis kernel_basis(const Configuration& config);

/// A·x.
IntVec multidegree(const Configuration& config, const IntVec& x);

/// True iff A·u = 0.
bool in_lattice(const Configuration& config, const IntVec& u);

/// Grading degree h·(A·x) of a nonnegative vector.
Int graded_degree(const Configuration& config, const IntVec& x);

/// Rank over Q of an integer matrix.
std::size_t matrix_rank(const IntMat& m);

/// Nonzero elementary divisors (Smith normal form diagonal) in increasing order.
std::vector<Int> elementary_divisors(const IntMat& m);

/// Matrix whose rows are the given vectors.
IntMat rows_matrix(const std::vector<Move>& vectors, std::size_t cols);

} // namespace toric
