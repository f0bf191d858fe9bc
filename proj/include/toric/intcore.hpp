#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

using Int = std::int64_t;

// Overflow-checked scalar arithmetic. Every library routine that can grow an
// entry goes through these; a wrap is reported as OverflowError.
inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

/// Dense integer vector. Used for lattice moves, fiber points and degrees.
class IntVec {
public:
    IntVec() = default;
    explicit IntVec(std::size_t n, Int fill = 0) : e_(n, fill) {}
    IntVec(std::initializer_list<Int> init) : e_(init) {}
    explicit IntVec(std::vector<Int> entries) : e_(std::move(entries)) {}
    explicit IntVec(std::span<const Int> entries) : e_(entries.begin(), entries.end()) {}

    std::size_t size() const noexcept { return e_.size(); }
    bool empty() const noexcept { return e_.empty(); }

    Int& operator[](std::size_t i) { return e_[i]; }
    Int operator[](std::size_t i) const { return e_[i]; }

    auto begin() noexcept { return e_.begin(); }
    auto end() noexcept { return e_.end(); }
    auto begin() const noexcept { return e_.begin(); }
    auto end() const noexcept { return e_.end(); }

    Int* data() noexcept { return e_.data(); }
    const Int* data() const noexcept { return e_.data(); }
    std::span<const Int> span() const noexcept { return e_; }
    const std::vector<Int>& entries() const noexcept { return e_; }

    bool is_zero() const noexcept;
    bool is_nonnegative() const noexcept;

    /// Sum of absolute values.
    Int l1_norm() const;

    friend bool operator==(const IntVec&, const IntVec&) = default;
    /// Lexicographic order on entries.
    friend std::strong_ordering operator<=>(const IntVec& a, const IntVec& b) {
        return a.e_ <=> b.e_;
    }

private:
    std::vector<Int> e_;
};

/// A lattice element. Stored sign-canonical wherever a basis is reported.
using Move = IntVec;

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec scaled(const IntVec& a, Int k);
Int dot(std::span<const Int> a, std::span<const Int> b);

std::ostream& operator<<(std::ostream& os, const IntVec& v);
std::string to_string(const IntVec& v);

struct SignSplit {
    IntVec plus;
    IntVec minus;
};

/// u = plus - minus with plus, minus >= 0 and disjoint supports.
SignSplit sign_split(const IntVec& u);

/// Conformal order: v ⊑ u iff v⁺ <= u⁺ and v⁻ <= u⁻ componentwise.
bool conformal_leq(const IntVec& v, const IntVec& u);

/// Returns u or -u, whichever has a positive first nonzero entry.
IntVec canonicalize_sign(const IntVec& u);
bool is_sign_canonical(const IntVec& u) noexcept;

/// Componentwise a <= b.
bool leq(const IntVec& a, const IntVec& b);

/// Row-major dense integer matrix.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols, Int fill = 0)
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}
    IntMat(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMat from_rows(const std::vector<IntVec>& rows, std::size_t cols);
    static IntMat from_rows(std::initializer_list<std::initializer_list<Int>> rows);
    static IntMat identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    Int operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::span<const Int> row(std::size_t i) const {
        return std::span<const Int>(e_).subspan(i * cols_, cols_);
    }
    std::span<Int> row(std::size_t i) { return std::span<Int>(e_).subspan(i * cols_, cols_); }
    IntVec row_vec(std::size_t i) const { return IntVec(row(i)); }
    IntVec col_vec(std::size_t j) const;

    const std::vector<Int>& entries() const noexcept { return e_; }
    IntVec flatten() const { return IntVec(e_); }

    IntMat transposed() const;
    IntVec operator*(const IntVec& x) const;

    friend bool operator==(const IntMat&, const IntMat&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> e_;
};

std::ostream& operator<<(std::ostream& os, const IntMat& m);

struct IntVecHash {
    std::size_t operator()(const IntVec& v) const noexcept;
};

} // namespace toric
