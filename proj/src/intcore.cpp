#include "toric/intcore.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace toric {

namespace {

void require_same_size(const IntVec& a, const IntVec& b, const char* what) {
    if (a.size() != b.size())
        throw DimensionError(std::string(what) + ": dimension mismatch (" +
                             std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}

} // namespace

bool IntVec::is_zero() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](Int x) { return x == 0; });
}

bool IntVec::is_nonnegative() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](Int x) { return x >= 0; });
}

Int IntVec::l1_norm() const {
    Int s = 0;
    for (Int x : e_) s = checked_add(s, x < 0 ? checked_sub(0, x) : x);
    return s;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
    require_same_size(a, b, "operator+");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
    require_same_size(a, b, "operator-");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

IntVec operator-(const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(0, a[i]);
    return r;
}

IntVec scaled(const IntVec& a, Int k) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], k);
    return r;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
    if (a.size() != b.size()) throw DimensionError("dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

std::ostream& operator<<(std::ostream& os, const IntVec& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os << ')';
}

std::string to_string(const IntVec& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

SignSplit sign_split(const IntVec& u) {
    SignSplit s{IntVec(u.size()), IntVec(u.size())};
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > 0)
            s.plus[i] = u[i];
        else if (u[i] < 0)
            s.minus[i] = checked_sub(0, u[i]);
    }
    return s;
}

bool conformal_leq(const IntVec& v, const IntVec& u) {
    require_same_size(v, u, "conformal_leq");
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Int a = v[i];
        const Int b = u[i];
        if (a == 0) continue;
        if (a > 0 ? (b < a) : (b > a)) return false;
    }
    return true;
}

IntVec canonicalize_sign(const IntVec& u) {
    for (Int x : u) {
        if (x > 0) return u;
        if (x < 0) return -u;
    }
    return u;
}

bool is_sign_canonical(const IntVec& u) noexcept {
    for (Int x : u) {
        if (x != 0) return x > 0;
    }
    return true;
}

bool leq(const IntVec& a, const IntVec& b) {
    require_same_size(a, b, "leq");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

IntMat::IntMat(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw DimensionError("IntMat: entry count " + std::to_string(e_.size()) +
                             " does not match shape " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("IntMat::from_rows: ragged rows");
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

IntMat IntMat::from_rows(std::initializer_list<std::initializer_list<Int>> rows) {
    std::vector<IntVec> v;
    for (auto r : rows) v.emplace_back(r);
    return from_rows(v, v.empty() ? 0 : v.front().size());
}

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntVec IntMat::col_vec(std::size_t j) const {
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

IntMat IntMat::transposed() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntVec IntMat::operator*(const IntVec& x) const {
    if (x.size() != cols_)
        throw DimensionError("IntMat*IntVec: expected length " + std::to_string(cols_) + ", got " +
                             std::to_string(x.size()));
    IntVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r[i] = dot(row(i), x.span());
    return r;
}

std::ostream& operator<<(std::ostream& os, const IntMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
        os << '\n';
    }
    return os;
}

std::size_t IntVecHash::operator()(const IntVec& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Int x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace toric
