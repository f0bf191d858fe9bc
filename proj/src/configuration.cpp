#include "toric/configuration.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace toric {

namespace {

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int abs_checked(Int x) { return x < 0 ? checked_sub(0, x) : x; }

void swap_cols(IntMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_col(IntMat& m, std::size_t c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = checked_sub(0, m(i, c));
}

// col[dst] -= q * col[src]
void axpy_col(IntMat& m, std::size_t dst, std::size_t src, Int q) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, dst) = checked_sub(m(i, dst), checked_mul(q, m(i, src)));
}

// Unimodular column reduction of m to lower Hermite shape. Pivot choice is
// the leftmost column of smallest nonzero absolute value, made positive.
// The same column operations are applied to u when given. Returns the rank.
std::size_t column_hermite(IntMat& m, IntMat* u) {
    const std::size_t n = m.cols();
    std::size_t p = 0;
    for (std::size_t i = 0; i < m.rows() && p < n; ++i) {
        bool have_pivot = false;
        for (;;) {
            std::size_t best = n;
            for (std::size_t j = p; j < n; ++j) {
                if (m(i, j) == 0) continue;
                if (best == n || abs_checked(m(i, j)) < abs_checked(m(i, best))) best = j;
            }
            if (best == n) break;
            have_pivot = true;
            swap_cols(m, p, best);
            if (u) swap_cols(*u, p, best);
            if (m(i, p) < 0) {
                negate_col(m, p);
                if (u) negate_col(*u, p);
            }
            bool clean = true;
            for (std::size_t j = p + 1; j < n; ++j) {
                if (m(i, j) == 0) continue;
                const Int q = floor_div(m(i, j), m(i, p));
                axpy_col(m, j, p, q);
                if (u) axpy_col(*u, j, p, q);
                if (m(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (have_pivot) ++p;
    }
    return p;
}

Int norm2(const IntVec& v) { return dot(v.span(), v.span()); }

// Pairwise size reduction; keeps the lattice, shortens the generators.
void size_reduce(std::vector<IntVec>& basis) {
    bool changed = true;
    for (int sweep = 0; changed && sweep < 200; ++sweep) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                const Int bj = norm2(basis[j]);
                if (bj == 0) continue;
                const Int ip = dot(basis[i].span(), basis[j].span());
                // nearest integer to ip / bj
                Int k = floor_div(checked_add(checked_mul(2, ip), bj), checked_mul(2, bj));
                if (k == 0) continue;
                IntVec cand = basis[i] - scaled(basis[j], k);
                if (norm2(cand) < norm2(basis[i])) {
                    basis[i] = std::move(cand);
                    changed = true;
                }
            }
        }
    }
}

} // namespace

std::string to_string(ConfigKind kind) {
    switch (kind) {
    case ConfigKind::curve: return "curve";
    case ConfigKind::lawrence: return "lawrence";
    case ConfigKind::general: return "general";
    }
    return "unknown";
}

Configuration::Configuration(IntMat matrix, IntVec grading)
    : matrix_(std::move(matrix)), grading_(std::move(grading)) {
    if (grading_.size() != matrix_.rows())
        throw InvalidConfiguration("grading has length " + std::to_string(grading_.size()) +
                                   ", matrix has " + std::to_string(matrix_.rows()) + " rows");
    if (matrix_.cols() == 0) throw InvalidConfiguration("configuration has no columns");
    for (Int x : matrix_.entries())
        if (x < 0) throw InvalidConfiguration("configuration has a negative entry");
    column_degrees_ = IntVec(matrix_.cols());
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
        bool zero = true;
        Int d = 0;
        for (std::size_t i = 0; i < matrix_.rows(); ++i) {
            if (matrix_(i, j) != 0) zero = false;
            d = checked_add(d, checked_mul(grading_[i], matrix_(i, j)));
        }
        if (zero) throw InvalidConfiguration("column " + std::to_string(j + 1) + " is zero");
        if (d <= 0)
            throw InvalidConfiguration("grading certificate fails on column " +
                                       std::to_string(j + 1));
        column_degrees_[j] = d;
    }
}

Configuration Configuration::make_lawrence(const Configuration& base, std::size_t r,
                                           IntMat matrix, IntVec grading) {
    Configuration c(std::move(matrix), std::move(grading));
    c.kind_ = ConfigKind::lawrence;
    c.base_ = std::make_shared<const Configuration>(base);
    c.r_ = r;
    return c;
}

Configuration make_curve(std::span<const Int> entries) {
    if (entries.empty()) throw InvalidConfiguration("curve needs at least one entry");
    for (Int a : entries)
        if (a < 1) throw InvalidConfiguration("curve entries must be positive, got " +
                                              std::to_string(a));
    Configuration c(IntMat(1, entries.size(), std::vector<Int>(entries.begin(), entries.end())),
                    IntVec{1});
    c.kind_ = ConfigKind::curve;
    return c;
}

std::vector<Int> Configuration::curve_entries() const {
    if (kind_ != ConfigKind::curve) throw InvalidConfiguration("not a monomial curve");
    return matrix_.entries();
}

std::string Configuration::digest() const {
    std::ostringstream os;
    os << to_string(kind_) << ':' << rows() << 'x' << cols() << ':';
    for (std::size_t k = 0; k < matrix_.entries().size(); ++k)
        os << (k ? "," : "") << matrix_.entries()[k];
    return os.str();
}

LatticeBasis kernel_basis(const Configuration& config) {
    const std::size_t n = config.cols();
    IntMat m = config.matrix();
    IntMat u = IntMat::identity(n);
    const std::size_t rank = column_hermite(m, &u);
    std::vector<IntVec> basis;
    for (std::size_t j = rank; j < n; ++j) basis.push_back(u.col_vec(j));
    size_reduce(basis);
    for (auto& b : basis) b = canonicalize_sign(b);
    return LatticeBasis{std::move(basis), n - rank};
}

IntVec multidegree(const Configuration& config, const IntVec& x) {
    return config.matrix() * x;
}

bool in_lattice(const Configuration& config, const IntVec& u) {
    return multidegree(config, u).is_zero();
}

Int graded_degree(const Configuration& config, const IntVec& x) {
    return dot(config.column_degrees().span(), x.span());
}

std::size_t matrix_rank(const IntMat& m) {
    IntMat copy = m;
    return column_hermite(copy, nullptr);
}

std::vector<Int> elementary_divisors(const IntMat& input) {
    IntMat m = input;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<Int> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry in the trailing block becomes the pivot
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m(i, j) != 0 && (pi == rows || abs_checked(m(i, j)) < abs_checked(m(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m(t, j), m(pi, j));
        swap_cols(m, t, pj);
        bool done = false;
        while (!done) {
            done = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0) continue;
                const Int q = floor_div(m(i, t), m(t, t));
                for (std::size_t j = t; j < cols; ++j)
                    m(i, j) = checked_sub(m(i, j), checked_mul(q, m(t, j)));
                if (m(i, t) != 0) {
                    done = false;
                    for (std::size_t j = 0; j < cols; ++j) std::swap(m(t, j), m(i, j));
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0) continue;
                const Int q = floor_div(m(t, j), m(t, t));
                axpy_col(m, j, t, q);
                if (m(t, j) != 0) {
                    done = false;
                    swap_cols(m, t, j);
                }
            }
            if (done) {
                // pivot must divide the whole trailing block
                for (std::size_t i = t + 1; i < rows && done; ++i)
                    for (std::size_t j = t + 1; j < cols; ++j)
                        if (m(i, j) % m(t, t) != 0) {
                            for (std::size_t k = t; k < cols; ++k)
                                m(t, k) = checked_add(m(t, k), m(i, k));
                            done = false;
                            break;
                        }
            }
        }
        diag.push_back(abs_checked(m(t, t)));
        ++t;
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

IntMat rows_matrix(const std::vector<Move>& vectors, std::size_t cols) {
    return IntMat::from_rows(vectors, cols);
}

} // namespace toric
