#include "toric/fibers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace toric {

namespace {

constexpr Int kUnbounded = std::numeric_limits<Int>::max();

class FiberWalker {
public:
    FiberWalker(const Configuration& config, const IntVec& degree, std::size_t cap,
                const std::optional<IntVec>& box)
        : a_(config.matrix()), m_(a_.rows()), n_(a_.cols()), cap_(cap), box_(box),
          residual_(degree), point_(n_) {
        // rows that still have support among columns j..n-1
        suffix_support_.assign((n_ + 1) * m_, false);
        for (std::size_t j = n_; j-- > 0;)
            for (std::size_t i = 0; i < m_; ++i)
                suffix_support_[j * m_ + i] = suffix_support_[(j + 1) * m_ + i] || a_(i, j) != 0;
        if (m_ == 1) {
            suffix_gcd_.assign(n_ + 1, 0);
            for (std::size_t j = n_; j-- > 0;) suffix_gcd_[j] = std::gcd(suffix_gcd_[j + 1], a_(0, j));
        }
    }

    Fiber run(const IntVec& degree) {
        Fiber f;
        f.degree = degree;
        if (std::any_of(degree.begin(), degree.end(), [](Int x) { return x < 0; })) return f;
        if (!feasible_from(0)) return f;
        visit(0, f);
        return f;
    }

private:
    bool feasible_from(std::size_t j) const {
        for (std::size_t i = 0; i < m_; ++i)
            if (residual_[i] != 0 && !suffix_support_[j * m_ + i]) return false;
        if (m_ == 1 && j < n_ && suffix_gcd_[j] != 0 && residual_[0] % suffix_gcd_[j] != 0)
            return false;
        return true;
    }

    bool emit(Fiber& f) {
        if (f.points.size() == cap_) {
            f.truncated = true;
            return false;
        }
        f.points.push_back(point_);
        return true;
    }

    // returns false once the cap stops the walk
    bool visit(std::size_t j, Fiber& f) {
        if (j == n_) return residual_.is_zero() ? emit(f) : true;
        Int ub = box_ ? (*box_)[j] : kUnbounded;
        for (std::size_t i = 0; i < m_; ++i)
            if (a_(i, j) != 0) ub = std::min(ub, residual_[i] / a_(i, j));
        if (ub < 0) return true;
        if (j + 1 == n_) {
            // last coordinate is forced
            Int x = -1;
            for (std::size_t i = 0; i < m_; ++i) {
                if (a_(i, j) == 0) {
                    if (residual_[i] != 0) return true;
                    continue;
                }
                if (residual_[i] % a_(i, j) != 0) return true;
                const Int q = residual_[i] / a_(i, j);
                if (x >= 0 && q != x) return true;
                x = q;
            }
            if (x < 0 || x > ub) return true;
            point_[j] = x;
            const bool go = emit(f);
            point_[j] = 0;
            return go;
        }
        for (Int x = 0; x <= ub; ++x) {
            point_[j] = x;
            if (x > 0)
                for (std::size_t i = 0; i < m_; ++i) residual_[i] -= a_(i, j);
            if (feasible_from(j + 1) && !visit(j + 1, f)) {
                restore(j, x);
                return false;
            }
        }
        restore(j, ub);
        return true;
    }

    void restore(std::size_t j, Int x) {
        for (std::size_t i = 0; i < m_; ++i) residual_[i] += checked_mul(x, a_(i, j));
        point_[j] = 0;
    }

    const IntMat& a_;
    std::size_t m_;
    std::size_t n_;
    std::size_t cap_;
    const std::optional<IntVec>& box_;
    IntVec residual_;
    IntVec point_;
    std::vector<bool> suffix_support_;
    std::vector<Int> suffix_gcd_;
};

// Row-by-row enumeration of a Lawrence fiber.
class LawrenceWalker {
public:
    LawrenceWalker(const Configuration& base, std::size_t r, const IntVec& row_degrees,
                   const IntVec& column_totals, std::size_t cap)
        : base_(base), r_(r), m_(base.rows()), n_(base.cols()), cap_(cap),
          row_degrees_(row_degrees), budget_(column_totals), point_(r * base.cols()) {
        // suffix sums of row degrees: A·(remaining budget) must match them
        suffix_.assign(r_ + 1, IntVec(m_));
        for (std::size_t i = r_; i-- > 0;)
            for (std::size_t k = 0; k < m_; ++k)
                suffix_[i][k] = checked_add(suffix_[i + 1][k], row_degrees_[i * m_ + k]);
        row_fibers_.resize(r_);
        for (std::size_t i = 0; i + 1 < r_; ++i) {
            IntVec d(std::span<const Int>(row_degrees_.data() + i * m_, m_));
            Fiber rf = enumerate_fiber(base_, d, kDefaultFiberCap, std::nullopt);
            if (rf.truncated) throw TruncatedFiber("row fiber of a Lawrence fiber is truncated");
            row_fibers_[i] = std::move(rf.points);
        }
    }

    Fiber run(IntVec degree) {
        Fiber f;
        f.degree = std::move(degree);
        for (Int x : row_degrees_)
            if (x < 0) return f;
        for (Int x : budget_.entries())
            if (x < 0) return f;
        visit(0, f);
        return f;
    }

private:
    bool consistent(std::size_t row) const {
        for (std::size_t k = 0; k < m_; ++k) {
            Int s = 0;
            for (std::size_t j = 0; j < n_; ++j) s += base_.matrix()(k, j) * budget_[j];
            if (s != suffix_[row][k]) return false;
        }
        return true;
    }

    bool visit(std::size_t row, Fiber& f) {
        if (!consistent(row)) return true;
        if (row + 1 == r_) {
            // last row takes the whole remaining budget; consistency already
            // forced its degree
            std::copy(budget_.begin(), budget_.end(), point_.begin() + row * n_);
            if (f.points.size() == cap_) {
                f.truncated = true;
                return false;
            }
            f.points.push_back(point_);
            return true;
        }
        for (const auto& t : row_fibers_[row]) {
            bool fits = true;
            for (std::size_t j = 0; j < n_; ++j)
                if (t[j] > budget_[j]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                budget_[j] -= t[j];
                point_[row * n_ + j] = t[j];
            }
            const bool go = visit(row + 1, f);
            for (std::size_t j = 0; j < n_; ++j) budget_[j] += t[j];
            if (!go) return false;
        }
        return true;
    }

    const Configuration& base_;
    std::size_t r_;
    std::size_t m_;
    std::size_t n_;
    std::size_t cap_;
    IntVec row_degrees_;
    IntVec budget_;
    IntVec point_;
    std::vector<IntVec> suffix_;
    std::vector<std::vector<FiberPoint>> row_fibers_;
};

} // namespace

bool Fiber::contains(const FiberPoint& t) const {
    return std::binary_search(points.begin(), points.end(), t);
}

Fiber lawrence_fiber_at(const Configuration& base, std::size_t r, const IntVec& row_degrees,
                        const IntVec& column_totals, std::size_t cap) {
    if (r == 0) throw DimensionError("Lawrence fiber needs r >= 1");
    if (row_degrees.size() != r * base.rows() || column_totals.size() != base.cols())
        throw DimensionError("Lawrence fiber: degree shape mismatch");
    IntVec degree(r * base.rows() + base.cols());
    std::copy(row_degrees.begin(), row_degrees.end(), degree.begin());
    std::copy(column_totals.begin(), column_totals.end(), degree.begin() + row_degrees.size());
    LawrenceWalker walker(base, r, row_degrees, column_totals, cap);
    return walker.run(std::move(degree));
}

Fiber enumerate_fiber(const Configuration& config, const IntVec& degree, std::size_t cap,
                      const std::optional<IntVec>& box) {
    if (cap == 0) throw DimensionError("fiber cap must be positive");
    if (degree.size() != config.rows())
        throw DimensionError("fiber degree has length " + std::to_string(degree.size()) +
                             ", expected " + std::to_string(config.rows()));
    if (box && box->size() != config.cols()) throw DimensionError("fiber box has wrong length");
    if (config.kind() == ConfigKind::lawrence && !box) {
        const Configuration& base = *config.lawrence_base();
        const std::size_t r = config.lawrence_r();
        const std::size_t split = r * base.rows();
        IntVec rows(std::span<const Int>(degree.data(), split));
        IntVec cols(std::span<const Int>(degree.data() + split, base.cols()));
        Fiber f = lawrence_fiber_at(base, r, rows, cols, cap);
        f.degree = degree;
        return f;
    }
    FiberWalker walker(config, degree, cap, box);
    return walker.run(degree);
}

Fiber fiber_of(const Configuration& config, const Move& u, std::size_t cap) {
    if (u.size() != config.cols()) throw DimensionError("fiber_of: move has wrong length");
    const auto split = sign_split(u);
    return enumerate_fiber(config, multidegree(config, split.plus), cap);
}

Fiber enumerate_lawrence_fiber(const Configuration& base, std::size_t r, const IntMat& target,
                               std::size_t cap) {
    if (target.rows() != r || target.cols() != base.cols())
        throw DimensionError("Lawrence target must be r x n");
    for (Int x : target.entries())
        if (x < 0) throw DimensionError("Lawrence target must be nonnegative");
    IntVec rows(r * base.rows());
    IntVec cols(base.cols());
    for (std::size_t i = 0; i < r; ++i) {
        const IntVec d = base.matrix() * target.row_vec(i);
        std::copy(d.begin(), d.end(), rows.begin() + i * base.rows());
        for (std::size_t j = 0; j < base.cols(); ++j) cols[j] = checked_add(cols[j], target(i, j));
    }
    return lawrence_fiber_at(base, r, rows, cols, cap);
}

std::vector<ScDecomposition> sc_decompositions(const Configuration& config, const Move& u,
                                               std::size_t cap) {
    const Fiber f = fiber_of(config, u, cap);
    if (f.truncated) throw TruncatedFiber("fiber of " + to_string(u) + " exceeds the cap");
    const auto split = sign_split(u);
    std::vector<ScDecomposition> out;
    out.reserve(f.size());
    for (const auto& t : f.points) out.push_back({split.plus - t, t - split.minus, t});
    return out;
}

bool is_semiconformal(const IntVec& u, const IntVec& v, const IntVec& w) {
    if (u.size() != v.size() || u.size() != w.size())
        throw DimensionError("is_semiconformal: dimension mismatch");
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (checked_add(v[i], w[i]) != u[i]) return false;
        if (v[i] > 0 && w[i] < 0) return false;
    }
    return true;
}

} // namespace toric
