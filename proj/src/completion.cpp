#include "toric/completion.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <queue>

namespace toric {

namespace {

constexpr std::uint32_t kAlive = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint32_t kGenerator = std::numeric_limits<std::uint32_t>::max();

struct Pending {
    Int degree;
    std::uint32_t i; // generator index when j == kGenerator
    std::uint32_t j;
};

struct PendingAfter {
    bool operator()(const Pending& a, const Pending& b) const {
        if (a.degree != b.degree) return a.degree > b.degree;
        if (a.j != b.j) return a.j > b.j;
        return a.i > b.i;
    }
};

class Completion {
public:
    Completion(const BinomialOrder& order, std::size_t dim, const CompletionLimits& limits)
        : vars_(order.variables), weights_(order.weights), n_(dim), k_(vars_.size()),
          words_((k_ + 63) / 64), limits_(limits), start_(std::chrono::steady_clock::now()) {
        if (weights_.size() != k_) throw DimensionError("completion: one weight per variable");
        for (std::size_t c : vars_)
            if (c >= n_) throw DimensionError("completion: variable index out of range");
        for (Int w : weights_)
            if (w <= 0) throw DimensionError("completion: weights must be positive");
        lead_buf_.resize(k_);
        mask_buf_.resize(words_);
        union_buf_.resize(words_);
    }

    std::vector<IntVec> run(const std::vector<IntVec>& generators, CompletionStats* stats) {
        for (std::uint32_t g = 0; g < generators.size(); ++g) {
            if (generators[g].size() != n_) throw DimensionError("completion: generator length");
            std::vector<Int> v(generators[g].begin(), generators[g].end());
            if (!orient(v)) continue;
            queue_.push({lead_degree(), g, kGenerator});
        }
        std::size_t tick = 0;
        std::vector<Int> s(n_);
        while (!queue_.empty()) {
            const Pending p = queue_.top();
            queue_.pop();
            if ((++tick & 255) == 0) check_clock();
            if (p.j == kGenerator) {
                s.assign(generators[p.i].begin(), generators[p.i].end());
            } else {
                if (chain_redundant(p.i, p.j)) {
                    ++stats_.pairs_skipped_chain;
                    continue;
                }
                ++stats_.pairs_reduced;
                const Int* f = full(p.i);
                const Int* g = full(p.j);
                for (std::size_t c = 0; c < n_; ++c) s[c] = checked_sub(f[c], g[c]);
            }
            if (reduce(s)) insert(s);
        }
        std::vector<IntVec> out;
        out.reserve(alive_.size());
        for (std::uint32_t e : alive_) out.emplace_back(std::vector<Int>(full(e), full(e) + n_));
        std::sort(out.begin(), out.end());
        stats_.final_size = out.size();
        if (stats) *stats = stats_;
        return out;
    }

private:
    const Int* full(std::uint32_t e) const { return full_.data() + std::size_t{e} * n_; }
    const Int* lead(std::uint32_t e) const { return lead_.data() + std::size_t{e} * k_; }
    const std::uint64_t* mask(std::uint32_t e) const { return mask_.data() + std::size_t{e} * words_; }

    Int lead_degree() const {
        Int d = 0;
        for (std::size_t p = 0; p < k_; ++p)
            if (lead_buf_[p] != 0) d = checked_add(d, checked_mul(weights_[p], lead_buf_[p]));
        return d;
    }

    // Negates v if needed so that its positive part is the leading term and
    // fills lead_buf_/mask_buf_. Returns false when v vanishes on the variables.
    bool orient(std::vector<Int>& v) {
        std::size_t last = k_;
        for (std::size_t p = k_; p-- > 0;)
            if (v[vars_[p]] != 0) {
                last = p;
                break;
            }
        if (last == k_) return false;
        if (v[vars_[last]] > 0)
            for (Int& x : v) x = checked_sub(0, x);
        std::fill(mask_buf_.begin(), mask_buf_.end(), 0);
        for (std::size_t p = 0; p < k_; ++p) {
            const Int x = v[vars_[p]];
            lead_buf_[p] = x > 0 ? x : 0;
            if (x > 0) mask_buf_[p / 64] |= std::uint64_t{1} << (p % 64);
        }
        return true;
    }

    bool divides_buf(std::uint32_t e) const {
        const std::uint64_t* m = mask(e);
        for (std::size_t w = 0; w < words_; ++w)
            if (m[w] & ~mask_buf_[w]) return false;
        const Int* l = lead(e);
        for (std::size_t p = 0; p < k_; ++p)
            if (l[p] > lead_buf_[p]) return false;
        return true;
    }

    // Top-reduces s; returns true when a nonzero remainder is left (oriented,
    // with lead_buf_/mask_buf_ describing it).
    bool reduce(std::vector<Int>& s) {
        for (;;) {
            if (!orient(s)) return false;
            std::uint32_t found = kAlive;
            for (std::uint32_t e : alive_)
                if (divides_buf(e)) {
                    found = e;
                    break;
                }
            if (found == kAlive) return true;
            const Int* g = full(found);
            for (std::size_t c = 0; c < n_; ++c) s[c] = checked_sub(s[c], g[c]);
        }
    }

    void insert(const std::vector<Int>& s) {
        const auto id = static_cast<std::uint32_t>(death_.size());
        if (alive_.size() + 1 > limits_.max_elements)
            throw BudgetExceeded("binomial completion exceeded " +
                                 std::to_string(limits_.max_elements) + " elements");
        full_.insert(full_.end(), s.begin(), s.end());
        lead_.insert(lead_.end(), lead_buf_.begin(), lead_buf_.end());
        mask_.insert(mask_.end(), mask_buf_.begin(), mask_buf_.end());
        death_.push_back(kAlive);
        ++stats_.elements_added;

        const Int* h = lead(id);
        std::vector<std::uint32_t> still;
        still.reserve(alive_.size() + 1);
        for (std::uint32_t e : alive_) {
            const Int* g = lead(e);
            bool coprime = true;
            for (std::size_t w = 0; w < words_ && coprime; ++w)
                coprime = (mask(e)[w] & mask_buf_[w]) == 0;
            if (!coprime) {
                Int d = 0;
                for (std::size_t p = 0; p < k_; ++p)
                    d = checked_add(d, checked_mul(weights_[p], std::max(h[p], g[p])));
                queue_.push({d, e, id});
                ++stats_.pairs_created;
            }
            if (divides_lead(id, e))
                death_[e] = id;
            else
                still.push_back(e);
        }
        still.push_back(id);
        alive_.swap(still);
    }

    // lead(a) divides lead(b)
    bool divides_lead(std::uint32_t a, std::uint32_t b) const {
        const std::uint64_t* ma = mask(a);
        const std::uint64_t* mb = mask(b);
        for (std::size_t w = 0; w < words_; ++w)
            if (ma[w] & ~mb[w]) return false;
        const Int* la = lead(a);
        const Int* lb = lead(b);
        for (std::size_t p = 0; p < k_; ++p)
            if (la[p] > lb[p]) return false;
        return true;
    }

    // whether the pair of elements a, b was ever queued or dropped as coprime
    bool paired(std::uint32_t a, std::uint32_t b) const {
        if (a > b) std::swap(a, b);
        return death_[a] >= b;
    }

    // Chain criterion with strictly smaller lcms on both sides.
    bool chain_redundant(std::uint32_t i, std::uint32_t j) const {
        const Int* li = lead(i);
        const Int* lj = lead(j);
        for (std::size_t w = 0; w < words_; ++w) union_buf_[w] = mask(i)[w] | mask(j)[w];
        for (std::uint32_t e : alive_) {
            if (e == i || e == j) continue;
            const std::uint64_t* me = mask(e);
            bool inside = true;
            for (std::size_t w = 0; w < words_ && inside; ++w)
                inside = (me[w] & ~union_buf_[w]) == 0;
            if (!inside) continue;
            const Int* le = lead(e);
            bool divides = true;
            bool below_left = false;  // lcm(i, e) strictly divides lcm(i, j)
            bool below_right = false; // lcm(e, j) strictly divides lcm(i, j)
            for (std::size_t p = 0; p < k_ && divides; ++p) {
                const Int top = std::max(li[p], lj[p]);
                if (le[p] > top) divides = false;
                if (lj[p] > std::max(li[p], le[p])) below_left = true;
                if (li[p] > std::max(lj[p], le[p])) below_right = true;
            }
            if (divides && below_left && below_right && paired(i, e) && paired(e, j)) return true;
        }
        return false;
    }

    void check_clock() const {
        if (limits_.max_seconds <= 0) return;
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
        if (elapsed.count() > limits_.max_seconds)
            throw BudgetExceeded("binomial completion exceeded its time budget");
    }

    std::vector<std::size_t> vars_;
    std::vector<Int> weights_;
    std::size_t n_;
    std::size_t k_;
    std::size_t words_;
    CompletionLimits limits_;
    std::chrono::steady_clock::time_point start_;

    std::vector<Int> full_;
    std::vector<Int> lead_;
    std::vector<std::uint64_t> mask_;
    std::vector<std::uint32_t> death_;
    std::vector<std::uint32_t> alive_;
    std::priority_queue<Pending, std::vector<Pending>, PendingAfter> queue_;

    std::vector<Int> lead_buf_;
    std::vector<std::uint64_t> mask_buf_;
    mutable std::vector<std::uint64_t> union_buf_;
    CompletionStats stats_;
};

} // namespace

std::vector<IntVec> complete_binomials(const std::vector<IntVec>& generators,
                                       const BinomialOrder& order,
                                       const CompletionLimits& limits, CompletionStats* stats) {
    if (generators.empty()) return {};
    Completion c(order, generators.front().size(), limits);
    return c.run(generators, stats);
}

} // namespace toric
