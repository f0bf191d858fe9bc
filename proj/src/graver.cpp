#include "toric/graver.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <tuple>

namespace toric {

namespace {

bool sign_compatible(const IntVec& f, const IntVec& g) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if ((f[i] > 0 && g[i] < 0) || (f[i] < 0 && g[i] > 0)) return false;
    return true;
}

// index of an element h with h ⊑ s or −h ⊑ s (sign returned in `sign`)
std::ptrdiff_t find_reducer(const IntVec& s, std::span<const Move> G, int& sign) {
    for (std::size_t k = 0; k < G.size(); ++k) {
        const IntVec& g = G[k];
        bool plus = true;
        bool minus = true;
        for (std::size_t i = 0; i < s.size() && (plus || minus); ++i) {
            const Int a = g[i];
            const Int b = s[i];
            if (a == 0) continue;
            if (a > 0) {
                plus = plus && b >= a;
                minus = minus && b <= -a;
            } else {
                plus = plus && b <= a;
                minus = minus && b >= -a;
            }
        }
        if (plus) {
            sign = 1;
            return static_cast<std::ptrdiff_t>(k);
        }
        if (minus) {
            sign = -1;
            return static_cast<std::ptrdiff_t>(k);
        }
    }
    return -1;
}

std::vector<Move> minimal_elements(std::vector<Move> cands) {
    for (auto& c : cands) c = canonicalize_sign(c);
    std::sort(cands.begin(), cands.end(), [](const Move& a, const Move& b) {
        const Int na = a.l1_norm();
        const Int nb = b.l1_norm();
        return na != nb ? na < nb : a < b;
    });
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<Move> kept;
    for (const auto& c : cands) {
        if (c.is_zero()) continue;
        int sign = 0;
        if (find_reducer(c, kept, sign) < 0) kept.push_back(c);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<Move> seed_generators(const Configuration& config) {
    if (config.kind() != ConfigKind::lawrence) return kernel_basis(config).vectors;
    const Configuration& base = *config.lawrence_base();
    const std::size_t r = config.lawrence_r();
    const std::size_t n = base.cols();
    std::vector<Move> seeds;
    for (const auto& b : kernel_basis(base).vectors)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j) {
                IntVec v(r * n);
                for (std::size_t k = 0; k < n; ++k) {
                    v[i * n + k] = b[k];
                    v[j * n + k] = checked_sub(0, b[k]);
                }
                seeds.push_back(std::move(v));
            }
    return seeds;
}

} // namespace

IntVec normal_form(const IntVec& s, std::span<const Move> G) {
    for (const auto& g : G)
        if (g.size() != s.size()) throw DimensionError("normal_form: dimension mismatch");
    IntVec r = s;
    for (;;) {
        if (r.is_zero()) return r;
        int sign = 0;
        const auto k = find_reducer(r, G, sign);
        if (k < 0) return r;
        r = sign > 0 ? r - G[static_cast<std::size_t>(k)] : r + G[static_cast<std::size_t>(k)];
    }
}

GraverBasis graver_basis(const Configuration& config, const GraverLimits& limits) {
    std::vector<Move> G;
    using Key = std::tuple<Int, std::size_t, std::size_t, int>; // degree, i, j, sign of g_j
    std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;

    auto degree_of = [&](const IntVec& v) {
        Int d = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] > 0) d = checked_add(d, checked_mul(v[i], config.column_degrees()[i]));
        return d;
    };
    auto enqueue_with = [&](std::size_t idx) {
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (j == idx) continue;
            for (int sign : {1, -1}) {
                const IntVec other = sign > 0 ? G[j] : -G[j];
                if (sign_compatible(G[idx], other)) continue;
                queue.emplace(degree_of(G[idx] + other), std::min(idx, j), std::max(idx, j),
                              sign);
            }
        }
    };
    auto insert = [&](const IntVec& v) {
        IntVec r = normal_form(v, G);
        if (r.is_zero()) return;
        G.push_back(canonicalize_sign(r));
        if (G.size() > limits.max_elements)
            throw BudgetExceeded("Graver completion exceeded " +
                                 std::to_string(limits.max_elements) + " elements");
        enqueue_with(G.size() - 1);
    };

    for (const auto& s : seed_generators(config)) insert(s);
    while (!queue.empty()) {
        const auto [deg, i, j, sign] = queue.top();
        queue.pop();
        insert(sign > 0 ? G[i] + G[j] : G[i] - G[j]);
    }
    return GraverBasis{minimal_elements(std::move(G)), config.digest()};
}

GraverBasis graver_oracle_box(const Configuration& config, Int K, const GraverLimits& limits) {
    if (K < 1) throw DimensionError("box oracle needs K >= 1");
    const std::size_t n = config.cols();
    double volume = 1;
    for (std::size_t i = 0; i < n; ++i) volume *= static_cast<double>(K + 1);
    if (volume > static_cast<double>(limits.max_box_points))
        throw BudgetExceeded("box oracle volume exceeds budget");

    std::map<IntVec, std::vector<IntVec>> by_degree;
    IntVec p(n);
    for (;;) {
        by_degree[multidegree(config, p)].push_back(p);
        std::size_t k = 0;
        while (k < n && p[k] == K) p[k++] = 0;
        if (k == n) break;
        ++p[k];
    }
    std::set<Move> found;
    for (const auto& [deg, pts] : by_degree) {
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                bool disjoint = true;
                for (std::size_t i = 0; i < n && disjoint; ++i)
                    disjoint = pts[a][i] == 0 || pts[b][i] == 0;
                if (disjoint) found.insert(canonicalize_sign(pts[a] - pts[b]));
            }
    }
    return GraverBasis{minimal_elements(std::vector<Move>(found.begin(), found.end())),
                       config.digest()};
}

Int max_abs_entry(std::span<const Move> moves) {
    Int m = 0;
    for (const auto& v : moves)
        for (Int x : v) m = std::max(m, x < 0 ? checked_sub(0, x) : x);
    return m;
}

} // namespace toric
