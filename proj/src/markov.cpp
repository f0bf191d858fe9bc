#include "toric/markov.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "toric/graver.hpp"
#include "toric/lawrence.hpp"

namespace toric {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<std::size_t> parent_;
};

std::size_t index_of(const Fiber& f, const FiberPoint& t) {
    const auto it = std::lower_bound(f.points.begin(), f.points.end(), t);
    if (it == f.points.end() || *it != t) return f.points.size();
    return static_cast<std::size_t>(it - f.points.begin());
}

Fiber complete_fiber(const Configuration& config, const IntVec& degree, std::size_t cap) {
    Fiber f = enumerate_fiber(config, degree, cap);
    if (f.truncated)
        throw TruncatedFiber("fiber at degree " + to_string(degree) + " exceeds " +
                             std::to_string(cap) + " points");
    return f;
}

Fiber complete_fiber_of(const Configuration& config, const Move& u, std::size_t cap) {
    if (u.size() != config.cols()) throw DimensionError("move has wrong length");
    return complete_fiber(config, multidegree(config, sign_split(u).plus), cap);
}

std::vector<Move> canonical_set(std::vector<Move> moves) {
    for (auto& m : moves) m = canonicalize_sign(m);
    std::sort(moves.begin(), moves.end());
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
    if (!moves.empty() && moves.front().is_zero()) moves.erase(moves.begin());
    return moves;
}

bool uses_lifting(const Configuration& config, const MarkovOptions& options) {
    switch (options.source) {
    case DegreeSource::graver: return false;
    case DegreeSource::groebner: return true;
    case DegreeSource::automatic: return config.kind() == ConfigKind::lawrence;
    }
    return false;
}

std::vector<Move> saturation_generating_set(const Configuration& config,
                                            const MarkovOptions& options) {
    const std::size_t n = config.cols();
    std::vector<Move> gens = kernel_basis(config).vectors;
    for (std::size_t c = 0; c < n && !gens.empty(); ++c) {
        BinomialOrder order;
        for (std::size_t k = 0; k < n; ++k)
            if (k != c) order.variables.push_back(k);
        order.variables.push_back(c);
        for (std::size_t k : order.variables) order.weights.push_back(config.column_degrees()[k]);
        gens = complete_binomials(gens, order, options.completion);
    }
    return canonical_set(std::move(gens));
}

} // namespace

FiberGraph fiber_graph_components(const Fiber& fiber) {
    if (fiber.truncated) throw TruncatedFiber("fiber graph of a truncated fiber");
    const std::size_t size = fiber.size();
    FiberGraph g;
    g.fiber = fiber;
    if (size == 0) return g;
    const std::size_t n = fiber.points.front().size();
    DisjointSets sets(size);
    std::vector<std::size_t> first(n, size);
    for (std::size_t p = 0; p < size; ++p)
        for (std::size_t c = 0; c < n; ++c) {
            if (fiber.points[p][c] == 0) continue;
            if (first[c] == size)
                first[c] = p;
            else
                sets.unite(first[c], p);
        }
    std::vector<std::size_t> slot(size, size);
    for (std::size_t p = 0; p < size; ++p) {
        const std::size_t root = sets.find(p);
        if (slot[root] == size) {
            slot[root] = g.components.size();
            g.components.emplace_back();
        }
        g.components[slot[root]].push_back(p);
    }
    return g;
}

bool is_indispensable(const Configuration& config, const Move& u, std::size_t cap) {
    if (u.is_zero()) throw DimensionError("is_indispensable: zero move");
    return complete_fiber_of(config, u, cap).size() == 2;
}

bool in_universal_markov(const Configuration& config, const Move& u, std::size_t cap) {
    if (u.is_zero()) throw DimensionError("in_universal_markov: zero move");
    const Fiber f = complete_fiber_of(config, u, cap);
    const auto split = sign_split(u);
    const FiberGraph g = fiber_graph_components(f);
    const std::size_t a = index_of(f, split.plus);
    const std::size_t b = index_of(f, split.minus);
    for (const auto& comp : g.components) {
        const bool has_a = std::binary_search(comp.begin(), comp.end(), a);
        const bool has_b = std::binary_search(comp.begin(), comp.end(), b);
        if (has_a || has_b) return has_a != has_b;
    }
    return false;
}

bool is_proper_ssc_decomposition(const Move& u, const std::vector<Move>& parts) {
    if (parts.size() < 2) return false;
    const IntVec up = sign_split(u).plus;
    IntVec prefix(u.size());
    for (const auto& part : parts) {
        if (part.size() != u.size()) throw DimensionError("ssc: dimension mismatch");
        if (part.is_zero()) return false;
        const IntVec bound = prefix + sign_split(part).plus;
        if (!leq(bound, up) || bound == up) return false;
        prefix = prefix + part;
    }
    return prefix == u;
}

std::optional<std::vector<Move>> ssc_search(const Configuration& config, const Move& u,
                                            std::size_t lmax, std::size_t cap) {
    if (lmax < 2) throw DimensionError("ssc_search needs lmax >= 2");
    if (u.is_zero()) return std::nullopt;
    const Fiber f = complete_fiber_of(config, u, cap);
    const auto split = sign_split(u);
    const std::size_t start = index_of(f, split.plus);
    const std::size_t goal = index_of(f, split.minus);
    const std::size_t size = f.size();
    const std::size_t n = u.size();

    // step t → t' taken by part t − t'; admissible iff the defining inequality
    // u⁺ > (u⁺ − t) + (t − t')⁺ holds, checked literally
    const IntVec& up = split.plus;
    auto admissible = [&](const FiberPoint& t, const FiberPoint& next) {
        bool strict = false;
        for (std::size_t c = 0; c < n; ++c) {
            const Int part = t[c] - next[c];
            const Int bound = up[c] - t[c] + (part > 0 ? part : 0);
            if (bound > up[c]) return false;
            if (bound != up[c]) strict = true;
        }
        return strict;
    };
    std::vector<std::size_t> parent(size, size);
    std::vector<std::size_t> depth(size, 0);
    std::deque<std::size_t> queue{start};
    parent[start] = start;
    while (!queue.empty() && parent[goal] == size) {
        const std::size_t p = queue.front();
        queue.pop_front();
        if (depth[p] >= lmax) continue;
        for (std::size_t q = 0; q < size; ++q) {
            if (parent[q] != size || !admissible(f.points[p], f.points[q])) continue;
            parent[q] = p;
            depth[q] = depth[p] + 1;
            queue.push_back(q);
        }
    }
    if (parent[goal] == size || depth[goal] > lmax) return std::nullopt;
    std::vector<std::size_t> path{goal};
    while (path.back() != start) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    std::vector<Move> chain;
    for (std::size_t i = 1; i < path.size(); ++i)
        chain.push_back(f.points[path[i - 1]] - f.points[path[i]]);
    return chain;
}

const char* to_string(MarkovKind kind) {
    switch (kind) {
    case MarkovKind::minimal: return "minimal";
    case MarkovKind::universal: return "universal";
    case MarkovKind::indispensable: return "indispensable";
    }
    return "?";
}

std::vector<IntVec> degrees_of(const Configuration& config, const std::vector<Move>& moves) {
    std::set<IntVec> seen;
    for (const auto& m : moves) seen.insert(multidegree(config, sign_split(m).plus));
    return {seen.begin(), seen.end()};
}

std::vector<Move> lawrence_generating_set(const Configuration& base, std::size_t r,
                                          const std::vector<Move>* previous,
                                          const MarkovOptions& options) {
    if (r < 2) throw DimensionError("Lawrence generating set needs r >= 2");
    const std::size_t n = base.cols();
    const std::size_t last = (r - 1) * n;
    MarkovOptions base_options = options;
    base_options.source = DegreeSource::automatic;
    const std::vector<Move> base_moves = minimal_markov_basis(base, base_options).moves;

    std::vector<Move> gens;
    for (const auto& b : base_moves)
        for (std::size_t i = 0; i + 1 < r; ++i) {
            IntVec v(r * n);
            for (std::size_t k = 0; k < n; ++k) {
                v[i * n + k] = b[k];
                v[last + k] = checked_sub(0, b[k]);
            }
            gens.push_back(std::move(v));
        }
    if (previous)
        for (const auto& p : *previous) {
            if (p.size() != last) throw DimensionError("previous lifting basis has wrong length");
            IntVec v(r * n);
            std::copy(p.begin(), p.end(), v.begin());
            gens.push_back(std::move(v));
        }

    const IntVec& d = base.column_degrees();
    for (std::size_t j = 0; j < n && !gens.empty(); ++j) {
        BinomialOrder order;
        for (std::size_t i = 0; i + 1 < r; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                order.variables.push_back(i * n + k);
                order.weights.push_back(checked_add(d[k], k <= j ? 1 : 0));
            }
        for (std::size_t k = 0; k <= j; ++k) {
            order.variables.push_back(last + k);
            order.weights.push_back(1);
        }
        gens = complete_binomials(gens, order, options.completion);
    }
    return canonical_set(std::move(gens));
}

std::vector<Move> markov_generating_set(const Configuration& config, const MarkovOptions& options) {
    if (config.kind() == ConfigKind::lawrence) {
        const Configuration& base = *config.lawrence_base();
        const std::size_t r = config.lawrence_r();
        if (r >= 3 && options.seed_with_previous_lift) {
            const std::vector<Move> prev = minimal_markov_basis(lift(base, r - 1), options).moves;
            return lawrence_generating_set(base, r, &prev, options);
        }
        return lawrence_generating_set(base, r, nullptr, options);
    }
    return saturation_generating_set(config, options);
}

MarkovBasis minimize_markov(const Configuration& config, const std::vector<Move>& candidates,
                            const MarkovOptions& options) {
    MarkovBasis out;
    out.kind = MarkovKind::minimal;
    for (const auto& degree : degrees_of(config, candidates)) {
        const FiberGraph g = fiber_graph_components(complete_fiber(config, degree, options.fiber_cap));
        const std::size_t k = g.component_count();
        if (k < 2) continue;
        const auto& pts = g.fiber.points;
        std::size_t base = 0;
        if (options.tie_break == 1) {
            for (std::size_t c = 0; c < k; ++c)
                if (g.components[c].back() > g.components[base].back()) base = c;
        }
        auto rep = [&](std::size_t c) -> const FiberPoint& {
            return options.tie_break == 1 ? pts[g.components[c].back()]
                                          : pts[g.components[c].front()];
        };
        for (std::size_t c = 0; c < k; ++c)
            if (c != base) out.moves.push_back(canonicalize_sign(rep(c) - rep(base)));
        out.per_degree_counts[degree] = k - 1;
    }
    std::sort(out.moves.begin(), out.moves.end());
    return out;
}

MarkovBasis minimal_markov_basis(const Configuration& config, const MarkovOptions& options) {
    std::vector<Move> candidates;
    if (uses_lifting(config, options)) {
        candidates = markov_generating_set(config, options);
    } else {
        GraverLimits limits;
        limits.max_elements = options.completion.max_elements;
        candidates = graver_basis(config, limits).moves;
    }
    return minimize_markov(config, candidates, options);
}

MarkovBasis universal_markov_basis(const Configuration& config, const MarkovOptions& options) {
    MarkovBasis out;
    out.kind = MarkovKind::universal;
    if (!uses_lifting(config, options)) {
        GraverLimits limits;
        limits.max_elements = options.completion.max_elements;
        for (const auto& g : graver_basis(config, limits).moves)
            if (in_universal_markov(config, g, options.fiber_cap)) {
                out.moves.push_back(g);
                ++out.per_degree_counts[multidegree(config, sign_split(g).plus)];
            }
        return out;
    }
    for (const auto& degree : degrees_of(config, markov_generating_set(config, options))) {
        const FiberGraph g = fiber_graph_components(complete_fiber(config, degree, options.fiber_cap));
        if (g.component_count() < 2) continue;
        const auto& pts = g.fiber.points;
        std::size_t count = 0;
        for (std::size_t a = 0; a < g.component_count(); ++a)
            for (std::size_t b = a + 1; b < g.component_count(); ++b)
                for (std::size_t p : g.components[a])
                    for (std::size_t q : g.components[b]) {
                        out.moves.push_back(canonicalize_sign(pts[p] - pts[q]));
                        ++count;
                    }
        out.per_degree_counts[degree] = count;
    }
    std::sort(out.moves.begin(), out.moves.end());
    return out;
}

MarkovBasis indispensable_set(const Configuration& config, const MarkovOptions& options) {
    MarkovBasis universal = universal_markov_basis(config, options);
    MarkovBasis out;
    out.kind = MarkovKind::indispensable;
    for (const auto& u : universal.moves)
        if (is_indispensable(config, u, options.fiber_cap)) {
            out.moves.push_back(u);
            ++out.per_degree_counts[multidegree(config, sign_split(u).plus)];
        }
    return out;
}

bool verify_markov_property(const Configuration& config, const std::vector<Move>& moves,
                            const std::vector<IntVec>& degrees, std::size_t cap) {
    for (const auto& m : moves)
        if (m.size() != config.cols()) throw DimensionError("verify_markov_property: move length");
    for (const auto& degree : degrees) {
        const Fiber f = complete_fiber(config, degree, cap);
        if (f.size() <= 1) continue;
        DisjointSets sets(f.size());
        for (std::size_t p = 0; p < f.size(); ++p)
            for (const auto& m : moves) {
                const IntVec q = f.points[p] + m;
                if (!q.is_nonnegative()) continue;
                const std::size_t idx = index_of(f, q);
                if (idx < f.size()) sets.unite(p, idx);
            }
        for (std::size_t p = 1; p < f.size(); ++p)
            if (sets.find(p) != sets.find(0)) return false;
    }
    return true;
}

} // namespace toric
