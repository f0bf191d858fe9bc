#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "toric/completion.hpp"
#include "toric/configuration.hpp"
#include "toric/fibers.hpp"

namespace toric {

/// Partition of a fiber under "p ~ q iff supp(p) ∩ supp(q) ≠ ∅".
struct FiberGraph {
    Fiber fiber;
    /// Indices into fiber.points. Each component is sorted, so its first
    /// entry is its lexicographically smallest point; components are ordered
    /// by that first entry.
    std::vector<std::vector<std::size_t>> components;

    std::size_t component_count() const noexcept { return components.size(); }
};

/// Throws TruncatedFiber on a truncated fiber.
FiberGraph fiber_graph_components(const Fiber& fiber);

/// fiber_of(u) = {u⁺, u⁻}.
bool is_indispensable(const Configuration& config, const Move& u,
                      std::size_t cap = kDefaultFiberCap);

/// u⁺ and u⁻ lie in different components of the fiber graph of u.
bool in_universal_markov(const Configuration& config, const Move& u,
                         std::size_t cap = kDefaultFiberCap);

/// Literal check of a strongly semiconformal decomposition u = u1 + … + ul:
/// u⁺ > u1⁺ and u⁺ > (u1 + … + u_{i−1}) + u_i⁺, where x > y means x ≥ y
/// componentwise and x ≠ y. Requires l ≥ 2 and every part nonzero.
bool is_proper_ssc_decomposition(const Move& u, const std::vector<Move>& parts);

/// Breadth-first search for a proper strongly semiconformal decomposition
/// with at most lmax parts, walking fiber points from u⁺ to u⁻. Every chain
/// returned passes is_proper_ssc_decomposition.
std::optional<std::vector<Move>> ssc_search(const Configuration& config, const Move& u,
                                            std::size_t lmax,
                                            std::size_t cap = kDefaultFiberCap);

enum class MarkovKind { minimal, universal, indispensable };

const char* to_string(MarkovKind kind);

struct MarkovBasis {
    std::vector<Move> moves;
    std::map<IntVec, std::size_t> per_degree_counts;
    MarkovKind kind = MarkovKind::minimal;
};

/// Where candidate degrees come from.
enum class DegreeSource {
    automatic, ///< groebner for Lawrence liftings, graver otherwise
    graver,    ///< degrees of the Graver basis
    groebner,  ///< degrees of a binomial generating set (lifting or saturation)
};

struct MarkovOptions {
    DegreeSource source = DegreeSource::automatic;
    std::size_t fiber_cap = kDefaultFiberCap;
    CompletionLimits completion;
    /// Seed the lifting of A⁽ʳ⁾ with a minimal basis of A⁽ʳ⁻¹⁾.
    bool seed_with_previous_lift = true;
    /// 0: lex-min representatives joined to the lex-min component.
    /// 1: lex-max representatives joined to the lex-max component.
    int tie_break = 0;
};

/// A binomial generating set of the toric ideal (not minimal). Lawrence
/// liftings lift the last row coordinate by coordinate from the product
/// lattice of the other rows; other configurations saturate the lattice
/// basis ideal variable by variable.
std::vector<Move> markov_generating_set(const Configuration& config,
                                        const MarkovOptions& options = {});

/// Lifting route for A⁽ʳ⁾ with an optional minimal basis of A⁽ʳ⁻¹⁾ as extra seed.
std::vector<Move> lawrence_generating_set(const Configuration& base, std::size_t r,
                                          const std::vector<Move>* previous,
                                          const MarkovOptions& options = {});

/// Fiber-graph minimization over the distinct degrees of `candidates`. The
/// candidates must contain a Markov basis (or at least one element in every
/// degree whose fiber graph is disconnected).
MarkovBasis minimize_markov(const Configuration& config, const std::vector<Move>& candidates,
                            const MarkovOptions& options = {});

MarkovBasis minimal_markov_basis(const Configuration& config, const MarkovOptions& options = {});

/// All u⁺ − u⁻ with u⁺, u⁻ in different fiber-graph components of a Markov
/// degree; equal to the Graver elements that pass in_universal_markov.
MarkovBasis universal_markov_basis(const Configuration& config,
                                   const MarkovOptions& options = {});

/// Universal elements whose fiber has exactly two points.
MarkovBasis indispensable_set(const Configuration& config, const MarkovOptions& options = {});

/// For each degree, joins p and p ± m (m ∈ moves) inside the full fiber and
/// checks that one component remains.
bool verify_markov_property(const Configuration& config, const std::vector<Move>& moves,
                            const std::vector<IntVec>& degrees,
                            std::size_t cap = kDefaultFiberCap);

/// Distinct A-degrees of the positive parts of the moves, sorted.
std::vector<IntVec> degrees_of(const Configuration& config, const std::vector<Move>& moves);

} // namespace toric
