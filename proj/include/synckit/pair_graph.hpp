/* pair_graph.hpp -- the direct square of the transition graph. */

#ifndef SYNCKIT_PAIR_GRAPH_HPP_
#define SYNCKIT_PAIR_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "synckit/exec.hpp"
#include "synckit/graph.hpp"
#include "synckit/types.hpp"

namespace synckit {

inline constexpr std::uint64_t kDefaultPairCap = 4'000'000;

/**
 * Direct square of the transition graph: n^2 vertices identified with ordered
 * state pairs (vertex id p*n + q), and for each letter an edge
 * (p, q) -> (pa, qa). Every vertex has out-degree k and the diagonal is
 * closed under all letters.
 */
class PairGraph {
public:
    /// Throws ResourceLimitError when n^2 exceeds vertex_cap.
    explicit PairGraph(const Dfa& dfa, std::uint64_t vertex_cap = kDefaultPairCap,
                       Exec exec = Exec::parallel);

    std::uint32_t num_states() const { return n_; }
    std::uint32_t num_letters() const { return k_; }
    std::uint32_t num_vertices() const { return n_ * n_; }

    std::uint32_t vertex(State p, State q) const { return p * n_ + q; }
    std::pair<State, State> pair_of(std::uint32_t v) const { return {v / n_, v % n_}; }
    bool is_diagonal(std::uint32_t v) const { return v / n_ == v % n_; }

    std::uint32_t step(std::uint32_t v, Letter a) const { return graph_.target(v, a); }

    const FlatGraph& graph() const { return graph_; }

    /// Off-diagonal subgraph with all collapsing edges (target on the
    /// diagonal) removed; diagonal vertices are left isolated.
    FlatGraph noncollapsing_offdiagonal(const Dfa& dfa, Exec exec = Exec::parallel) const;

private:
    std::uint32_t n_;
    std::uint32_t k_;
    FlatGraph graph_;
};

/**
 * An almost minimal SCC M of the pair graph: an off-diagonal SCC closed under
 * every non-collapsing transition, together with its support (every state
 * occurring as a component of a pair).
 */
struct AlmostMinimalScc {
    std::vector<std::pair<State, State>> pairs; // sorted by (p, q)
    StateSet support;                           // states appearing in pairs
};

/// True iff some vertex of the pair graph is reachable from every vertex,
/// i.e. its condensation has a unique terminal SCC. This is equivalent to
/// the automaton being synchronizable.
bool has_pair_sink(const Dfa& dfa, std::uint64_t vertex_cap = kDefaultPairCap,
                   Exec exec = Exec::parallel);

/// Shortest word under which p and q land on the same state, ties broken
/// lexicographically; empty word when p == q; nullopt when the pair cannot
/// reach the diagonal.
std::optional<Word> merge_word(const Dfa& dfa, State p, State q);

/**
 * Deterministic almost minimal SCC: the candidates are exactly the terminal
 * SCCs of the non-collapsing off-diagonal subgraph, and the one whose
 * smallest vertex id is minimal is returned. nullopt only when there are no
 * off-diagonal pairs (n == 1).
 */
std::optional<AlmostMinimalScc> find_almost_minimal_scc(const Dfa& dfa,
                                                        std::uint64_t vertex_cap = kDefaultPairCap,
                                                        Exec exec = Exec::parallel);

} // namespace synckit

#endif // SYNCKIT_PAIR_GRAPH_HPP_
