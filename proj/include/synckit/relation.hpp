/* relation.hpp -- state relations, congruences, quotients, t-cycles. */

#ifndef SYNCKIT_RELATION_HPP_
#define SYNCKIT_RELATION_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "synckit/exec.hpp"
#include "synckit/pair_graph.hpp"
#include "synckit/types.hpp"

namespace synckit {

/// Dense boolean relation on the state set, stored as an n x n bit matrix.
class StateRelation {
public:
    explicit StateRelation(std::uint32_t n);

    std::uint32_t degree() const { return n_; }

    bool contains(State p, State q) const {
        return (bits_[row_word(p, q)] >> (q & 63u)) & 1u;
    }
    void add(State p, State q) { bits_[row_word(p, q)] |= std::uint64_t(1) << (q & 63u); }

    void close_reflexive();
    void close_symmetric();
    void close_transitive(Exec exec = Exec::parallel);

    bool is_reflexive() const;
    bool is_irreflexive() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;
    bool is_transitive() const;

    StateRelation transposed() const;

    /// All related pairs, ordered by (p, q).
    std::vector<std::pair<State, State>> pairs() const;
    std::size_t count() const;

    bool operator==(const StateRelation&) const = default;

private:
    std::size_t row_word(State p, State q) const {
        return std::size_t(p) * words_ + (q >> 6);
    }

    std::uint32_t n_;
    std::uint32_t words_; // 64-bit words per row
    std::vector<std::uint64_t> bits_;
};

/// The relation >=_M: reflexive-transitive closure of M's pair set.
struct OrderResult {
    StateRelation order;   // quasi-order (reflexive, transitive)
    bool antisymmetric;    // true iff the quasi-order is a partial order
};

OrderResult order_from_scc(const Dfa& dfa, const AlmostMinimalScc& m,
                           Exec exec = Exec::parallel);

/// Partition of the state set into disjoint nonempty blocks covering [0, n),
/// numbered by smallest member.
struct Partition {
    std::vector<std::uint32_t> block_of; // per state
    std::vector<StateSet> blocks;        // each sorted; ordered by smallest member

    std::uint32_t num_blocks() const { return static_cast<std::uint32_t>(blocks.size()); }
};

/// The congruence rho_M: equivalence closure of M as a partition. States
/// outside the support stay in singleton blocks.
Partition congruence_from_scc(const Dfa& dfa, const AlmostMinimalScc& m);

struct StabilityCounterexample {
    State p;
    State q;
    Letter letter;
};

struct StabilityResult {
    bool stable = false;
    std::optional<StabilityCounterexample> counterexample; // first in (p, q, letter) scan order
};

/// A relation is stable when every related pair stays related under every
/// letter: (p, q) related implies (pa, qa) related.
StabilityResult check_stability(const Dfa& dfa, const StateRelation& rel);

/// Cyclic state sequence whose consecutive pairs all lie in M; the first
/// state equals the last and at least two states are distinct.
struct TCycle {
    std::vector<State> states;
};

/// Depth-first search over the M-edge graph, starting from the smallest state
/// of the support, neighbors in ascending order; returns the first cycle
/// found. Absence certifies that >=_M is a partial order.
std::optional<TCycle> detect_t_cycle(const Dfa& dfa, const AlmostMinimalScc& m);

struct QuotientResult {
    Dfa dfa;                                // automaton on the blocks
    std::vector<std::uint32_t> projection;  // state -> block index
};

/// Quotient automaton by a congruence. Stability is re-checked even when the
/// caller claims a congruence; CongruenceError carries the counterexample.
QuotientResult quotient(const Dfa& dfa, const Partition& part);

} // namespace synckit

#endif // SYNCKIT_RELATION_HPP_
