/* monoid.hpp -- transition monoid enumeration, aperiodicity, sinks. */

#ifndef SYNCKIT_MONOID_HPP_
#define SYNCKIT_MONOID_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "synckit/exec.hpp"
#include "synckit/types.hpp"

namespace synckit {

inline constexpr std::uint64_t kDefaultMonoidCap = 1'000'000;

/**
 * The transition monoid: every transformation induced by a nonempty word,
 * closed under composition with the letter transformations. Elements appear
 * in canonical breadth-first order and each carries one shortest witness word
 * (recoverable through parent links). The identity is present only when some
 * nonempty word generates it.
 */
struct Monoid {
    static constexpr std::uint32_t no_parent = 0xFFFFFFFFu;

    std::uint32_t num_states = 0;
    std::vector<Transformation> generators; // the k letter transformations, letter order
    std::vector<Transformation> elements;   // canonical breadth-first order
    std::vector<std::uint32_t> parent;      // index of the element one letter shorter
    std::vector<Letter> via;                // last letter of the witness word

    std::size_t size() const { return elements.size(); }

    /// Shortest word generating elements[idx]; ties broken lexicographically
    /// by the breadth-first construction.
    Word witness_word(std::uint32_t idx) const;
};

/// Breadth-first closure of the letter transformations. Requires cap >= k;
/// throws ResourceLimitError carrying the element count reached when the
/// closure grows past `cap` (it can reach n^n).
Monoid transition_monoid(const Dfa& dfa, std::uint64_t cap = kDefaultMonoidCap,
                         Exec exec = Exec::parallel);

/// Smallest (index, period) with t^(index+period) = t^index, both >= 1.
/// Computed from the functional graph of t: index is the longest tail,
/// period the lcm of the cycle lengths.
struct IndexPeriod {
    std::uint64_t index = 0;
    std::uint64_t period = 0;
    bool operator==(const IndexPeriod&) const = default;
};

IndexPeriod index_period(const Transformation& t);

struct AperiodicityWitness {
    Word word;          // shortest witness word of the offending element
    IndexPeriod powers; // its index/period, period > 1
};

struct AperiodicityResult {
    bool aperiodic = false;
    std::optional<AperiodicityWitness> witness; // set iff not aperiodic
};

/// True iff every monoid element has period 1, i.e. t^m = t^(m+1) holds
/// elementwise. On failure the witness is the first offending element in
/// canonical order. Propagates ResourceLimitError from the enumeration.
AperiodicityResult is_aperiodic(const Dfa& dfa, std::uint64_t cap = kDefaultMonoidCap,
                                Exec exec = Exec::parallel);

/// States reachable from every state: the members of the unique terminal SCC
/// of the transition graph, or empty when the terminal SCC is not unique.
StateSet sinks(const Dfa& dfa);

} // namespace synckit

#endif // SYNCKIT_MONOID_HPP_
