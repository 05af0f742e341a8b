/* oracle.hpp -- brute-force shortest synchronizing word over subset space. */

#ifndef SYNCKIT_ORACLE_HPP_
#define SYNCKIT_ORACLE_HPP_

#include <cstdint>
#include <optional>

#include "synckit/exec.hpp"
#include "synckit/synthesize.hpp"
#include "synckit/types.hpp"

namespace synckit {

inline constexpr std::uint32_t kDefaultOracleCap = 16;

struct OracleResult {
    std::optional<Word> word;   // empty when the automaton never synchronizes
    std::uint64_t explored = 0; // subsets discovered by the search
    bool capped = false;        // set by callers that swallow the cap error
};

/// Breadth-first search over subsets of the state set, from the full set to
/// any singleton. Returns the lexicographically least among the shortest
/// synchronizing words; exact but exponential, so the state count is capped.
/// Throws ResourceLimitError when num_states exceeds max_states.
OracleResult shortest_sync_word(const Dfa& dfa, std::uint32_t max_states = kDefaultOracleCap);

/// Polynomial synchronizability test (pair-graph sink), no word built.
bool is_synchronizable(const Dfa& dfa, Exec exec = Exec::parallel);

/// True iff the certificate's word synchronizes the automaton and its length
/// is at most n(n-1)/2.
bool verify_bound(const Dfa& dfa, const SyncCertificate& cert);

} // namespace synckit

#endif // SYNCKIT_ORACLE_HPP_
