/* helpers.hpp -- shared fixtures and small generators for the test suite. */

#ifndef SYNCKIT_TESTS_HELPERS_HPP_
#define SYNCKIT_TESTS_HELPERS_HPP_

#include <cstdint>

#include "synckit/gen.hpp"
#include "synckit/types.hpp"

namespace fixtures {

/// Three states, two letters: a maps 0,1,2 to 0,0,1 and b maps 0,1,2 to
/// 1,2,2. Aperiodic, strongly connected, shortest synchronizing word "aa".
inline synckit::Dfa a1() { return synckit::Dfa(3, 2, {0, 0, 1, 1, 2, 2}); }

/// a swaps the two states, b fixes both. Synchronizes nothing, and the swap
/// has period 2.
inline synckit::Dfa swap2() { return synckit::Dfa(2, 2, {1, 0, 0, 1}); }

/// One identity letter on two states; no pair ever merges.
inline synckit::Dfa identity2() { return synckit::Dfa(2, 1, {0, 1}); }

/// Two components: a = [1,0,2], b = [0,2,2]. {0,1} is a non-terminal SCC and
/// the greedy escape from it needs the detour "bab".
inline synckit::Dfa escape3() { return synckit::Dfa(3, 2, {1, 0, 2, 0, 2, 2}); }

/// Random word of the given length, letters drawn uniformly.
inline synckit::Word random_word(synckit::SplitMix64& rng, std::uint32_t k, std::size_t len) {
    synckit::Word w(len);
    for (std::size_t i = 0; i < len; ++i)
        w[i] = static_cast<synckit::Letter>(rng.next() % k);
    return w;
}

} // namespace fixtures

#endif // SYNCKIT_TESTS_HELPERS_HPP_
