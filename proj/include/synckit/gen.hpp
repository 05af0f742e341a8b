/* gen.hpp -- deterministic automaton families and seeded random generators. */

#ifndef SYNCKIT_GEN_HPP_
#define SYNCKIT_GEN_HPP_

#include <cstdint>
#include <optional>

#include "synckit/monoid.hpp"
#include "synckit/types.hpp"

namespace synckit {

/// splitmix64: tiny, fast, full-period 64-bit generator. Kept here (rather
/// than <random>) so that generated corpora are reproducible across standard
/// library implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

enum class Family {
    cerny,               // the classic slowly synchronizing family
    random_uniform,      // each transition uniform over states
    monotone,            // each letter's action is monotone w.r.t. 0 < 1 < ... < n-1
    aperiodic_rejection, // uniform sampling filtered through an aperiodicity check
};

struct GenSpec {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint64_t seed = 0;
    Family family = Family::random_uniform;
    std::uint32_t max_tries = 100; // rejection budget for aperiodic_rejection
};

/// C_n: states 0..n-1, letter a rotates forward, letter b maps 0 to 1 and
/// fixes everything else. Shortest synchronizing word has length (n-1)^2.
Dfa cerny(std::uint32_t n);

/// One generator draw per table entry, letter-major then state order;
/// entry = draw % n.
Dfa random_dfa(std::uint32_t n, std::uint32_t k, std::uint64_t seed);

/// One generator draw per letter; the draw selects a monotone row uniformly
/// by rank. Monotone rows of length n are counted by C(2n-1, n), which fits
/// in 64 bits only up to n = 34.
Dfa random_monotone_dfa(std::uint32_t n, std::uint32_t k, std::uint64_t seed);

/// Rejection sampling: draw random automata from one continuous generator
/// stream until one has an aperiodic transition monoid; absent when
/// max_tries is exhausted. Monoid cap errors propagate.
std::optional<Dfa> random_aperiodic_dfa(const GenSpec& spec,
                                        std::uint64_t monoid_cap = kDefaultMonoidCap);

/// Dispatch on spec.family. Throws ResourceLimitError when the rejection
/// family exhausts its tries (the CLI surfaces this as a resource failure).
Dfa generate(const GenSpec& spec);

/// Number of monotone rows over n states: C(2n-1, n). Exposed for tests.
std::uint64_t monotone_row_count(std::uint32_t n);

/// The rank-th monotone row in lexicographic order, rank < C(2n-1, n).
std::vector<State> unrank_monotone_row(std::uint32_t n, std::uint64_t rank);

} // namespace synckit

#endif // SYNCKIT_GEN_HPP_
