/* gen.cpp -- seeded corpus generators. */

#include "synckit/gen.hpp"

#include <algorithm>
#include <stdexcept>

namespace synckit {

Dfa cerny(std::uint32_t n) {
    if (n < 2)
        throw std::invalid_argument("the family needs at least 2 states");
    std::vector<State> table(std::size_t(2) * n);
    for (State q = 0; q < n; ++q) {
        table[q] = (q + 1) % n;  // letter a: forward rotation
        table[n + q] = q;        // letter b: fix everything ...
    }
    table[n] = 1; // ... except 0, which joins 1
    return Dfa(n, 2, std::move(table));
}

Dfa random_dfa(std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
    if (n == 0 || k == 0)
        throw std::invalid_argument("need at least one state and one letter");
    SplitMix64 rng(seed);
    std::vector<State> table(std::size_t(n) * k);
    for (State& entry : table)
        entry = static_cast<State>(rng.next() % n);
    return Dfa(n, k, std::move(table));
}

namespace {

std::uint64_t binomial(std::uint32_t a, std::uint32_t b) {
    if (b > a)
        return 0;
    b = std::min(b, a - b);
    unsigned __int128 r = 1;
    for (std::uint32_t i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;
        if (r > ~std::uint64_t{0})
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

} // namespace

std::uint64_t monotone_row_count(std::uint32_t n) { return binomial(2 * n - 1, n); }

std::vector<State> unrank_monotone_row(std::uint32_t n, std::uint64_t rank) {
    // Lexicographic unranking of nondecreasing length-n sequences over [0, n):
    // with i entries fixed and the current floor v, the sequences starting
    // with value v number C((n - v) + (n - i - 1) - 1, n - i - 1).
    std::vector<State> row(n);
    State floor = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (State v = floor;; ++v) {
            std::uint64_t with_v = binomial(2 * n - v - i - 2, n - i - 1);
            if (rank < with_v) {
                row[i] = v;
                floor = v;
                break;
            }
            rank -= with_v;
            if (v + 1 >= n)
                throw std::invalid_argument("rank out of range for monotone rows");
        }
    }
    return row;
}

Dfa random_monotone_dfa(std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
    if (n == 0 || k == 0)
        throw std::invalid_argument("need at least one state and one letter");
    if (n > 34)
        throw std::invalid_argument("monotone sampling supports at most 34 states "
                                    "(row count must fit in 64 bits)");
    SplitMix64 rng(seed);
    const std::uint64_t rows = monotone_row_count(n);
    std::vector<State> table;
    table.reserve(std::size_t(n) * k);
    for (Letter a = 0; a < k; ++a) {
        std::vector<State> row = unrank_monotone_row(n, rng.next() % rows);
        table.insert(table.end(), row.begin(), row.end());
    }
    return Dfa(n, k, std::move(table));
}

std::optional<Dfa> random_aperiodic_dfa(const GenSpec& spec, std::uint64_t monoid_cap) {
    if (spec.n == 0 || spec.k == 0)
        throw std::invalid_argument("need at least one state and one letter");
    if (spec.max_tries == 0)
        throw std::invalid_argument("max_tries must be positive");
    SplitMix64 rng(spec.seed);
    for (std::uint32_t attempt = 0; attempt < spec.max_tries; ++attempt) {
        std::vector<State> table(std::size_t(spec.n) * spec.k);
        for (State& entry : table)
            entry = static_cast<State>(rng.next() % spec.n);
        Dfa dfa(spec.n, spec.k, std::move(table));
        if (is_aperiodic(dfa, monoid_cap).aperiodic)
            return dfa;
    }
    return std::nullopt;
}

Dfa generate(const GenSpec& spec) {
    switch (spec.family) {
    case Family::cerny:
        if (spec.k != 2)
            throw std::invalid_argument("the cerny family has exactly 2 letters");
        return cerny(spec.n);
    case Family::random_uniform:
        return random_dfa(spec.n, spec.k, spec.seed);
    case Family::monotone:
        return random_monotone_dfa(spec.n, spec.k, spec.seed);
    case Family::aperiodic_rejection: {
        std::optional<Dfa> dfa = random_aperiodic_dfa(spec);
        if (!dfa)
            throw ResourceLimitError(spec.max_tries, spec.max_tries,
                                     "no aperiodic automaton within " +
                                         std::to_string(spec.max_tries) + " tries");
        return *dfa;
    }
    }
    throw std::invalid_argument("unknown family");
}

} // namespace synckit
