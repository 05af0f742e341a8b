/* test_monoid.cpp -- transition monoid enumeration, index/period, and the
 * aperiodicity test, each checked against a brute-force oracle.
 */

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "synckit/gen.hpp"
#include "synckit/monoid.hpp"
#include "synckit/types.hpp"

#include "helpers.hpp"

using namespace synckit;

namespace {

/// Oracle: the set of word-induced transformations, grown by pairwise
/// composition until it stops changing. Ignores ordering entirely.
std::set<std::vector<State>> closure_oracle(const Dfa& dfa) {
    std::set<std::vector<State>> seen;
    for (Letter a = 0; a < dfa.num_letters(); ++a) {
        std::vector<State> row(dfa.row(a).begin(), dfa.row(a).end());
        seen.insert(row);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<std::vector<State>> snapshot(seen.begin(), seen.end());
        for (const auto& f : snapshot)
            for (const auto& g : snapshot) {
                std::vector<State> fg(f.size());
                for (std::size_t q = 0; q < f.size(); ++q)
                    fg[q] = g[f[q]];
                grew |= seen.insert(fg).second;
            }
    }
    return seen;
}

/// Oracle: smallest (i, p), both >= 1, with t^(i+p) == t^i, found by listing
/// powers until one repeats.
IndexPeriod power_oracle(const Transformation& t) {
    std::vector<Transformation> powers{t};
    for (;;) {
        const Transformation next = powers.back().then(t);
        const auto hit = std::find(powers.begin(), powers.end(), next);
        if (hit != powers.end()) {
            const auto first = std::uint64_t(hit - powers.begin()) + 1;
            return {first, powers.size() + 1 - first};
        }
        powers.push_back(next);
    }
}

} // namespace

TEST_CASE("monoid elements match the closure oracle as a set") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint32_t n = 2 + std::uint32_t(rng.next() % 4);
        const std::uint32_t k = 1 + std::uint32_t(rng.next() % 3);
        const Dfa dfa = random_dfa(n, k, rng.next());
        const Monoid m = transition_monoid(dfa);

        std::set<std::vector<State>> got;
        for (const Transformation& t : m.elements)
            CHECK(got.insert(t.image).second); // no duplicates
        CHECK(got == closure_oracle(dfa));
    }
}

TEST_CASE("reference automaton has exactly seven transformations") {
    const Monoid m = transition_monoid(fixtures::a1());
    CHECK(m.size() == 7);
    CHECK(closure_oracle(fixtures::a1()).size() == 7);
    // The letters come first, in letter order.
    CHECK(m.elements[0].image == std::vector<State>{0, 0, 1});
    CHECK(m.elements[1].image == std::vector<State>{1, 2, 2});
    // The identity is not generated by any nonempty word here.
    for (const Transformation& t : m.elements)
        CHECK(t != Transformation::identity(3));
}

TEST_CASE("identity appears when a letter induces it") {
    const Monoid m = transition_monoid(fixtures::swap2());
    const auto id = Transformation::identity(2);
    CHECK(std::count(m.elements.begin(), m.elements.end(), id) == 1);
}

TEST_CASE("witness words are ordered and reproduce their elements") {
    SplitMix64 rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        const Dfa dfa = random_dfa(2 + std::uint32_t(rng.next() % 4), 2, rng.next());
        const Monoid m = transition_monoid(dfa);
        std::size_t prev_len = 1;
        for (std::uint32_t i = 0; i < m.size(); ++i) {
            const Word w = m.witness_word(i);
            CHECK(!w.empty());
            CHECK(w.size() >= prev_len); // canonical breadth-first order
            prev_len = w.size();
            CHECK(transformation_of_word(dfa, w) == m.elements[i]);
        }
    }
}

TEST_CASE("enumeration stops at the cap") {
    const Dfa c4 = cerny(4);
    CHECK_THROWS_AS(transition_monoid(c4, 10), ResourceLimitError);
    try {
        transition_monoid(c4, 10);
    } catch (const ResourceLimitError& e) {
        CHECK(e.limit == 10);
        CHECK(e.reached > 10);
    }
    CHECK(transition_monoid(c4).size() == closure_oracle(c4).size());
}

TEST_CASE("index and period of hand-picked transformations") {
    CHECK(index_period(Transformation::identity(4)) == IndexPeriod{1, 1});
    CHECK(index_period(Transformation{{2, 2, 2}}) == IndexPeriod{1, 1});   // constant
    CHECK(index_period(Transformation{{1, 2, 3, 0}}) == IndexPeriod{1, 4}); // 4-cycle
    CHECK(index_period(Transformation{{1, 0, 0}}) == IndexPeriod{1, 2});    // tail into a swap
    CHECK(index_period(Transformation{{0, 0, 1}}) == IndexPeriod{2, 1});    // pure tail
    // Two cycles of lengths 2 and 3: period lcm = 6.
    CHECK(index_period(Transformation{{1, 0, 3, 4, 2}}) == IndexPeriod{1, 6});
}

TEST_CASE("index and period match the power-iteration oracle") {
    SplitMix64 rng(33);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint32_t n = 1 + std::uint32_t(rng.next() % 8);
        Transformation t{std::vector<State>(n)};
        for (auto& q : t.image)
            q = State(rng.next() % n);
        const IndexPeriod got = index_period(t);
        const IndexPeriod want = power_oracle(t);
        CHECK(got == want);
    }
}

TEST_CASE("aperiodicity of the fixtures") {
    CHECK(is_aperiodic(fixtures::a1()).aperiodic);
    CHECK(is_aperiodic(fixtures::escape3()).aperiodic == false); // a swaps 0,1

    const AperiodicityResult swap_result = is_aperiodic(fixtures::swap2());
    CHECK(!swap_result.aperiodic);
    REQUIRE(swap_result.witness.has_value());
    CHECK(swap_result.witness->word == Word{0});
    CHECK(swap_result.witness->powers == IndexPeriod{1, 2});

    const AperiodicityResult cerny_result = is_aperiodic(cerny(4));
    CHECK(!cerny_result.aperiodic);
    REQUIRE(cerny_result.witness.has_value());
    CHECK(cerny_result.witness->word == Word{0}); // the rotation letter itself
    CHECK(cerny_result.witness->powers == IndexPeriod{1, 4});
}

TEST_CASE("aperiodicity agrees with checking every element's period") {
    SplitMix64 rng(34);
    for (int trial = 0; trial < 30; ++trial) {
        const Dfa dfa = random_dfa(2 + std::uint32_t(rng.next() % 4), 2, rng.next());
        bool all_period_one = true;
        for (const auto& image : closure_oracle(dfa))
            all_period_one &= power_oracle(Transformation{image}).period == 1;
        CHECK(is_aperiodic(dfa).aperiodic == all_period_one);
    }
}

TEST_CASE("aperiodicity is invariant under state relabeling") {
    SplitMix64 rng(35);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint32_t n = 3 + std::uint32_t(rng.next() % 3);
        const Dfa dfa = random_dfa(n, 2, rng.next());
        // Random permutation of the states.
        std::vector<State> perm(n);
        for (std::uint32_t i = 0; i < n; ++i)
            perm[i] = i;
        for (std::uint32_t i = n; i > 1; --i)
            std::swap(perm[i - 1], perm[rng.next() % i]);
        std::vector<State> table(std::size_t(n) * 2);
        for (Letter a = 0; a < 2; ++a)
            for (State q = 0; q < n; ++q)
                table[std::size_t(a) * n + perm[q]] = perm[dfa.step(q, a)];
        const Dfa relabeled(n, 2, table);
        CHECK(is_aperiodic(dfa).aperiodic == is_aperiodic(relabeled).aperiodic);
    }
}

TEST_CASE("sink states") {
    CHECK(sinks(fixtures::a1()) == StateSet{0, 1, 2});
    CHECK(sinks(Dfa(2, 1, {1, 1})) == StateSet{1});
    CHECK(sinks(fixtures::identity2()) == StateSet{});          // two terminal components
    CHECK(sinks(fixtures::escape3()) == StateSet{2});
    CHECK(sinks(cerny(5)) == StateSet{0, 1, 2, 3, 4});
}
