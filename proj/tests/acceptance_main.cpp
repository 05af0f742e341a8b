/* acceptance_main.cpp -- the acceptance gate.
 *
 * Eight criteria, one PASS/FAIL line each, exit code = number of failures.
 * Every criterion carries its own wall-clock budget; blowing the budget
 * fails the criterion even when the checks themselves hold.
 */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "synckit/gen.hpp"
#include "synckit/graph.hpp"
#include "synckit/kernels.hpp"
#include "synckit/monoid.hpp"
#include "synckit/oracle.hpp"
#include "synckit/pair_graph.hpp"
#include "synckit/relation.hpp"
#include "synckit/synthesize.hpp"
#include "synckit/types.hpp"

using namespace synckit;

namespace {

/// All 729 three-state two-letter automata.
std::vector<Dfa> full_sweep() {
    std::vector<Dfa> out;
    out.reserve(729);
    std::vector<State> table(6);
    for (std::uint32_t code = 0; code < 729; ++code) {
        std::uint32_t rest = code;
        for (int i = 0; i < 6; ++i) {
            table[i] = State(rest % 3);
            rest /= 3;
        }
        out.emplace_back(3, 2, table);
    }
    return out;
}

/// Deterministic monotone corpus: 38 seeds for each (n, k) pair with
/// n in [2, 10] and k in [2, 4], 1026 automata in total.
std::vector<Dfa> monotone_corpus() {
    std::vector<Dfa> out;
    for (std::uint32_t n = 2; n <= 10; ++n)
        for (std::uint32_t k = 2; k <= 4; ++k)
            for (std::uint64_t i = 0; i < 38; ++i)
                out.push_back(random_monotone_dfa(n, k, (std::uint64_t(n) * 100 + k) * 1000 + i));
    return out;
}

/// 500 uniform random automata with 2 to 8 states.
std::vector<Dfa> random_corpus() {
    std::vector<Dfa> out;
    for (std::uint64_t seed = 0; seed < 500; ++seed)
        out.push_back(random_dfa(2 + std::uint32_t(seed % 7), 2 + std::uint32_t(seed % 3), seed));
    return out;
}

StateRelation relation_of(const Partition& part, std::uint32_t n) {
    StateRelation rel(n);
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q)
            if (part.block_of[p] == part.block_of[q])
                rel.add(p, q);
    return rel;
}

Word random_word(SplitMix64& rng, std::uint32_t k, std::size_t len) {
    Word w(len);
    for (auto& a : w)
        a = Letter(rng.next() % k);
    return w;
}

// ---- criteria -------------------------------------------------------------

bool criterion_sweep_synthesis(std::string& detail) {
    std::size_t eligible = 0;
    for (const Dfa& dfa : full_sweep()) {
        if (!is_aperiodic(dfa).aperiodic || !has_pair_sink(dfa))
            continue;
        ++eligible;
        const SyncCertificate cert = synchronize_aperiodic(dfa);
        if (!cert.verified || !cert.bound_ok || cert.word.size() > 3)
            return false;
        const auto shortest = shortest_sync_word(dfa).word;
        if (!shortest || shortest->size() > cert.word.size())
            return false;
    }
    detail = std::to_string(eligible) + " aperiodic synchronizable automata of 729";
    return eligible > 0;
}

bool criterion_slow_family(std::string& detail) {
    for (std::uint32_t n = 4; n <= 6; ++n) {
        const Dfa dfa = cerny(n);
        const auto w = shortest_sync_word(dfa).word;
        if (!w || w->size() != std::size_t(n - 1) * (n - 1))
            return false;
        const AperiodicityResult ar = is_aperiodic(dfa);
        if (ar.aperiodic || !ar.witness || ar.witness->powers.period != n)
            return false;
    }
    detail = "shortest lengths 9/16/25, period witnesses 4/5/6";
    return true;
}

bool criterion_monotone_family(std::string& detail) {
    std::size_t synthesized = 0;
    const std::vector<Dfa> corpus = monotone_corpus();
    for (const Dfa& dfa : corpus) {
        if (!is_aperiodic(dfa).aperiodic)
            return false;
        if (!has_pair_sink(dfa))
            continue;
        const SyncCertificate cert = synchronize_aperiodic(dfa);
        const std::uint64_t n = dfa.num_states();
        if (!cert.verified || !cert.bound_ok || cert.word.size() > n * (n - 1) / 2)
            return false;
        ++synthesized;
    }
    detail = std::to_string(corpus.size()) + " monotone automata all aperiodic, " +
             std::to_string(synthesized) + " synthesized within bound";
    return synthesized > 0;
}

bool criterion_sink_equivalence(std::string& detail) {
    std::size_t checked = 0;
    for (const Dfa& dfa : full_sweep()) {
        if (has_pair_sink(dfa) != shortest_sync_word(dfa).word.has_value())
            return false;
        ++checked;
    }
    for (const Dfa& dfa : random_corpus()) {
        if (has_pair_sink(dfa) != shortest_sync_word(dfa).word.has_value())
            return false;
        ++checked;
    }
    detail = std::to_string(checked) + " automata, pair sink == oracle synchronizability";
    return true;
}

bool criterion_stability(std::string& detail) {
    std::vector<Dfa> corpus = full_sweep();
    for (const Dfa& dfa : random_corpus())
        corpus.push_back(dfa);
    for (const Dfa& dfa : monotone_corpus())
        corpus.push_back(dfa);
    std::size_t checked = 0;
    for (const Dfa& dfa : corpus) {
        const auto m = find_almost_minimal_scc(dfa);
        if (!m)
            return false; // every corpus automaton has >= 2 states
        if (!check_stability(dfa, order_from_scc(dfa, *m).order).stable)
            return false;
        const Partition part = congruence_from_scc(dfa, *m);
        if (!check_stability(dfa, relation_of(part, dfa.num_states())).stable)
            return false;
        for (State s : m->support)
            if (part.blocks[part.block_of[s]].size() < 2)
                return false;
        ++checked;
    }
    detail = std::to_string(checked) + " automata, order and congruence stable, support classes >= 2";
    return true;
}

bool criterion_t_cycles(std::string& detail) {
    std::size_t aperiodic_checked = 0;
    std::vector<Dfa> aperiodic_corpus = monotone_corpus();
    for (const Dfa& dfa : full_sweep())
        if (is_aperiodic(dfa).aperiodic)
            aperiodic_corpus.push_back(dfa);
    for (const Dfa& dfa : aperiodic_corpus) {
        const auto m = find_almost_minimal_scc(dfa);
        if (!m || detect_t_cycle(dfa, *m))
            return false;
        ++aperiodic_checked;
    }

    // The swap automaton's almost minimal SCC is the mutual pair.
    const Dfa swap(2, 2, {1, 0, 0, 1});
    const auto swap_m = find_almost_minimal_scc(swap);
    if (!swap_m || !detect_t_cycle(swap, *swap_m))
        return false;

    // The rotation family: whenever M holds a transposed pair, a cycle is
    // found, and the cycle really walks through M.
    std::size_t rotation_hits = 0;
    for (std::uint32_t n = 4; n <= 10; ++n) {
        const Dfa dfa = cerny(n);
        const auto m = find_almost_minimal_scc(dfa);
        if (!m)
            return false;
        const std::set<std::pair<State, State>> pairs(m->pairs.begin(), m->pairs.end());
        bool transposed = false;
        for (const auto& [p, q] : m->pairs)
            transposed |= pairs.count({q, p}) == 1;
        if (!transposed)
            continue;
        const auto cyc = detect_t_cycle(dfa, *m);
        if (!cyc || cyc->states.front() != cyc->states.back())
            return false;
        for (std::size_t i = 0; i + 1 < cyc->states.size(); ++i)
            if (pairs.count({cyc->states[i], cyc->states[i + 1]}) == 0)
                return false;
        ++rotation_hits;
    }
    detail = std::to_string(aperiodic_checked) + " aperiodic automata cycle-free; swap and " +
             std::to_string(rotation_hits) + " rotation automata yield cycles";
    return rotation_hits > 0;
}

bool criterion_round_guarantees(std::string& detail) {
    std::vector<Dfa> corpus = full_sweep();
    for (const Dfa& dfa : monotone_corpus())
        corpus.push_back(dfa);
    // Uniform instances found by scanning seeds for collapses that need more
    // than one round, so the cross-round guarantees get real work.
    for (const std::uint64_t seed : {7248u, 7990u, 9596u, 17924u, 20044u, 20984u, 25018u, 39044u})
        corpus.push_back(
            random_dfa(5 + std::uint32_t(seed % 4), 2 + std::uint32_t(seed % 2), seed));
    std::size_t classes = 0, rounds = 0, multi_round = 0;
    for (const Dfa& dfa : corpus) {
        if (scc_condense(dfa_graph(dfa)).num_components != 1 || !has_pair_sink(dfa))
            continue;
        const auto m = find_almost_minimal_scc(dfa);
        if (!m || detect_t_cycle(dfa, *m))
            continue;
        const OrderResult ord = order_from_scc(dfa, *m);
        if (!ord.antisymmetric)
            return false; // no t-cycle must mean a partial order
        const std::uint32_t n = dfa.num_states();
        for (const StateSet& cls : congruence_from_scc(dfa, *m).blocks) {
            if (cls.size() < 2)
                continue;
            ClassTrace trace;
            const Word w = synchronize_class(dfa, ord.order, cls, &trace);
            if (apply_set(dfa, cls, w).size() != 1)
                return false;
            std::size_t prev_min = n + 1;
            for (const ClassRound& round : trace.rounds) {
                StateSet overlap;
                std::set_intersection(round.max_states.begin(), round.max_states.end(),
                                      round.min_states.begin(), round.min_states.end(),
                                      std::back_inserter(overlap));
                if (!overlap.empty())
                    return false; // maxima and minima must stay disjoint
                if (round.max_states.size() < round.min_states.size())
                    return false;
                if (round.step.size() > n - 1)
                    return false; // each round is one short hop
                if (round.min_states.size() >= prev_min)
                    return false; // minima strictly shrink
                prev_min = round.min_states.size();
            }
            if (!trace.rounds.empty() &&
                trace.rounds.size() > trace.rounds.front().min_states.size())
                return false; // round count is capped by the first minima
            for (std::size_t r = 0; r + 1 < trace.rounds.size(); ++r) {
                // The next image and its minima come from this round's step.
                const ClassRound& cur = trace.rounds[r];
                const ClassRound& nxt = trace.rounds[r + 1];
                if (nxt.cls != apply_set(dfa, cur.cls, cur.step))
                    return false;
                const StateSet moved = apply_set(dfa, cur.min_states, cur.step);
                if (!std::includes(moved.begin(), moved.end(), nxt.min_states.begin(),
                                   nxt.min_states.end()))
                    return false;
            }
            ++classes;
            rounds += trace.rounds.size();
            multi_round += trace.rounds.size() > 1;
        }
    }
    detail = std::to_string(classes) + " classes collapsed over " + std::to_string(rounds) +
             " rounds (" + std::to_string(multi_round) + " multi-round), all guarantees held";
    return classes > 100 && multi_round > 0;
}

bool criterion_square_agreement(std::string& detail) {
    std::vector<Dfa> corpus;
    const std::vector<Dfa> sweep = full_sweep();
    for (std::size_t i = 0; i < sweep.size(); i += 7)
        corpus.push_back(sweep[i]);
    const std::vector<Dfa> mono = monotone_corpus();
    for (std::size_t i = 0; i < mono.size(); i += 20)
        corpus.push_back(mono[i]);

    SplitMix64 rng(2024);
    std::size_t words = 0;
    for (const Dfa& dfa : corpus) {
        const std::uint32_t n = dfa.num_states();
        const std::uint32_t k = dfa.num_letters();
        // The direct square as an automaton on the n^2 pair states.
        const auto targets = kernels::pair_targets(dfa, Exec::parallel);
        std::vector<State> table(std::size_t(k) * n * n);
        for (std::uint32_t v = 0; v < n * n; ++v)
            for (Letter a = 0; a < k; ++a)
                table[std::size_t(a) * n * n + v] = targets[std::size_t(v) * k + a];
        const Dfa square(n * n, k, table);

        for (int i = 0; i < 100; ++i) {
            const Word w = random_word(rng, k, rng.next() % (2 * n + 1));
            if (is_synchronizing_word(dfa, w) != is_synchronizing_word(square, w))
                return false;
            ++words;
        }
    }
    detail = std::to_string(words) + " words on " + std::to_string(corpus.size()) +
             " automata agree between the automaton and its square";
    return true;
}

// ---- driver ---------------------------------------------------------------

struct Criterion {
    int id;
    const char* summary;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "full 3-state sweep: synthesis verified, within bound, never beats the oracle", 10,
         criterion_sweep_synthesis},
        {2, "rotate-and-merge family: quadratic shortest words, periodic witnesses", 5,
         criterion_slow_family},
        {3, "monotone corpus: all aperiodic, certificates within n(n-1)/2", 120,
         criterion_monotone_family},
        {4, "pair sink equals oracle synchronizability on sweep plus random corpus", 60,
         criterion_sink_equivalence},
        {5, "derived order and congruence are stable; support classes have size >= 2", 60,
         criterion_stability},
        {6, "t-cycles: absent on aperiodic corpus, found on swap and rotation automata", 60,
         criterion_t_cycles},
        {7, "class collapse rounds: disjoint extremes, shrinking minima, short hops", 60,
         criterion_round_guarantees},
        {8, "synchronizing words agree between each automaton and its direct square", 60,
         criterion_square_agreement},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_budget = seconds < c.budget_seconds;
        std::ostringstream line;
        line << (ok && in_budget ? "PASS" : "FAIL") << "  " << c.id << "  " << c.summary;
        if (!detail.empty())
            line << "  [" << detail << "]";
        line << "  (" << std::fixed << seconds << "s";
        if (!in_budget)
            line << ", over the " << c.budget_seconds << "s budget";
        line << ")";
        std::cout << line.str() << std::endl;
        failures += !(ok && in_budget);
    }

    if (failures == 0)
        std::cout << "acceptance: all " << criteria.size() << " criteria hold" << std::endl;
    else
        std::cout << "acceptance: " << failures << " of " << criteria.size() << " criteria failed"
                  << std::endl;
    return failures;
}
