/* relation.cpp -- bit-matrix relations, stability, congruences, quotients. */

#include "synckit/relation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "synckit/kernels.hpp"

namespace synckit {

StateRelation::StateRelation(std::uint32_t n)
    : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {}

void StateRelation::close_reflexive() {
    for (State q = 0; q < n_; ++q)
        add(q, q);
}

void StateRelation::close_symmetric() {
    StateRelation t = transposed();
    for (std::size_t i = 0; i < bits_.size(); ++i)
        bits_[i] |= t.bits_[i];
}

void StateRelation::close_transitive(Exec exec) {
    kernels::transitive_closure(bits_.data(), n_, words_, exec);
}

bool StateRelation::is_reflexive() const {
    for (State q = 0; q < n_; ++q)
        if (!contains(q, q))
            return false;
    return true;
}

bool StateRelation::is_irreflexive() const {
    for (State q = 0; q < n_; ++q)
        if (contains(q, q))
            return false;
    return true;
}

bool StateRelation::is_symmetric() const { return *this == transposed(); }

bool StateRelation::is_antisymmetric() const {
    for (State p = 0; p < n_; ++p)
        for (State q = p + 1; q < n_; ++q)
            if (contains(p, q) && contains(q, p))
                return false;
    return true;
}

bool StateRelation::is_transitive() const {
    for (State p = 0; p < n_; ++p)
        for (State q = 0; q < n_; ++q) {
            if (!contains(p, q))
                continue;
            // Row p must cover row q.
            const std::uint64_t* rp = bits_.data() + std::size_t(p) * words_;
            const std::uint64_t* rq = bits_.data() + std::size_t(q) * words_;
            for (std::uint32_t w = 0; w < words_; ++w)
                if (rq[w] & ~rp[w])
                    return false;
        }
    return true;
}

StateRelation StateRelation::transposed() const {
    StateRelation t(n_);
    for (State p = 0; p < n_; ++p)
        for (State q = 0; q < n_; ++q)
            if (contains(p, q))
                t.add(q, p);
    return t;
}

std::vector<std::pair<State, State>> StateRelation::pairs() const {
    std::vector<std::pair<State, State>> out;
    for (State p = 0; p < n_; ++p)
        for (State q = 0; q < n_; ++q)
            if (contains(p, q))
                out.emplace_back(p, q);
    return out;
}

std::size_t StateRelation::count() const {
    std::size_t total = 0;
    for (std::uint64_t word : bits_)
        total += std::popcount(word);
    return total;
}

OrderResult order_from_scc(const Dfa& dfa, const AlmostMinimalScc& m, Exec exec) {
    StateRelation rel(dfa.num_states());
    for (auto [p, q] : m.pairs)
        rel.add(p, q);
    rel.close_transitive(exec);
    rel.close_reflexive();
    return {rel, rel.is_antisymmetric()};
}

Partition congruence_from_scc(const Dfa& dfa, const AlmostMinimalScc& m) {
    const std::uint32_t n = dfa.num_states();
    std::vector<State> dsu(n);
    std::iota(dsu.begin(), dsu.end(), State{0});
    auto find = [&](State q) {
        while (dsu[q] != q) {
            dsu[q] = dsu[dsu[q]];
            q = dsu[q];
        }
        return q;
    };
    for (auto [p, q] : m.pairs) {
        State rp = find(p);
        State rq = find(q);
        if (rp != rq)
            dsu[std::max(rp, rq)] = std::min(rp, rq);
    }

    Partition part;
    part.block_of.assign(n, 0xFFFFFFFFu);
    for (State q = 0; q < n; ++q) {
        State root = find(q);
        if (part.block_of[root] == 0xFFFFFFFFu) {
            part.block_of[root] = part.num_blocks();
            part.blocks.emplace_back();
        }
        part.block_of[q] = part.block_of[root];
        part.blocks[part.block_of[q]].push_back(q);
    }
    return part;
}

StabilityResult check_stability(const Dfa& dfa, const StateRelation& rel) {
    const std::uint32_t n = dfa.num_states();
    const std::uint32_t k = dfa.num_letters();
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q) {
            if (!rel.contains(p, q))
                continue;
            for (Letter a = 0; a < k; ++a)
                if (!rel.contains(dfa.step(p, a), dfa.step(q, a)))
                    return {false, StabilityCounterexample{p, q, a}};
        }
    return {true, std::nullopt};
}

std::optional<TCycle> detect_t_cycle(const Dfa& dfa, const AlmostMinimalScc& m) {
    const std::uint32_t n = dfa.num_states();
    std::vector<std::vector<State>> adj(n);
    for (auto [p, q] : m.pairs)
        adj[p].push_back(q); // pairs are sorted, so neighbor lists ascend

    enum : std::uint8_t { white, gray, black };
    std::vector<std::uint8_t> color(n, white);
    struct Frame {
        State v;
        std::size_t next;
    };
    std::vector<Frame> frames;

    for (State start : m.support) {
        if (color[start] != white)
            continue;
        frames.push_back({start, 0});
        color[start] = gray;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next < adj[f.v].size()) {
                State w = adj[f.v][f.next++];
                if (color[w] == white) {
                    color[w] = gray;
                    frames.push_back({w, 0});
                } else if (color[w] == gray) {
                    TCycle cycle;
                    std::size_t pos = 0;
                    while (frames[pos].v != w)
                        ++pos;
                    for (std::size_t i = pos; i < frames.size(); ++i)
                        cycle.states.push_back(frames[i].v);
                    cycle.states.push_back(w);
                    return cycle;
                }
            } else {
                color[f.v] = black;
                frames.pop_back();
            }
        }
    }
    return std::nullopt;
}

namespace {

void validate_partition(std::uint32_t n, const Partition& part) {
    if (part.block_of.size() != n)
        throw std::invalid_argument("partition covers " + std::to_string(part.block_of.size()) +
                                    " states, automaton has " + std::to_string(n));
    std::vector<bool> seen(n, false);
    for (std::uint32_t b = 0; b < part.num_blocks(); ++b) {
        if (part.blocks[b].empty())
            throw std::invalid_argument("partition block " + std::to_string(b) + " is empty");
        for (State q : part.blocks[b]) {
            if (q >= n || seen[q] || part.block_of[q] != b)
                throw std::invalid_argument("partition blocks do not match block_of");
            seen[q] = true;
        }
    }
    for (State q = 0; q < n; ++q)
        if (!seen[q])
            throw std::invalid_argument("state " + std::to_string(q) + " is in no block");
}

} // namespace

QuotientResult quotient(const Dfa& dfa, const Partition& part) {
    const std::uint32_t n = dfa.num_states();
    const std::uint32_t k = dfa.num_letters();
    validate_partition(n, part);

    // A congruence sends all of a block into one block, for every letter;
    // checking every member against the block's first member is enough.
    for (std::uint32_t b = 0; b < part.num_blocks(); ++b) {
        const StateSet& block = part.blocks[b];
        for (std::size_t i = 1; i < block.size(); ++i)
            for (Letter a = 0; a < k; ++a) {
                State rep_target = dfa.step(block[0], a);
                State target = dfa.step(block[i], a);
                if (part.block_of[rep_target] != part.block_of[target])
                    throw CongruenceError(block[0], block[i], a,
                                          "states " + std::to_string(block[0]) + " and " +
                                              std::to_string(block[i]) +
                                              " split under letter " + std::to_string(a));
            }
    }

    std::vector<State> table(std::size_t(part.num_blocks()) * k);
    for (Letter a = 0; a < k; ++a)
        for (std::uint32_t b = 0; b < part.num_blocks(); ++b)
            table[std::size_t(a) * part.num_blocks() + b] =
                part.block_of[dfa.step(part.blocks[b][0], a)];
    return {Dfa(part.num_blocks(), k, std::move(table)), part.block_of};
}

} // namespace synckit
