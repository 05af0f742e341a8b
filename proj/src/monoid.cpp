/* monoid.cpp -- monoid enumeration, index/period analysis, sink states. */

#include "synckit/monoid.hpp"

#include <algorithm>
#include <numeric>

#include "synckit/graph.hpp"
#include "synckit/kernels.hpp"

namespace synckit {

Word Monoid::witness_word(std::uint32_t idx) const {
    Word w;
    while (idx != no_parent) {
        w.push_back(via[idx]);
        idx = parent[idx];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

Monoid transition_monoid(const Dfa& dfa, std::uint64_t cap, Exec exec) {
    kernels::Closure c = kernels::monoid_closure(dfa, cap, exec);
    Monoid m;
    m.num_states = dfa.num_states();
    m.generators.reserve(dfa.num_letters());
    for (Letter a = 0; a < dfa.num_letters(); ++a) {
        auto row = dfa.row(a);
        m.generators.push_back({std::vector<State>(row.begin(), row.end())});
    }
    m.elements = std::move(c.elements);
    m.parent = std::move(c.parent);
    m.via = std::move(c.via);
    return m;
}

IndexPeriod index_period(const Transformation& t) {
    const std::uint32_t n = t.degree();
    constexpr std::uint64_t pending = ~std::uint64_t{0};
    // tail[q]: steps from q to the first state on a cycle.
    std::vector<std::uint64_t> tail(n, pending);
    std::uint64_t max_tail = 0;
    std::uint64_t period = 1;

    auto fold_cycle = [&](std::uint64_t length) {
        std::uint64_t g = std::gcd(period, length);
        std::uint64_t step = length / g;
        if (period > ~std::uint64_t{0} / step)
            throw std::overflow_error("transformation period exceeds 64 bits");
        period *= step;
    };

    std::vector<State> path;
    for (State start = 0; start < n; ++start) {
        if (tail[start] != pending)
            continue;
        path.clear();
        State q = start;
        // March until we hit either a settled state or this very path.
        constexpr std::uint64_t on_path = pending - 1;
        while (tail[q] == pending) {
            tail[q] = on_path;
            path.push_back(q);
            q = t(q);
        }
        std::uint64_t base;
        if (tail[q] == on_path) {
            // Closed a new cycle: everything from q onward in the path is on it.
            std::size_t pos = std::find(path.begin(), path.end(), q) - path.begin();
            std::uint64_t length = path.size() - pos;
            fold_cycle(length);
            for (std::size_t i = pos; i < path.size(); ++i)
                tail[path[i]] = 0;
            path.resize(pos);
            base = 0;
        } else {
            base = tail[q];
        }
        for (std::size_t i = path.size(); i--;) {
            tail[path[i]] = base + (path.size() - i);
            max_tail = std::max(max_tail, tail[path[i]]);
        }
    }
    return {std::max<std::uint64_t>(max_tail, 1), period};
}

AperiodicityResult is_aperiodic(const Dfa& dfa, std::uint64_t cap, Exec exec) {
    Monoid m = transition_monoid(dfa, cap, exec);
    for (std::uint32_t idx = 0; idx < m.size(); ++idx) {
        IndexPeriod ip = index_period(m.elements[idx]);
        if (ip.period > 1)
            return {false, AperiodicityWitness{m.witness_word(idx), ip}};
    }
    return {true, std::nullopt};
}

StateSet sinks(const Dfa& dfa) {
    Condensation c = scc_condense(dfa_graph(dfa));
    std::vector<std::uint32_t> terminals = c.terminal_components();
    if (terminals.size() != 1)
        return {};
    auto members = c.members_of(terminals[0]);
    return StateSet(members.begin(), members.end());
}

} // namespace synckit
