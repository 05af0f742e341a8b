/* pair_graph.cpp -- direct square construction and almost minimal SCCs. */

#include "synckit/pair_graph.hpp"

#include <algorithm>
#include <deque>

#include "synckit/kernels.hpp"

namespace synckit {

namespace {

void check_vertex_cap(const Dfa& dfa, std::uint64_t vertex_cap) {
    const std::uint64_t vertices = std::uint64_t(dfa.num_states()) * dfa.num_states();
    if (vertices > vertex_cap)
        throw ResourceLimitError(vertex_cap, vertices,
                                 "pair graph needs " + std::to_string(vertices) +
                                     " vertices, cap is " + std::to_string(vertex_cap));
}

} // namespace

PairGraph::PairGraph(const Dfa& dfa, std::uint64_t vertex_cap, Exec exec)
    : n_(dfa.num_states()), k_(dfa.num_letters()) {
    check_vertex_cap(dfa, vertex_cap);
    graph_.num_vertices = n_ * n_;
    graph_.out_degree = k_;
    graph_.targets = kernels::pair_targets(dfa, exec);
}

FlatGraph PairGraph::noncollapsing_offdiagonal(const Dfa& dfa, Exec exec) const {
    FlatGraph g;
    g.num_vertices = n_ * n_;
    g.out_degree = k_;
    g.targets = kernels::pair_targets_noncollapsing(dfa, exec);
    return g;
}

bool has_pair_sink(const Dfa& dfa, std::uint64_t vertex_cap, Exec exec) {
    PairGraph pg(dfa, vertex_cap, exec);
    Condensation c = scc_condense(pg.graph());
    return c.terminal_components().size() == 1;
}

std::optional<Word> merge_word(const Dfa& dfa, State p, State q) {
    const std::uint32_t n = dfa.num_states();
    const std::uint32_t k = dfa.num_letters();
    if (p >= n || q >= n)
        throw std::invalid_argument("merge_word: state out of range");
    if (p == q)
        return Word{};

    // Breadth-first over pair vertices, letters ascending, so the first
    // diagonal hit carries the lexicographically least shortest word.
    const std::uint32_t start = p * n + q;
    constexpr std::uint32_t unseen = 0xFFFFFFFFu;
    std::vector<std::uint32_t> parent(std::size_t(n) * n, unseen);
    std::vector<Letter> via(std::size_t(n) * n, 0);
    std::deque<std::uint32_t> queue;
    parent[start] = start;
    queue.push_back(start);

    while (!queue.empty()) {
        std::uint32_t v = queue.front();
        queue.pop_front();
        const State vp = v / n;
        const State vq = v % n;
        for (Letter a = 0; a < k; ++a) {
            std::uint32_t w = dfa.step(vp, a) * n + dfa.step(vq, a);
            if (parent[w] != unseen)
                continue;
            parent[w] = v;
            via[w] = a;
            if (w / n == w % n) {
                Word word;
                for (std::uint32_t u = w; u != start; u = parent[u])
                    word.push_back(via[u]);
                std::reverse(word.begin(), word.end());
                return word;
            }
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

std::optional<AlmostMinimalScc> find_almost_minimal_scc(const Dfa& dfa, std::uint64_t vertex_cap,
                                                        Exec exec) {
    const std::uint32_t n = dfa.num_states();
    if (n < 2)
        return std::nullopt;
    PairGraph pg(dfa, vertex_cap, exec);
    FlatGraph filtered = pg.noncollapsing_offdiagonal(dfa, exec);
    Condensation c = scc_condense(filtered);

    // Candidates are the terminal components of the filtered graph that
    // contain an off-diagonal vertex; isolated diagonal vertices are terminal
    // too but never qualify. Components are numbered by smallest vertex, so
    // the first qualifying terminal is the canonical choice.
    for (std::uint32_t comp : c.terminal_components()) {
        auto members = c.members_of(comp);
        if (members.size() == 1 && pg.is_diagonal(members[0]))
            continue;
        AlmostMinimalScc m;
        m.pairs.reserve(members.size());
        for (std::uint32_t v : members)
            m.pairs.push_back(pg.pair_of(v));
        std::sort(m.pairs.begin(), m.pairs.end());
        for (auto [p, q] : m.pairs) {
            m.support.push_back(p);
            m.support.push_back(q);
        }
        std::sort(m.support.begin(), m.support.end());
        m.support.erase(std::unique(m.support.begin(), m.support.end()), m.support.end());
        return m;
    }
    throw InvariantError("no almost minimal SCC found despite n >= 2");
}

} // namespace synckit
