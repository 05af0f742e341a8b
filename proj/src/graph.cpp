/* graph.cpp -- iterative Tarjan SCC and deterministic condensation. */

#include "synckit/graph.hpp"

#include <algorithm>
#include <queue>

namespace synckit {

FlatGraph dfa_graph(const Dfa& dfa) {
    const std::uint32_t n = dfa.num_states();
    const std::uint32_t k = dfa.num_letters();
    FlatGraph g;
    g.num_vertices = n;
    g.out_degree = k;
    g.targets.resize(std::size_t(n) * k);
    for (State q = 0; q < n; ++q)
        for (Letter a = 0; a < k; ++a)
            g.targets[std::size_t(q) * k + a] = dfa.step(q, a);
    return g;
}

std::vector<std::uint32_t> Condensation::terminal_components() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < num_components; ++c)
        if (is_terminal(c))
            out.push_back(c);
    return out;
}

Condensation scc_condense(const FlatGraph& g) {
    const std::uint32_t n = g.num_vertices;
    constexpr std::uint32_t unvisited = 0xFFFFFFFFu;

    std::vector<std::uint32_t> index(n, unvisited);
    std::vector<std::uint32_t> lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> raw_component(n, unvisited);
    std::vector<std::uint32_t> scc_stack;
    std::uint32_t next_index = 0;
    std::uint32_t raw_count = 0;

    // Explicit DFS frames: vertex plus the next out-slot to examine.
    struct Frame {
        std::uint32_t v;
        std::uint32_t slot;
    };
    std::vector<Frame> frames;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != unvisited)
            continue;
        frames.push_back({root, 0});
        index[root] = lowlink[root] = next_index++;
        scc_stack.push_back(root);
        on_stack[root] = true;

        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.slot < g.out_degree) {
                std::uint32_t w = g.target(f.v, f.slot++);
                if (w == FlatGraph::no_edge)
                    continue;
                if (index[w] == unvisited) {
                    index[w] = lowlink[w] = next_index++;
                    scc_stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                std::uint32_t v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
                if (lowlink[v] == index[v]) {
                    std::uint32_t w;
                    do {
                        w = scc_stack.back();
                        scc_stack.pop_back();
                        on_stack[w] = false;
                        raw_component[w] = raw_count;
                    } while (w != v);
                    ++raw_count;
                }
            }
        }
    }

    // Renumber components by their smallest contained vertex, ascending; raw
    // Tarjan ids depend on DFS order and are not stable across refactors.
    std::vector<std::uint32_t> smallest(raw_count, unvisited);
    for (std::uint32_t v = 0; v < n; ++v)
        smallest[raw_component[v]] = std::min(smallest[raw_component[v]], v);
    std::vector<std::uint32_t> order(raw_count);
    for (std::uint32_t c = 0; c < raw_count; ++c)
        order[c] = c;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return smallest[a] < smallest[b]; });
    std::vector<std::uint32_t> renumber(raw_count);
    for (std::uint32_t pos = 0; pos < raw_count; ++pos)
        renumber[order[pos]] = pos;

    Condensation c;
    c.num_components = raw_count;
    c.component_of.resize(n);
    for (std::uint32_t v = 0; v < n; ++v)
        c.component_of[v] = renumber[raw_component[v]];

    // Members, CSR with ascending vertices inside each component.
    std::vector<std::uint32_t> sizes(raw_count, 0);
    for (std::uint32_t v = 0; v < n; ++v)
        ++sizes[c.component_of[v]];
    c.members_offset.assign(raw_count + 1, 0);
    for (std::uint32_t comp = 0; comp < raw_count; ++comp)
        c.members_offset[comp + 1] = c.members_offset[comp] + sizes[comp];
    c.members.resize(n);
    std::vector<std::uint32_t> fill = c.members_offset;
    for (std::uint32_t v = 0; v < n; ++v)
        c.members[fill[c.component_of[v]]++] = v;

    // Deduplicated condensation edges, CSR with ascending targets.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t v = 0; v < n; ++v) {
        for (std::uint32_t slot = 0; slot < g.out_degree; ++slot) {
            std::uint32_t w = g.target(v, slot);
            if (w == FlatGraph::no_edge)
                continue;
            std::uint32_t cv = c.component_of[v];
            std::uint32_t cw = c.component_of[w];
            if (cv != cw)
                edges.emplace_back(cv, cw);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    c.succ_offset.assign(raw_count + 1, 0);
    for (auto& [from, to] : edges)
        ++c.succ_offset[from + 1];
    for (std::uint32_t comp = 0; comp < raw_count; ++comp)
        c.succ_offset[comp + 1] += c.succ_offset[comp];
    c.succ.reserve(edges.size());
    for (auto& [from, to] : edges)
        c.succ.push_back(to);

    // Kahn topological order, smallest ready component first.
    std::vector<std::uint32_t> indegree(raw_count, 0);
    for (auto& [from, to] : edges)
        ++indegree[to];
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
    for (std::uint32_t comp = 0; comp < raw_count; ++comp)
        if (indegree[comp] == 0)
            ready.push(comp);
    c.topo_order.reserve(raw_count);
    while (!ready.empty()) {
        std::uint32_t comp = ready.top();
        ready.pop();
        c.topo_order.push_back(comp);
        for (std::uint32_t to : c.successors_of(comp))
            if (--indegree[to] == 0)
                ready.push(to);
    }
    return c;
}

} // namespace synckit
