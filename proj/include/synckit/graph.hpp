/* graph.hpp -- flat labeled digraphs, SCC condensation, reachability. */

#ifndef SYNCKIT_GRAPH_HPP_
#define SYNCKIT_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "synckit/types.hpp"

namespace synckit {

/**
 * Digraph with a fixed number of out-edge slots per vertex, stored
 * vertex-major. A slot holding `no_edge` is skipped during traversal; this is
 * how filtered subgraphs (e.g. the non-collapsing part of a pair graph) are
 * represented without renumbering vertices.
 */
struct FlatGraph {
    static constexpr std::uint32_t no_edge = 0xFFFFFFFFu;

    std::uint32_t num_vertices = 0;
    std::uint32_t out_degree = 0;
    std::vector<std::uint32_t> targets; // targets[v*out_degree + slot]

    std::uint32_t target(std::uint32_t v, std::uint32_t slot) const {
        return targets[std::size_t(v) * out_degree + slot];
    }
};

/// The transition graph of a DFA viewed as a FlatGraph (slot = letter).
FlatGraph dfa_graph(const Dfa& dfa);

/**
 * SCC partition plus the condensation DAG. Component ids are deterministic:
 * components are numbered by their smallest contained vertex, ascending.
 * Members and successor lists are stored in CSR form.
 */
struct Condensation {
    std::uint32_t num_components = 0;
    std::vector<std::uint32_t> component_of;    // per vertex
    std::vector<std::uint32_t> members;         // vertices grouped by component, ascending
    std::vector<std::uint32_t> members_offset;  // size num_components + 1
    std::vector<std::uint32_t> succ;            // deduplicated DAG edges
    std::vector<std::uint32_t> succ_offset;     // size num_components + 1
    std::vector<std::uint32_t> topo_order;      // source components before targets;
                                                // smallest ready id first

    std::span<const std::uint32_t> members_of(std::uint32_t c) const {
        return {members.data() + members_offset[c], members_offset[c + 1] - members_offset[c]};
    }
    std::span<const std::uint32_t> successors_of(std::uint32_t c) const {
        return {succ.data() + succ_offset[c], succ_offset[c + 1] - succ_offset[c]};
    }
    /// A terminal component has no outgoing condensation edges.
    bool is_terminal(std::uint32_t c) const { return succ_offset[c] == succ_offset[c + 1]; }
    std::vector<std::uint32_t> terminal_components() const;
};

/// Iterative Tarjan; single-threaded so component ids are reproducible.
Condensation scc_condense(const FlatGraph& g);

} // namespace synckit

#endif // SYNCKIT_GRAPH_HPP_
