/* kernels.hpp -- data-parallel inner loops, each with a serial reference.
 *
 * Every kernel comes in a `_serial` and a `_parallel` flavor producing
 * bit-identical output; the unsuffixed entry point dispatches on Exec. The
 * serial flavors are the reference implementations the tests compare against,
 * and tools/kernel_bench times the two side by side.
 */

#ifndef SYNCKIT_KERNELS_HPP_
#define SYNCKIT_KERNELS_HPP_

#include <cstdint>
#include <vector>

#include "synckit/exec.hpp"
#include "synckit/types.hpp"

namespace synckit::kernels {

/// Transition table of the pair graph, vertex-major: entry for vertex p*n+q
/// and slot a is (pa)*n + (qa). Size k * n^2.
std::vector<std::uint32_t> pair_targets_serial(const Dfa& dfa);
std::vector<std::uint32_t> pair_targets_parallel(const Dfa& dfa);
std::vector<std::uint32_t> pair_targets(const Dfa& dfa, Exec exec);

/// Same table restricted to the off-diagonal subgraph with collapsing edges
/// removed: diagonal vertices keep no out-edges, and an edge whose target
/// lies on the diagonal becomes FlatGraph::no_edge.
std::vector<std::uint32_t> pair_targets_noncollapsing_serial(const Dfa& dfa);
std::vector<std::uint32_t> pair_targets_noncollapsing_parallel(const Dfa& dfa);
std::vector<std::uint32_t> pair_targets_noncollapsing(const Dfa& dfa, Exec exec);

/// In-place transitive closure of an n x n bit matrix stored as rows of
/// `words_per_row` 64-bit words (row-parallel Warshall sweep).
void transitive_closure_serial(std::uint64_t* rows, std::uint32_t n, std::uint32_t words_per_row);
void transitive_closure_parallel(std::uint64_t* rows, std::uint32_t n, std::uint32_t words_per_row);
void transitive_closure(std::uint64_t* rows, std::uint32_t n, std::uint32_t words_per_row, Exec exec);

/// Closure of the letter transformations under composition, in canonical
/// breadth-first order (shorter witness words first, letters ascending within
/// a level). parent/via give one shortest generating word per element;
/// parent == no_parent marks the single-letter elements.
struct Closure {
    static constexpr std::uint32_t no_parent = 0xFFFFFFFFu;
    std::vector<Transformation> elements;
    std::vector<std::uint32_t> parent;
    std::vector<Letter> via;
};

/// Throws ResourceLimitError once more than `cap` elements are found.
/// The parallel flavor runs level-synchronously: frontier products are
/// composed concurrently, then merged in canonical order, so the element
/// numbering matches the serial flavor exactly.
Closure monoid_closure_serial(const Dfa& dfa, std::uint64_t cap);
Closure monoid_closure_parallel(const Dfa& dfa, std::uint64_t cap);
Closure monoid_closure(const Dfa& dfa, std::uint64_t cap, Exec exec);

} // namespace synckit::kernels

#endif // SYNCKIT_KERNELS_HPP_
