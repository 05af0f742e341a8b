/* synthesize.hpp -- constructive synchronizing-word synthesis with certificates. */

#ifndef SYNCKIT_SYNTHESIZE_HPP_
#define SYNCKIT_SYNTHESIZE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "synckit/exec.hpp"
#include "synckit/monoid.hpp"
#include "synckit/pair_graph.hpp"
#include "synckit/relation.hpp"
#include "synckit/types.hpp"

namespace synckit {

enum class BoundKind {
    class_collapse,     // (n - r + 1)(n - 1)/2, one class of size r collapsed
    strongly_connected, // n(n - 1)/2 on a strongly connected automaton
    general,            // n(n - 1)/2 via per-component escapes plus a sink word
    none,               // fallback word with no guaranteed bound
};

const char* to_string(BoundKind kind);

/// One labelled segment of a synthesized word, in application order.
struct SyncStage {
    std::string label; // e.g. "class@depth0", "escape@scc2", "sink/class@depth0"
    Word subword;
    std::string tag;   // "class-collapse" or "component-escape"
};

struct SyncCertificate {
    Word word;
    std::uint32_t num_states = 0;
    std::uint64_t bound = 0;      // claimed upper bound on |word| (0 when kind is none)
    BoundKind bound_kind = BoundKind::none;
    std::vector<SyncStage> stages;
    bool verified = false;        // word re-checked against the automaton
    bool bound_ok = false;        // |word| <= bound (meaningless when kind is none)
};

/// Record of one class-collapse round, for inspection in tests.
struct ClassRound {
    StateSet cls;          // the equivalence class being collapsed, current image
    StateSet max_states;   // maximal elements of the class under the order
    StateSet min_states;   // minimal elements
    bool reversed;         // order was flipped because |Max| < |Min|
    Word step;             // word applied this round
};

struct ClassTrace {
    std::vector<ClassRound> rounds;
};

/// Collapse one class of a stable order to a single state. The order must be
/// a stable partial order on the automaton's states; the class must be
/// nonempty. Appends per-round details to trace when given.
Word synchronize_class(const Dfa& dfa, const StateRelation& order,
                       const StateSet& cls, ClassTrace* trace = nullptr);

/// Synchronizing word of length at most n(n-1)/2 for a strongly connected
/// automaton, by collapsing a congruence class and recursing on the quotient.
/// Throws NotAperiodicError when a t-cycle blocks the order construction,
/// NotSynchronizableError when the pair graph has no sink.
SyncCertificate synchronize_strongly_connected(const Dfa& dfa,
                                               std::uint64_t pair_cap = kDefaultPairCap,
                                               Exec exec = Exec::parallel);

/// Word that drives every state of `component` out of it. The component must
/// be the member set of a non-terminal strongly connected component. Greedy:
/// repeatedly move the state with the shortest escape route, shortest-word
/// tie broken toward the smallest state and the lexicographically least word.
Word escape_word(const Dfa& dfa, const StateSet& component);

/// Full pipeline for a (not necessarily strongly connected) automaton:
/// escape every non-sink component in topological order, then synchronize
/// the sink component, with the same n(n-1)/2 total bound.
SyncCertificate synchronize_aperiodic(const Dfa& dfa,
                                      std::uint64_t pair_cap = kDefaultPairCap,
                                      Exec exec = Exec::parallel);

/// Fallback for automata outside the aperiodic path: repeatedly merge the
/// current image's first mergeable pair via shortest pair words. No length
/// bound is claimed.
Word greedy_merge_word(const Dfa& dfa, std::uint64_t pair_cap = kDefaultPairCap,
                       Exec exec = Exec::parallel);

SyncCertificate greedy_certificate(const Dfa& dfa,
                                   std::uint64_t pair_cap = kDefaultPairCap,
                                   Exec exec = Exec::parallel);

struct CertifyReport {
    bool synchronizes = false;
    std::uint64_t length = 0;
    std::uint64_t bound = 0;
    BoundKind bound_kind = BoundKind::none;
    std::optional<bool> bound_ok;       // empty when no bound is claimed
    bool stages_concatenate = false;    // stage subwords concatenate to the word
};

/// Re-validate a certificate against the automaton it was issued for.
CertifyReport certify(const Dfa& dfa, const SyncCertificate& cert);

std::string serialize_certificate(const SyncCertificate& cert, std::uint32_t num_letters);
std::string serialize_report(const CertifyReport& report);

} // namespace synckit

#endif // SYNCKIT_SYNTHESIZE_HPP_
