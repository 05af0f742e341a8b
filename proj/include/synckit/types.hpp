/* types.hpp -- states, words, transformations, and the DFA itself. */

#ifndef SYNCKIT_TYPES_HPP_
#define SYNCKIT_TYPES_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace synckit {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// A word is a finite sequence of letter indices. The empty word acts as the
/// identity everywhere.
using Word = std::vector<Letter>;

/// Canonical state set: strictly increasing, no duplicates. All operations in
/// this library produce and expect this form.
using StateSet = std::vector<State>;

struct ParseError : std::runtime_error {
    ParseError(std::size_t line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    std::size_t line;
};

struct ResourceLimitError : std::runtime_error {
    ResourceLimitError(std::uint64_t limit_, std::uint64_t reached_, const std::string& msg)
        : std::runtime_error(msg), limit(limit_), reached(reached_) {}
    std::uint64_t limit;
    std::uint64_t reached; ///< count reached when the limit tripped
};

struct NotSynchronizableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a t-cycle shows up during synthesis; carries the cycle as a
/// witness (first state equals last).
struct NotAperiodicError : std::runtime_error {
    NotAperiodicError(std::vector<State> cycle_, const std::string& msg)
        : std::runtime_error(msg), cycle(std::move(cycle_)) {}
    std::vector<State> cycle;
};

/// Raised when a partition claimed to be a congruence is not: two states of
/// one block land in different blocks under some letter.
struct CongruenceError : std::runtime_error {
    CongruenceError(State p_, State q_, Letter letter_, const std::string& msg)
        : std::runtime_error(msg), p(p_), q(q_), letter(letter_) {}
    State p;
    State q;
    Letter letter;
};

/// An internal invariant failed; indicates a bug, not bad input.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Total map on the state set. Composition is associative; the identity fixes
/// every state.
struct Transformation {
    std::vector<State> image;

    static Transformation identity(std::uint32_t n);

    /// Applies this first, then `next` (left-to-right, like word concatenation).
    Transformation then(const Transformation& next) const;

    State operator()(State q) const { return image[q]; }
    std::uint32_t degree() const { return static_cast<std::uint32_t>(image.size()); }

    bool operator==(const Transformation&) const = default;
};

/**
 * Complete deterministic finite automaton: n states, k letters, and a total
 * transition table with k rows of n entries. States and letters are dense
 * 0-based indices; presentation names (a, b, c, ...) exist only at the CLI.
 *
 * Immutable after construction; safe to share across threads.
 */
class Dfa {
public:
    /// Validates the invariants: n >= 1, k >= 1, exactly k*n entries, every
    /// entry in [0, n). Throws std::invalid_argument otherwise.
    Dfa(std::uint32_t num_states, std::uint32_t num_letters, std::vector<State> table);

    std::uint32_t num_states() const { return n_; }
    std::uint32_t num_letters() const { return k_; }

    State step(State q, Letter a) const { return table_[std::size_t(a) * n_ + q]; }

    /// Transition row of one letter, indexed by source state.
    std::span<const State> row(Letter a) const {
        return {table_.data() + std::size_t(a) * n_, n_};
    }

    const std::vector<State>& table() const { return table_; }

    bool operator==(const Dfa&) const = default;

private:
    std::uint32_t n_;
    std::uint32_t k_;
    std::vector<State> table_; // letter-major: table_[a*n + q]
};

StateSet all_states(const Dfa& dfa);

/// State reached from q by reading w left to right.
State apply(const Dfa& dfa, State q, const Word& w);

/// Image set of a nonempty set of states; deduplicated and sorted.
/// Determinism forces |result| <= |set|.
StateSet apply_set(const Dfa& dfa, const StateSet& set, const Word& w);

/// True iff w maps the full state set to a single state.
bool is_synchronizing_word(const Dfa& dfa, const Word& w);

/// The action of w on the whole state set, reified as a map.
Transformation transformation_of_word(const Dfa& dfa, const Word& w);

} // namespace synckit

#endif // SYNCKIT_TYPES_HPP_
