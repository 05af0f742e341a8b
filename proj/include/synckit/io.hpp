/* io.hpp -- automaton file format and word rendering. */

#ifndef SYNCKIT_IO_HPP_
#define SYNCKIT_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "synckit/types.hpp"

namespace synckit {

/**
 * Parses the `dfa v1` text format:
 *
 *     dfa v1
 *     states <n>
 *     letters <k>
 *     table
 *     <n space-separated targets for letter 0>
 *     ...
 *     <n space-separated targets for letter k-1>
 *
 * Whitespace between tokens is flexible; everything else is exact. Errors
 * (malformed header, out-of-range entry, wrong row or column count) raise
 * ParseError with the offending line number.
 */
Dfa parse_dfa(std::istream& in);
Dfa parse_dfa(std::string_view text);

/// Canonical form: single-space separation, LF newlines, trailing newline.
/// parse_dfa(serialize_dfa(d)) == d, and serializing a parse canonicalizes.
std::string serialize_dfa(const Dfa& dfa);

/// Words print as a..z when the alphabet has at most 26 letters, otherwise as
/// space-separated `l<i>` tokens. The empty word renders as "".
std::string render_word(const Word& w, std::uint32_t num_letters);

/// Inverse of render_word for the given alphabet size; additionally accepts
/// "-" and "" for the empty word. Throws std::invalid_argument on bad input.
Word parse_word(std::string_view text, std::uint32_t num_letters);

} // namespace synckit

#endif // SYNCKIT_IO_HPP_
