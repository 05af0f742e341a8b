/* io.cpp -- dfa v1 reader/writer and word rendering. */

#include "synckit/io.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace synckit {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok)
        out.push_back(tok);
    return out;
}

std::uint64_t parse_uint(const std::string& tok, std::size_t line_no, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, std::string(what) + " must be a non-negative integer, got '" +
                                      tok + "'");
    return value;
}

} // namespace

Dfa parse_dfa(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (!tokenize(line).empty())
                return true;
        }
        return false;
    };

    if (!next_line())
        throw ParseError(1, "empty input, expected 'dfa v1'");
    if (tokenize(line) != std::vector<std::string>{"dfa", "v1"})
        throw ParseError(line_no, "expected header 'dfa v1', got '" + line + "'");

    if (!next_line())
        throw ParseError(line_no + 1, "expected 'states <n>'");
    auto toks = tokenize(line);
    if (toks.size() != 2 || toks[0] != "states")
        throw ParseError(line_no, "expected 'states <n>', got '" + line + "'");
    std::uint64_t n = parse_uint(toks[1], line_no, "state count");
    if (n == 0 || n > 0xFFFFFFFFull)
        throw ParseError(line_no, "state count must be in [1, 2^32), got " + toks[1]);

    if (!next_line())
        throw ParseError(line_no + 1, "expected 'letters <k>'");
    toks = tokenize(line);
    if (toks.size() != 2 || toks[0] != "letters")
        throw ParseError(line_no, "expected 'letters <k>', got '" + line + "'");
    std::uint64_t k = parse_uint(toks[1], line_no, "letter count");
    if (k == 0 || k > 0xFFFFFFFFull)
        throw ParseError(line_no, "letter count must be in [1, 2^32), got " + toks[1]);

    if (!next_line())
        throw ParseError(line_no + 1, "expected 'table'");
    if (tokenize(line) != std::vector<std::string>{"table"})
        throw ParseError(line_no, "expected 'table', got '" + line + "'");

    std::vector<State> table;
    table.reserve(n * k);
    for (std::uint64_t a = 0; a < k; ++a) {
        if (!next_line())
            throw ParseError(line_no + 1,
                             "expected transition row " + std::to_string(a) + " of " +
                                 std::to_string(k));
        toks = tokenize(line);
        if (toks.size() != n)
            throw ParseError(line_no, "row " + std::to_string(a) + " has " +
                                          std::to_string(toks.size()) + " entries, expected " +
                                          std::to_string(n));
        for (const std::string& tok : toks) {
            std::uint64_t target = parse_uint(tok, line_no, "transition target");
            if (target >= n)
                throw ParseError(line_no, "transition target " + tok + " out of range [0, " +
                                              std::to_string(n) + ")");
            table.push_back(static_cast<State>(target));
        }
    }
    if (next_line())
        throw ParseError(line_no, "unexpected content after the table: '" + line + "'");

    return Dfa(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k), std::move(table));
}

Dfa parse_dfa(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dfa(in);
}

std::string serialize_dfa(const Dfa& dfa) {
    std::string out = "dfa v1\nstates " + std::to_string(dfa.num_states()) + "\nletters " +
                      std::to_string(dfa.num_letters()) + "\ntable\n";
    for (Letter a = 0; a < dfa.num_letters(); ++a) {
        auto row = dfa.row(a);
        for (std::size_t q = 0; q < row.size(); ++q) {
            if (q)
                out += ' ';
            out += std::to_string(row[q]);
        }
        out += '\n';
    }
    return out;
}

std::string render_word(const Word& w, std::uint32_t num_letters) {
    std::string out;
    if (num_letters <= 26) {
        for (Letter a : w)
            out += static_cast<char>('a' + a);
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i)
                out += ' ';
            out += 'l' + std::to_string(w[i]);
        }
    }
    return out;
}

Word parse_word(std::string_view text, std::uint32_t num_letters) {
    if (text.empty() || text == "-")
        return {};
    Word w;
    if (num_letters <= 26) {
        for (char c : text) {
            if (c < 'a' || static_cast<std::uint32_t>(c - 'a') >= num_letters)
                throw std::invalid_argument("letter '" + std::string(1, c) +
                                            "' outside alphabet of size " +
                                            std::to_string(num_letters));
            w.push_back(static_cast<Letter>(c - 'a'));
        }
    } else {
        std::istringstream ss{std::string(text)};
        std::string tok;
        while (ss >> tok) {
            if (tok.size() < 2 || tok[0] != 'l')
                throw std::invalid_argument("expected token 'l<i>', got '" + tok + "'");
            std::uint64_t idx = 0;
            auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), idx);
            if (ec != std::errc{} || ptr != tok.data() + tok.size() || idx >= num_letters)
                throw std::invalid_argument("letter index in '" + tok +
                                            "' outside alphabet of size " +
                                            std::to_string(num_letters));
            w.push_back(static_cast<Letter>(idx));
        }
    }
    return w;
}

} // namespace synckit
