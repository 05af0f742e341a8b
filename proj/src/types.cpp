/* types.cpp -- DFA validation and elementary word actions. */

#include "synckit/types.hpp"

#include <algorithm>
#include <numeric>

namespace synckit {

Transformation Transformation::identity(std::uint32_t n) {
    Transformation t;
    t.image.resize(n);
    std::iota(t.image.begin(), t.image.end(), State{0});
    return t;
}

Transformation Transformation::then(const Transformation& next) const {
    Transformation out;
    out.image.resize(image.size());
    for (std::size_t q = 0; q < image.size(); ++q)
        out.image[q] = next.image[image[q]];
    return out;
}

Dfa::Dfa(std::uint32_t num_states, std::uint32_t num_letters, std::vector<State> table)
    : n_(num_states), k_(num_letters), table_(std::move(table)) {
    if (n_ == 0)
        throw std::invalid_argument("automaton needs at least one state");
    if (k_ == 0)
        throw std::invalid_argument("automaton needs at least one letter");
    if (table_.size() != std::size_t(n_) * k_)
        throw std::invalid_argument("transition table has " + std::to_string(table_.size()) +
                                    " entries, expected " + std::to_string(std::size_t(n_) * k_));
    for (State t : table_)
        if (t >= n_)
            throw std::invalid_argument("transition target " + std::to_string(t) +
                                        " out of range [0, " + std::to_string(n_) + ")");
}

StateSet all_states(const Dfa& dfa) {
    StateSet s(dfa.num_states());
    std::iota(s.begin(), s.end(), State{0});
    return s;
}

State apply(const Dfa& dfa, State q, const Word& w) {
    for (Letter a : w)
        q = dfa.step(q, a);
    return q;
}

StateSet apply_set(const Dfa& dfa, const StateSet& set, const Word& w) {
    StateSet out = set;
    for (Letter a : w)
        for (State& q : out)
            q = dfa.step(q, a);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_synchronizing_word(const Dfa& dfa, const Word& w) {
    return apply_set(dfa, all_states(dfa), w).size() == 1;
}

Transformation transformation_of_word(const Dfa& dfa, const Word& w) {
    Transformation t = Transformation::identity(dfa.num_states());
    for (Letter a : w)
        for (State& q : t.image)
            q = dfa.step(q, a);
    return t;
}

} // namespace synckit
