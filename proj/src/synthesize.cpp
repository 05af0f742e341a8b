/* synthesize.cpp -- class collapse, quotient recursion, escapes, certificates. */

#include "synckit/synthesize.hpp"

#include <algorithm>
#include <deque>

#include "synckit/graph.hpp"
#include "synckit/io.hpp"

namespace synckit {

namespace {

/// Lexicographically least shortest word from `from` into the target set;
/// breadth-first with letters ascending, so the first hit is canonical.
std::optional<Word> bfs_word_to(const Dfa& dfa, State from, const std::vector<char>& target) {
    if (target[from])
        return Word{};
    const std::uint32_t n = dfa.num_states();
    const std::uint32_t k = dfa.num_letters();
    constexpr State unseen = 0xFFFFFFFFu;
    std::vector<State> parent(n, unseen);
    std::vector<Letter> via(n, 0);
    std::deque<State> queue;
    parent[from] = from;
    queue.push_back(from);
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < k; ++a) {
            State w = dfa.step(q, a);
            if (parent[w] != unseen)
                continue;
            parent[w] = q;
            via[w] = a;
            if (target[w]) {
                Word word;
                for (State u = w; u != from; u = parent[u])
                    word.push_back(via[u]);
                std::reverse(word.begin(), word.end());
                return word;
            }
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

/// States of s with nothing strictly above them under ord.
StateSet maximal_of(const StateRelation& ord, const StateSet& s) {
    StateSet out;
    for (State q : s) {
        bool top = true;
        for (State x : s)
            if (x != q && ord.contains(x, q)) {
                top = false;
                break;
            }
        if (top)
            out.push_back(q);
    }
    return out;
}

/// States of s with nothing strictly below them under ord.
StateSet minimal_of(const StateRelation& ord, const StateSet& s) {
    StateSet out;
    for (State q : s) {
        bool bottom = true;
        for (State x : s)
            if (x != q && ord.contains(q, x)) {
                bottom = false;
                break;
            }
        if (bottom)
            out.push_back(q);
    }
    return out;
}

bool sorted_disjoint(const StateSet& a, const StateSet& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else
            return false;
    }
    return true;
}

/// Block of the order's equivalence closure containing `seed`: connectivity
/// under the symmetrized comparability relation.
StateSet comparability_block(const StateRelation& ord, State seed) {
    const std::uint32_t n = ord.degree();
    std::vector<char> in_block(n, 0);
    std::vector<State> stack{seed};
    in_block[seed] = 1;
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State x = 0; x < n; ++x)
            if (!in_block[x] && (ord.contains(q, x) || ord.contains(x, q))) {
                in_block[x] = 1;
                stack.push_back(x);
            }
    }
    StateSet out;
    for (State q = 0; q < n; ++q)
        if (in_block[q])
            out.push_back(q);
    return out;
}

void validate_state_set(const StateSet& s, std::uint32_t n, const char* what) {
    if (s.empty())
        throw std::invalid_argument(std::string(what) + " is empty");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= n)
            throw std::invalid_argument(std::string(what) + " contains out-of-range state " +
                                        std::to_string(s[i]));
        if (i && s[i] <= s[i - 1])
            throw std::invalid_argument(std::string(what) + " is not strictly ascending");
    }
}

bool strongly_connected(const Dfa& dfa) {
    return scc_condense(dfa_graph(dfa)).num_components == 1;
}

} // namespace

const char* to_string(BoundKind kind) {
    switch (kind) {
    case BoundKind::class_collapse: return "class";
    case BoundKind::strongly_connected: return "strongly_connected";
    case BoundKind::general: return "general";
    case BoundKind::none: return "none";
    }
    return "none";
}

Word synchronize_class(const Dfa& dfa, const StateRelation& order, const StateSet& cls,
                       ClassTrace* trace) {
    const std::uint32_t n = dfa.num_states();
    if (order.degree() != n)
        throw std::invalid_argument("order is over " + std::to_string(order.degree()) +
                                    " states, automaton has " + std::to_string(n));
    if (!order.is_reflexive() || !order.is_transitive() || !order.is_antisymmetric())
        throw std::invalid_argument("relation is not a reflexive antisymmetric partial order");
    if (StabilityResult st = check_stability(dfa, order); !st.stable) {
        const auto& c = *st.counterexample;
        throw std::invalid_argument("order is not stable: (" + std::to_string(c.p) + "," +
                                    std::to_string(c.q) + ") breaks under letter " +
                                    std::to_string(c.letter));
    }
    validate_state_set(cls, n, "class");
    if (comparability_block(order, cls[0]) != cls)
        throw std::invalid_argument("class is not a block of the order's equivalence closure");
    if (!strongly_connected(dfa))
        throw std::invalid_argument("transition graph is not strongly connected");
    if (cls.size() == 1)
        return {};

    // The construction is self-dual; run it with the larger side on top.
    StateSet max0 = maximal_of(order, cls);
    StateSet min0 = minimal_of(order, cls);
    const bool reversed = max0.size() < min0.size();
    const StateRelation eff = reversed ? order.transposed() : order;
    if (reversed)
        std::swap(max0, min0);

    std::vector<char> target(n, 0); // the class's maxima, fixed for the run
    for (State q : max0)
        target[q] = 1;

    const std::size_t round_limit = min0.size();
    std::size_t rounds = 0;
    StateSet image = cls;
    Word out;
    while (image.size() > 1) {
        StateSet mx = maximal_of(eff, image);
        StateSet mn = minimal_of(eff, image);
        if (!sorted_disjoint(mx, mn))
            throw InvariantError("maxima and minima of the class image intersect");
        if (++rounds > round_limit)
            throw InvariantError("class collapse exceeded its round budget");

        State q = mn[0];
        std::optional<Word> s = bfs_word_to(dfa, q, target);
        if (!s || s->empty())
            throw InvariantError("no nonempty path from a minimal state to the class maxima");
        if (s->size() > n - 1)
            throw InvariantError("round word longer than n-1");
        if (trace)
            trace->rounds.push_back({image, mx, mn, reversed, *s});

        StateSet next_image = apply_set(dfa, image, *s);
        if (next_image.size() > 1) {
            StateSet next_min = minimal_of(eff, next_image);
            StateSet mn_image = apply_set(dfa, mn, *s);
            if (!std::includes(mn_image.begin(), mn_image.end(), next_min.begin(),
                               next_min.end()))
                throw InvariantError("new minima are not images of the old minima");
            if (next_min.size() >= mn.size())
                throw InvariantError("minima did not shrink; the collapse cannot terminate");
        }
        out.insert(out.end(), s->begin(), s->end());
        image = std::move(next_image);
    }
    return out;
}

namespace {

/// Greedy single-letter deletions while the word keeps synchronizing. Only
/// reached if a bound check failed, which the construction rules out; kept
/// as a safety net so an emitted certificate never overstates its bound.
Word trim_word(const Dfa& dfa, Word word) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < word.size(); ++i) {
            Word shorter = word;
            shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(i));
            if (is_synchronizing_word(dfa, shorter)) {
                word = std::move(shorter);
                changed = true;
                break;
            }
        }
    }
    return word;
}

SyncCertificate make_certificate(const Dfa& dfa, Word word, std::vector<SyncStage> stages,
                                 std::uint64_t bound, BoundKind kind) {
    if (kind != BoundKind::none && word.size() > bound) {
        word = trim_word(dfa, word);
        stages = {{"trimmed", word, "trimmed"}};
    }
    SyncCertificate cert;
    cert.word = std::move(word);
    cert.num_states = dfa.num_states();
    cert.bound = bound;
    cert.bound_kind = kind;
    cert.stages = std::move(stages);
    cert.verified = is_synchronizing_word(dfa, cert.word);
    if (!cert.verified)
        throw InvariantError("synthesized word does not synchronize the automaton");
    cert.bound_ok = kind != BoundKind::none && cert.word.size() <= cert.bound;
    return cert;
}

std::pair<Word, std::vector<SyncStage>> collapse_recursive(const Dfa& dfa, std::uint32_t depth,
                                                           std::uint64_t pair_cap, Exec exec) {
    if (dfa.num_states() == 1)
        return {{}, {}};

    std::optional<AlmostMinimalScc> m = find_almost_minimal_scc(dfa, pair_cap, exec);
    if (!m)
        throw InvariantError("no almost minimal component despite n >= 2");
    if (std::optional<TCycle> tc = detect_t_cycle(dfa, *m))
        throw NotAperiodicError(tc->states, "t-cycle found at quotient depth " +
                                                std::to_string(depth) +
                                                "; the automaton is not aperiodic");
    OrderResult ord = order_from_scc(dfa, *m, exec);
    if (!ord.antisymmetric)
        throw InvariantError("order not antisymmetric although no t-cycle was found");

    Partition part = congruence_from_scc(dfa, *m);
    if (part.num_blocks() >= dfa.num_states())
        throw InvariantError("congruence failed to merge any states");
    QuotientResult q = quotient(dfa, part);

    auto [u, stages] = collapse_recursive(q.dfa, depth + 1, pair_cap, exec);
    StateSet quotient_image = apply_set(q.dfa, all_states(q.dfa), u);
    if (quotient_image.size() != 1)
        throw InvariantError("quotient word does not synchronize the quotient");

    const StateSet& cls = part.blocks[quotient_image[0]];
    Word v = synchronize_class(dfa, ord.order, cls);
    if (!v.empty())
        stages.push_back({"class@depth" + std::to_string(depth), v, "class-collapse"});

    Word word = std::move(u);
    word.insert(word.end(), v.begin(), v.end());
    return {std::move(word), std::move(stages)};
}

} // namespace

SyncCertificate synchronize_strongly_connected(const Dfa& dfa, std::uint64_t pair_cap,
                                               Exec exec) {
    const std::uint32_t n = dfa.num_states();
    if (!strongly_connected(dfa))
        throw std::invalid_argument("transition graph is not strongly connected");
    if (!has_pair_sink(dfa, pair_cap, exec))
        throw NotSynchronizableError("some pair of states can never be merged");
    auto [word, stages] = collapse_recursive(dfa, 0, pair_cap, exec);
    const std::uint64_t bound = std::uint64_t(n) * (n - 1) / 2;
    return make_certificate(dfa, std::move(word), std::move(stages), bound,
                            BoundKind::strongly_connected);
}

Word escape_word(const Dfa& dfa, const StateSet& component) {
    const std::uint32_t n = dfa.num_states();
    validate_state_set(component, n, "component");

    Condensation cond = scc_condense(dfa_graph(dfa));
    const std::uint32_t comp = cond.component_of[component[0]];
    auto members = cond.members_of(comp);
    if (!std::equal(members.begin(), members.end(), component.begin(), component.end()))
        throw std::invalid_argument("state set is not a strongly connected component");
    if (cond.is_terminal(comp))
        throw std::invalid_argument("terminal component has no escape");

    std::vector<char> outside(n, 1);
    for (State q : component)
        outside[q] = 0;

    const std::size_t r = component.size();
    StateSet tracked = component;
    Word out;
    while (!tracked.empty()) {
        // Shortest escape among the tracked states; ties fall to the
        // smallest state, whose breadth-first word is lexicographically least.
        std::optional<Word> best;
        for (State q : tracked) {
            std::optional<Word> w = bfs_word_to(dfa, q, outside);
            if (!w)
                throw InvariantError("tracked state cannot leave a non-terminal component");
            if (!best || w->size() < best->size())
                best = std::move(w);
        }
        if (best->size() > r - tracked.size() + 1)
            throw InvariantError("escape step exceeds its length budget");

        StateSet next;
        for (State q : tracked) {
            State t = apply(dfa, q, *best);
            if (!outside[t])
                next.push_back(t);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.size() >= tracked.size())
            throw InvariantError("escape step did not remove any state");

        out.insert(out.end(), best->begin(), best->end());
        tracked = std::move(next);
    }
    return out;
}

SyncCertificate synchronize_aperiodic(const Dfa& dfa, std::uint64_t pair_cap, Exec exec) {
    const std::uint32_t n = dfa.num_states();
    Condensation cond = scc_condense(dfa_graph(dfa));
    std::vector<std::uint32_t> terminals = cond.terminal_components();
    if (terminals.size() != 1)
        throw NotSynchronizableError("states drain into " + std::to_string(terminals.size()) +
                                     " separate terminal components");
    if (cond.num_components == 1)
        return synchronize_strongly_connected(dfa, pair_cap, exec);
    if (!has_pair_sink(dfa, pair_cap, exec))
        throw NotSynchronizableError("some pair of states can never be merged");

    const std::uint32_t sink = terminals[0];
    Word word;
    std::vector<SyncStage> stages;
    StateSet image = all_states(dfa);

    for (std::uint32_t comp : cond.topo_order) {
        if (comp == sink)
            continue;
        auto members = cond.members_of(comp);
        StateSet component(members.begin(), members.end());
        if (sorted_disjoint(image, component))
            continue;
        Word s = escape_word(dfa, component);
        word.insert(word.end(), s.begin(), s.end());
        image = apply_set(dfa, image, s);
        if (!sorted_disjoint(image, component))
            throw InvariantError("image re-entered a component it escaped");
        stages.push_back({"escape@scc" + std::to_string(comp), std::move(s), "component-escape"});
    }
    for (State q : image)
        if (cond.component_of[q] != sink)
            throw InvariantError("image not confined to the sink component after escapes");

    // Sub-automaton induced on the sink component (closed under all letters).
    auto sink_members = cond.members_of(sink);
    StateSet sink_states(sink_members.begin(), sink_members.end());
    std::vector<State> local(n, 0);
    for (std::uint32_t i = 0; i < sink_states.size(); ++i)
        local[sink_states[i]] = i;
    const std::uint32_t r = static_cast<std::uint32_t>(sink_states.size());
    std::vector<State> table(std::size_t(r) * dfa.num_letters());
    for (Letter a = 0; a < dfa.num_letters(); ++a)
        for (std::uint32_t i = 0; i < r; ++i) {
            State t = dfa.step(sink_states[i], a);
            if (cond.component_of[t] != sink)
                throw InvariantError("sink component is not closed under the letters");
            table[std::size_t(a) * r + i] = local[t];
        }
    Dfa sub(r, dfa.num_letters(), std::move(table));

    SyncCertificate sink_cert;
    try {
        sink_cert = synchronize_strongly_connected(sub, pair_cap, exec);
    } catch (const NotAperiodicError& e) {
        std::vector<State> cycle;
        cycle.reserve(e.cycle.size());
        for (State q : e.cycle)
            cycle.push_back(sink_states[q]);
        throw NotAperiodicError(std::move(cycle), e.what());
    }
    word.insert(word.end(), sink_cert.word.begin(), sink_cert.word.end());
    for (SyncStage& st : sink_cert.stages)
        stages.push_back({"sink/" + st.label, std::move(st.subword), std::move(st.tag)});

    const std::uint64_t bound = std::uint64_t(n) * (n - 1) / 2;
    return make_certificate(dfa, std::move(word), std::move(stages), bound, BoundKind::general);
}

namespace {

std::vector<Word> greedy_merge_stages(const Dfa& dfa, std::uint64_t pair_cap) {
    const std::uint64_t vertices = std::uint64_t(dfa.num_states()) * dfa.num_states();
    if (vertices > pair_cap)
        throw ResourceLimitError(pair_cap, vertices,
                                 "pair search needs " + std::to_string(vertices) +
                                     " vertices, cap is " + std::to_string(pair_cap));
    StateSet image = all_states(dfa);
    std::vector<Word> steps;
    while (image.size() > 1) {
        bool merged = false;
        for (std::size_t i = 0; i < image.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < image.size() && !merged; ++j)
                if (std::optional<Word> w = merge_word(dfa, image[i], image[j])) {
                    image = apply_set(dfa, image, *w);
                    steps.push_back(std::move(*w));
                    merged = true;
                }
        if (!merged)
            throw NotSynchronizableError("no pair of the remaining image can be merged");
    }
    return steps;
}

} // namespace

Word greedy_merge_word(const Dfa& dfa, std::uint64_t pair_cap, Exec) {
    Word out;
    for (const Word& s : greedy_merge_stages(dfa, pair_cap))
        out.insert(out.end(), s.begin(), s.end());
    return out;
}

SyncCertificate greedy_certificate(const Dfa& dfa, std::uint64_t pair_cap, Exec) {
    std::vector<Word> steps = greedy_merge_stages(dfa, pair_cap);
    Word word;
    std::vector<SyncStage> stages;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        word.insert(word.end(), steps[i].begin(), steps[i].end());
        stages.push_back({"merge@step" + std::to_string(i), std::move(steps[i]), "pair-merge"});
    }
    return make_certificate(dfa, std::move(word), std::move(stages), 0, BoundKind::none);
}

CertifyReport certify(const Dfa& dfa, const SyncCertificate& cert) {
    CertifyReport report;
    report.synchronizes = is_synchronizing_word(dfa, cert.word);
    report.length = cert.word.size();
    report.bound = cert.bound;
    report.bound_kind = cert.bound_kind;
    if (cert.bound_kind != BoundKind::none)
        report.bound_ok = cert.word.size() <= cert.bound;
    Word joined;
    for (const SyncStage& st : cert.stages)
        joined.insert(joined.end(), st.subword.begin(), st.subword.end());
    report.stages_concatenate = joined == cert.word;
    return report;
}

namespace {

std::string word_field(const Word& w, std::uint32_t num_letters) {
    return w.empty() ? "-" : render_word(w, num_letters);
}

} // namespace

std::string serialize_certificate(const SyncCertificate& cert, std::uint32_t num_letters) {
    std::string out;
    out += "word " + word_field(cert.word, num_letters) + "\n";
    out += "length " + std::to_string(cert.word.size()) + "\n";
    out += "states " + std::to_string(cert.num_states) + "\n";
    out += "bound_kind " + std::string(to_string(cert.bound_kind)) + "\n";
    if (cert.bound_kind != BoundKind::none) {
        out += "bound " + std::to_string(cert.bound) + "\n";
        out += std::string("bound_ok ") + (cert.bound_ok ? "true" : "false") + "\n";
    }
    out += std::string("verified ") + (cert.verified ? "true" : "false") + "\n";
    out += "stages " + std::to_string(cert.stages.size()) + "\n";
    for (const SyncStage& st : cert.stages)
        out += "stage " + st.label + " " + st.tag + " " + word_field(st.subword, num_letters) +
               "\n";
    return out;
}

std::string serialize_report(const CertifyReport& report) {
    std::string out;
    out += std::string("synchronizes ") + (report.synchronizes ? "true" : "false") + "\n";
    out += "length " + std::to_string(report.length) + "\n";
    out += "bound_kind " + std::string(to_string(report.bound_kind)) + "\n";
    if (report.bound_ok) {
        out += "bound " + std::to_string(report.bound) + "\n";
        out += std::string("bound_ok ") + (*report.bound_ok ? "true" : "false") + "\n";
    } else {
        out += "bound_check skipped\n";
    }
    out += std::string("stages_concatenate ") + (report.stages_concatenate ? "true" : "false") +
           "\n";
    return out;
}

} // namespace synckit
