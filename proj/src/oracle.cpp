/* oracle.cpp -- exact subset-space search for the shortest synchronizing word. */

#include "synckit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "synckit/pair_graph.hpp"

namespace synckit {

OracleResult shortest_sync_word(const Dfa& dfa, std::uint32_t max_states) {
    const std::uint32_t n = dfa.num_states();
    const std::uint32_t k = dfa.num_letters();
    if (n > max_states)
        throw ResourceLimitError(max_states, n,
                                 "subset search over 2^" + std::to_string(n) +
                                     " sets exceeds the cap of " + std::to_string(max_states) +
                                     " states");
    if (n > 31)
        throw ResourceLimitError(31, n, "subset search is limited to 31 states");
    if (n == 1)
        return {Word{}, 1, false};

    const std::uint32_t full = (1u << n) - 1;
    constexpr std::uint32_t unseen = 0xFFFFFFFFu;
    std::vector<std::uint32_t> parent(std::size_t(1) << n, unseen);
    std::vector<Letter> via(std::size_t(1) << n, 0);
    std::deque<std::uint32_t> queue;
    parent[full] = full;
    std::uint64_t explored = 1;
    queue.push_back(full);

    auto reconstruct = [&](std::uint32_t mask) {
        Word w;
        for (std::uint32_t m = mask; m != full; m = parent[m])
            w.push_back(via[m]);
        std::reverse(w.begin(), w.end());
        return w;
    };

    while (!queue.empty()) {
        std::uint32_t mask = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < k; ++a) {
            std::uint32_t next = 0;
            for (std::uint32_t m = mask; m;) {
                std::uint32_t q = std::countr_zero(m);
                m &= m - 1;
                next |= 1u << dfa.step(q, a);
            }
            if (parent[next] != unseen)
                continue;
            parent[next] = mask;
            via[next] = a;
            ++explored;
            if (std::has_single_bit(next))
                return {reconstruct(next), explored, false};
            queue.push_back(next);
        }
    }
    return {std::nullopt, explored, false};
}

bool is_synchronizable(const Dfa& dfa, Exec exec) {
    return has_pair_sink(dfa, kDefaultPairCap, exec);
}

bool verify_bound(const Dfa& dfa, const SyncCertificate& cert) {
    const std::uint64_t n = dfa.num_states();
    return is_synchronizing_word(dfa, cert.word) && cert.word.size() <= n * (n - 1) / 2;
}

} // namespace synckit
