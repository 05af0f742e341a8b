/* kernels.cpp -- serial reference kernels and their OpenMP twins. */

#include "synckit/kernels.hpp"

#include <cstring>
#include <unordered_map>

#include "synckit/graph.hpp"

namespace synckit::kernels {

namespace {

// Below these sizes the OpenMP flavors fall back to the reference loop; the
// fork/join overhead dwarfs the work.
constexpr std::size_t kPairParallelCutoff = 1u << 14;
constexpr std::uint32_t kClosureParallelCutoff = 64;
constexpr std::uint32_t kMatrixParallelCutoff = 256;

bool use_parallel(Exec exec, bool big_enough) {
#ifdef _OPENMP
    return exec == Exec::parallel && big_enough && max_threads() > 1;
#else
    (void)exec;
    (void)big_enough;
    return false;
#endif
}

} // namespace

std::vector<std::uint32_t> pair_targets_serial(const Dfa& dfa) {
    const std::uint32_t n = dfa.num_states();
    const std::uint32_t k = dfa.num_letters();
    std::vector<std::uint32_t> targets(std::size_t(n) * n * k);
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q) {
            const std::size_t base = (std::size_t(p) * n + q) * k;
            for (Letter a = 0; a < k; ++a)
                targets[base + a] = dfa.step(p, a) * n + dfa.step(q, a);
        }
    return targets;
}

std::vector<std::uint32_t> pair_targets_parallel(const Dfa& dfa) {
    const std::uint32_t n = dfa.num_states();
    const std::uint32_t k = dfa.num_letters();
    std::vector<std::uint32_t> targets(std::size_t(n) * n * k);
#pragma omp parallel for schedule(static)
    for (std::int64_t p = 0; p < std::int64_t(n); ++p)
        for (State q = 0; q < n; ++q) {
            const std::size_t base = (std::size_t(p) * n + q) * k;
            for (Letter a = 0; a < k; ++a)
                targets[base + a] = dfa.step(State(p), a) * n + dfa.step(q, a);
        }
    return targets;
}

std::vector<std::uint32_t> pair_targets(const Dfa& dfa, Exec exec) {
    const std::size_t work = std::size_t(dfa.num_states()) * dfa.num_states() * dfa.num_letters();
    return use_parallel(exec, work >= kPairParallelCutoff) ? pair_targets_parallel(dfa)
                                                           : pair_targets_serial(dfa);
}

std::vector<std::uint32_t> pair_targets_noncollapsing_serial(const Dfa& dfa) {
    const std::uint32_t n = dfa.num_states();
    const std::uint32_t k = dfa.num_letters();
    std::vector<std::uint32_t> targets(std::size_t(n) * n * k, FlatGraph::no_edge);
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q) {
            if (p == q)
                continue;
            const std::size_t base = (std::size_t(p) * n + q) * k;
            for (Letter a = 0; a < k; ++a) {
                State pa = dfa.step(p, a);
                State qa = dfa.step(q, a);
                if (pa != qa)
                    targets[base + a] = pa * n + qa;
            }
        }
    return targets;
}

std::vector<std::uint32_t> pair_targets_noncollapsing_parallel(const Dfa& dfa) {
    const std::uint32_t n = dfa.num_states();
    const std::uint32_t k = dfa.num_letters();
    std::vector<std::uint32_t> targets(std::size_t(n) * n * k, FlatGraph::no_edge);
#pragma omp parallel for schedule(static)
    for (std::int64_t p = 0; p < std::int64_t(n); ++p)
        for (State q = 0; q < n; ++q) {
            if (State(p) == q)
                continue;
            const std::size_t base = (std::size_t(p) * n + q) * k;
            for (Letter a = 0; a < k; ++a) {
                State pa = dfa.step(State(p), a);
                State qa = dfa.step(q, a);
                if (pa != qa)
                    targets[base + a] = pa * n + qa;
            }
        }
    return targets;
}

std::vector<std::uint32_t> pair_targets_noncollapsing(const Dfa& dfa, Exec exec) {
    const std::size_t work = std::size_t(dfa.num_states()) * dfa.num_states() * dfa.num_letters();
    return use_parallel(exec, work >= kPairParallelCutoff)
               ? pair_targets_noncollapsing_parallel(dfa)
               : pair_targets_noncollapsing_serial(dfa);
}

void transitive_closure_serial(std::uint64_t* rows, std::uint32_t n,
                               std::uint32_t words_per_row) {
    for (std::uint32_t kk = 0; kk < n; ++kk) {
        const std::uint64_t* pivot = rows + std::size_t(kk) * words_per_row;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (i == kk)
                continue;
            std::uint64_t* row = rows + std::size_t(i) * words_per_row;
            if ((row[kk >> 6] >> (kk & 63u)) & 1u)
                for (std::uint32_t w = 0; w < words_per_row; ++w)
                    row[w] |= pivot[w];
        }
    }
}

void transitive_closure_parallel(std::uint64_t* rows, std::uint32_t n,
                                 std::uint32_t words_per_row) {
    for (std::uint32_t kk = 0; kk < n; ++kk) {
        const std::uint64_t* pivot = rows + std::size_t(kk) * words_per_row;
        // Row kk is excluded, so every updated row only reads the pivot row
        // and writes itself; iterations are independent.
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < std::int64_t(n); ++i) {
            if (std::uint32_t(i) == kk)
                continue;
            std::uint64_t* row = rows + std::size_t(i) * words_per_row;
            if ((row[kk >> 6] >> (kk & 63u)) & 1u)
                for (std::uint32_t w = 0; w < words_per_row; ++w)
                    row[w] |= pivot[w];
        }
    }
}

void transitive_closure(std::uint64_t* rows, std::uint32_t n, std::uint32_t words_per_row,
                        Exec exec) {
    if (use_parallel(exec, n >= kMatrixParallelCutoff))
        transitive_closure_parallel(rows, n, words_per_row);
    else
        transitive_closure_serial(rows, n, words_per_row);
}

namespace {

/// Dedup index over transformations. Images pack into one 64-bit key when
/// every state fits in 4 bits; larger degrees hash the raw image bytes.
class TransformationIndex {
public:
    explicit TransformationIndex(std::uint32_t n) : packed_(n <= 16) {}

    // Returns the existing index or 0xFFFFFFFF, inserting when absent.
    std::uint32_t find_or_insert(const Transformation& t, std::uint32_t next_index) {
        if (packed_) {
            std::uint64_t key = 0;
            for (std::size_t q = 0; q < t.image.size(); ++q)
                key |= std::uint64_t(t.image[q]) << (4 * q);
            auto [it, inserted] = by_key_.try_emplace(key, next_index);
            return inserted ? not_found : it->second;
        }
        auto [it, inserted] = by_image_.try_emplace(t.image, next_index);
        return inserted ? not_found : it->second;
    }

    static constexpr std::uint32_t not_found = 0xFFFFFFFFu;

private:
    struct ImageHash {
        std::size_t operator()(const std::vector<State>& image) const {
            std::uint64_t h = 1469598103934665603ull; // FNV-1a
            for (State q : image) {
                h ^= q;
                h *= 1099511628211ull;
            }
            return static_cast<std::size_t>(h);
        }
    };

    bool packed_;
    std::unordered_map<std::uint64_t, std::uint32_t> by_key_;
    std::unordered_map<std::vector<State>, std::uint32_t, ImageHash> by_image_;
};

std::vector<Transformation> letter_transformations(const Dfa& dfa) {
    std::vector<Transformation> gens;
    gens.reserve(dfa.num_letters());
    for (Letter a = 0; a < dfa.num_letters(); ++a) {
        auto row = dfa.row(a);
        gens.push_back({std::vector<State>(row.begin(), row.end())});
    }
    return gens;
}

[[noreturn]] void throw_closure_cap(std::uint64_t cap, std::uint64_t reached) {
    throw ResourceLimitError(cap, reached,
                             "transition monoid grew past the cap of " + std::to_string(cap) +
                                 " elements");
}

Closure monoid_closure_impl(const Dfa& dfa, std::uint64_t cap, bool parallel) {
    const std::uint32_t k = dfa.num_letters();
    const auto gens = letter_transformations(dfa);

    Closure c;
    TransformationIndex seen(dfa.num_states());

    auto admit = [&](const Transformation& t, std::uint32_t parent, Letter via) -> bool {
        std::uint32_t idx = seen.find_or_insert(t, static_cast<std::uint32_t>(c.elements.size()));
        if (idx != TransformationIndex::not_found)
            return false;
        if (c.elements.size() + 1 > cap)
            throw_closure_cap(cap, c.elements.size() + 1);
        c.elements.push_back(t);
        c.parent.push_back(parent);
        c.via.push_back(via);
        return true;
    };

    for (Letter a = 0; a < k; ++a)
        admit(gens[a], Closure::no_parent, a);

    std::size_t level_begin = 0;
    while (level_begin < c.elements.size()) {
        const std::size_t level_end = c.elements.size();
        if (parallel) {
            // Compose the whole frontier against every generator up front,
            // then admit in the same (element, letter) order as the serial
            // loop; the numbering comes out identical.
            const std::size_t frontier = level_end - level_begin;
            std::vector<Transformation> products(frontier * k);
#pragma omp parallel for schedule(static)
            for (std::int64_t i = 0; i < std::int64_t(frontier); ++i)
                for (Letter a = 0; a < k; ++a)
                    products[std::size_t(i) * k + a] =
                        c.elements[level_begin + std::size_t(i)].then(gens[a]);
            for (std::size_t i = 0; i < frontier; ++i)
                for (Letter a = 0; a < k; ++a)
                    admit(products[i * k + a], static_cast<std::uint32_t>(level_begin + i), a);
        } else {
            for (std::size_t idx = level_begin; idx < level_end; ++idx)
                for (Letter a = 0; a < k; ++a)
                    admit(c.elements[idx].then(gens[a]), static_cast<std::uint32_t>(idx), a);
        }
        level_begin = level_end;
    }
    return c;
}

} // namespace

Closure monoid_closure_serial(const Dfa& dfa, std::uint64_t cap) {
    return monoid_closure_impl(dfa, cap, false);
}

Closure monoid_closure_parallel(const Dfa& dfa, std::uint64_t cap) {
    return monoid_closure_impl(dfa, cap, true);
}

Closure monoid_closure(const Dfa& dfa, std::uint64_t cap, Exec exec) {
    return use_parallel(exec, dfa.num_states() >= kClosureParallelCutoff ||
                                  dfa.num_letters() >= kClosureParallelCutoff)
               ? monoid_closure_parallel(dfa, cap)
               : monoid_closure_serial(dfa, cap);
}

} // namespace synckit::kernels
