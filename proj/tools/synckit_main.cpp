/* synckit_main.cpp -- command-line surface: analyze, synthesize, shortest,
 * check, gen, bench.
 *
 * Exit codes: 0 success, 1 property failure (not synchronizable, not
 * aperiodic, word fails), 2 input error, 3 resource cap.
 */

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "synckit/gen.hpp"
#include "synckit/graph.hpp"
#include "synckit/io.hpp"
#include "synckit/monoid.hpp"
#include "synckit/oracle.hpp"
#include "synckit/pair_graph.hpp"
#include "synckit/synthesize.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;
constexpr int kResourceCap = 3;

struct Options {
    std::uint64_t monoid_cap = synckit::kDefaultMonoidCap;
    std::uint64_t pair_cap = synckit::kDefaultPairCap;
    std::uint32_t oracle_cap = synckit::kDefaultOracleCap;
    std::uint64_t seed = 0;
    std::string format = "human";
    std::string exec = "parallel";

    bool tsv() const { return format == "tsv"; }
    synckit::Exec exec_policy() const {
        return exec == "serial" ? synckit::Exec::serial : synckit::Exec::parallel;
    }
};

synckit::Dfa read_dfa(const std::string& path) {
    if (path == "-")
        return synckit::parse_dfa(std::cin);
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    return synckit::parse_dfa(in);
}

std::string join_states(const synckit::StateSet& states) {
    if (states.empty())
        return "-";
    std::string out;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(states[i]);
    }
    return out;
}

int cmd_analyze(const synckit::Dfa& dfa, const Options& opt) {
    const auto exec = opt.exec_policy();
    bool capped = false;

    synckit::StateSet sink_states = synckit::sinks(dfa);
    bool connected = synckit::scc_condense(synckit::dfa_graph(dfa)).num_components == 1;

    int synchronizable = -1; // -1: capped
    try {
        synchronizable = synckit::has_pair_sink(dfa, opt.pair_cap, exec) ? 1 : 0;
    } catch (const synckit::ResourceLimitError& e) {
        capped = true;
        std::cerr << "resource limit: " << e.what() << "\n";
    }

    int aperiodic = -1;
    std::int64_t monoid_size = -1;
    std::optional<synckit::AperiodicityWitness> witness;
    try {
        synckit::Monoid m = synckit::transition_monoid(dfa, opt.monoid_cap, exec);
        monoid_size = static_cast<std::int64_t>(m.size());
        aperiodic = 1;
        for (std::uint32_t i = 0; i < m.size(); ++i) {
            synckit::IndexPeriod ip = synckit::index_period(m.elements[i]);
            if (ip.period > 1) {
                aperiodic = 0;
                witness = synckit::AperiodicityWitness{m.witness_word(i), ip};
                break;
            }
        }
    } catch (const synckit::ResourceLimitError& e) {
        capped = true;
        std::cerr << "resource limit: " << e.what() << "\n";
    }

    auto flag = [](int v) { return v < 0 ? "capped" : (v ? "true" : "false"); };
    if (opt.tsv()) {
        std::cout << dfa.num_states() << '\t' << dfa.num_letters() << '\t' << sink_states.size()
                  << '\t' << (connected ? 1 : 0) << '\t' << synchronizable << '\t' << aperiodic
                  << '\t' << monoid_size << '\n';
    } else {
        std::cout << "states " << dfa.num_states() << "\n";
        std::cout << "letters " << dfa.num_letters() << "\n";
        std::cout << "sinks " << join_states(sink_states) << "\n";
        std::cout << "strongly_connected " << (connected ? "true" : "false") << "\n";
        std::cout << "synchronizable " << flag(synchronizable) << "\n";
        std::cout << "aperiodic " << (aperiodic < 0 ? "unknown" : flag(aperiodic)) << "\n";
        if (witness) {
            std::cout << "witness " << synckit::render_word(witness->word, dfa.num_letters())
                      << "\n";
            std::cout << "witness_index " << witness->powers.index << "\n";
            std::cout << "witness_period " << witness->powers.period << "\n";
        }
        std::cout << "monoid_size " << (monoid_size < 0 ? "capped" : std::to_string(monoid_size))
                  << "\n";
    }
    return capped ? kResourceCap : kOk;
}

void print_certificate(const synckit::SyncCertificate& cert, std::uint32_t k,
                       const Options& opt) {
    if (opt.tsv()) {
        const bool bounded = cert.bound_kind != synckit::BoundKind::none;
        std::cout << (cert.word.empty() ? "-" : synckit::render_word(cert.word, k)) << '\t'
                  << cert.word.size() << '\t' << synckit::to_string(cert.bound_kind) << '\t'
                  << (bounded ? std::to_string(cert.bound) : "-1") << '\t'
                  << (bounded ? (cert.bound_ok ? "1" : "0") : "-1") << '\t'
                  << (cert.verified ? 1 : 0) << '\n';
    } else {
        std::cout << synckit::serialize_certificate(cert, k);
    }
}

int cmd_synthesize(const synckit::Dfa& dfa, const Options& opt) {
    const auto exec = opt.exec_policy();
    try {
        synckit::SyncCertificate cert =
            synckit::synchronize_aperiodic(dfa, opt.pair_cap, exec);
        print_certificate(cert, dfa.num_letters(), opt);
        return cert.verified && cert.bound_ok ? kOk : kPropertyFailure;
    } catch (const synckit::NotSynchronizableError& e) {
        std::cout << "not synchronizable\n";
        std::cerr << e.what() << "\n";
        return kPropertyFailure;
    } catch (const synckit::NotAperiodicError& e) {
        std::cout << "t_cycle " << join_states(e.cycle) << "\n";
        std::cerr << e.what() << "\n";
        synckit::SyncCertificate cert = synckit::greedy_certificate(dfa, opt.pair_cap, exec);
        print_certificate(cert, dfa.num_letters(), opt);
        return kPropertyFailure;
    }
}

int cmd_shortest(const synckit::Dfa& dfa, const Options& opt) {
    synckit::OracleResult r = synckit::shortest_sync_word(dfa, opt.oracle_cap);
    std::cout << "word "
              << (r.word && !r.word->empty() ? synckit::render_word(*r.word, dfa.num_letters())
                                             : "-")
              << "\n";
    std::cout << "length " << (r.word ? std::to_string(r.word->size()) : "-1") << "\n";
    std::cout << "explored " << r.explored << "\n";
    return r.word ? kOk : kPropertyFailure;
}

int cmd_check(const synckit::Dfa& dfa, const std::string& word_text) {
    synckit::Word w = synckit::parse_word(word_text, dfa.num_letters());
    if (synckit::is_synchronizing_word(dfa, w)) {
        std::cout << "synchronizes\n";
        return kOk;
    }
    std::cout << "does not synchronize\n";
    return kPropertyFailure;
}

synckit::Family parse_family(const std::string& name) {
    if (name == "cerny")
        return synckit::Family::cerny;
    if (name == "random")
        return synckit::Family::random_uniform;
    if (name == "monotone")
        return synckit::Family::monotone;
    if (name == "aperiodic_rejection")
        return synckit::Family::aperiodic_rejection;
    throw std::invalid_argument("unknown family '" + name + "'");
}

int cmd_gen(const synckit::GenSpec& spec) {
    std::cout << synckit::serialize_dfa(synckit::generate(spec));
    return kOk;
}

int cmd_bench(const synckit::GenSpec& base, std::uint32_t samples, const Options& opt) {
    const auto exec = opt.exec_policy();
    std::vector<std::string> rows(samples);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < std::int64_t(samples); ++i) {
        synckit::GenSpec spec = base;
        spec.seed = base.seed + std::uint64_t(i);

        std::int64_t aperiodic = -1, synchronizable = -1, oracle_len = -1, synth_len = -1;
        std::int64_t bound_ok = -1;
        std::uint64_t bound = 0;
        std::ostringstream row;
        try {
            synckit::Dfa dfa = synckit::generate(spec);
            const std::uint64_t n = dfa.num_states();
            bound = n * (n - 1) / 2;
            try {
                aperiodic = synckit::is_aperiodic(dfa, opt.monoid_cap, exec).aperiodic ? 1 : 0;
            } catch (const synckit::ResourceLimitError&) {
            }
            try {
                synchronizable = synckit::has_pair_sink(dfa, opt.pair_cap, exec) ? 1 : 0;
            } catch (const synckit::ResourceLimitError&) {
            }
            try {
                synckit::OracleResult r = synckit::shortest_sync_word(dfa, opt.oracle_cap);
                if (r.word)
                    oracle_len = static_cast<std::int64_t>(r.word->size());
            } catch (const synckit::ResourceLimitError&) {
            }
            try {
                synckit::SyncCertificate cert =
                    synckit::synchronize_aperiodic(dfa, opt.pair_cap, exec);
                synth_len = static_cast<std::int64_t>(cert.word.size());
                bound_ok = cert.bound_ok ? 1 : 0;
            } catch (const synckit::NotAperiodicError&) {
                try {
                    synckit::SyncCertificate cert =
                        synckit::greedy_certificate(dfa, opt.pair_cap, exec);
                    synth_len = static_cast<std::int64_t>(cert.word.size());
                } catch (const synckit::NotSynchronizableError&) {
                } catch (const synckit::ResourceLimitError&) {
                }
            } catch (const synckit::NotSynchronizableError&) {
            } catch (const synckit::ResourceLimitError&) {
            }
            row << spec.seed << '\t' << spec.n << '\t' << spec.k << '\t' << aperiodic << '\t'
                << synchronizable << '\t' << oracle_len << '\t' << synth_len << '\t' << bound
                << '\t' << bound_ok;
        } catch (const std::exception&) {
            // Generation itself failed (e.g. rejection budget); emit a blank row.
            row << spec.seed << '\t' << spec.n << '\t' << spec.k
                << "\t-1\t-1\t-1\t-1\t0\t-1";
        }
        rows[std::size_t(i)] = row.str();
    }

    for (const std::string& row : rows)
        std::cout << row << '\n';
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"synchronizing-word analysis and synthesis for DFAs"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--monoid-cap", opt.monoid_cap, "element cap for monoid enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--pair-cap", opt.pair_cap, "vertex cap for the pair graph")
        ->check(CLI::PositiveNumber);
    app.add_option("--oracle-cap", opt.oracle_cap, "state cap for the subset-space oracle")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "base seed for generators");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"human", "tsv"}));
    app.add_option("--exec", opt.exec, "kernel execution policy")
        ->check(CLI::IsMember({"serial", "parallel"}));

    std::string input = "-";
    std::string word_text;
    std::string family = "random";
    std::uint32_t gen_n = 0, gen_k = 2, max_tries = 100, samples = 100;

    CLI::App* analyze = app.add_subcommand("analyze", "structural report for one automaton");
    analyze->add_option("input", input, "automaton file, or - for stdin");
    CLI::App* synthesize = app.add_subcommand("synthesize", "construct a synchronizing word");
    synthesize->add_option("input", input, "automaton file, or - for stdin");
    CLI::App* shortest = app.add_subcommand("shortest", "exact shortest synchronizing word");
    shortest->add_option("input", input, "automaton file, or - for stdin");
    CLI::App* check = app.add_subcommand("check", "test whether a word synchronizes");
    check->add_option("input", input, "automaton file, or - for stdin");
    check->add_option("word", word_text, "word over a..z (or l0 l1 ...); - for the empty word")
        ->required();
    CLI::App* gen = app.add_subcommand("gen", "emit a generated automaton");
    gen->add_option("--family", family, "cerny | random | monotone | aperiodic_rejection");
    gen->add_option("--n", gen_n, "state count")->required()->check(CLI::PositiveNumber);
    gen->add_option("--k", gen_k, "letter count")->check(CLI::PositiveNumber);
    gen->add_option("--max-tries", max_tries, "rejection budget")->check(CLI::PositiveNumber);
    CLI::App* bench = app.add_subcommand("bench", "per-sample TSV sweep over a family");
    bench->add_option("--family", family, "cerny | random | monotone | aperiodic_rejection");
    bench->add_option("--n", gen_n, "state count")->required()->check(CLI::PositiveNumber);
    bench->add_option("--k", gen_k, "letter count")->check(CLI::PositiveNumber);
    bench->add_option("--max-tries", max_tries, "rejection budget")->check(CLI::PositiveNumber);
    bench->add_option("--samples", samples, "number of rows")->check(CLI::PositiveNumber);

    for (CLI::App* sub : {analyze, synthesize, shortest, check, gen, bench})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*analyze)
            return cmd_analyze(read_dfa(input), opt);
        if (*synthesize)
            return cmd_synthesize(read_dfa(input), opt);
        if (*shortest)
            return cmd_shortest(read_dfa(input), opt);
        if (*check)
            return cmd_check(read_dfa(input), word_text);
        if (*gen)
            return cmd_gen({gen_n, gen_k, opt.seed, parse_family(family), max_tries});
        if (*bench)
            return cmd_bench({gen_n, gen_k, opt.seed, parse_family(family), max_tries}, samples,
                             opt);
    } catch (const synckit::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kInputError;
    } catch (const synckit::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResourceCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
