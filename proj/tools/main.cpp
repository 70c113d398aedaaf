// sonik - integer ranking from the command line.
//
//   sonik rank    compute per-element ranks (and the sorted list) for an
//                 integer stream, in input order
//   sonik verify  differential campaign against the brute-force oracles
//   sonik bench   CSV timings of the ranking core vs the sort-based baseline
//
// Exit codes: 0 success, 1 verification failure, 2 input/config error.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sonik/core.hpp"
#include "sonik/oracle.hpp"
#include "sonik/transform.hpp"

namespace {

using sonik::element_list;
using sonik::rank_list;
using sonik::sort_order;
using sonik::value_t;

struct cli_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic splitmix64; counterexamples and benchmarks reproduce from
// the seed alone, independent of standard-library internals.
class rng {
  public:
    explicit rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span =
            static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        if (span == 0) {
            return static_cast<std::int64_t>(next());
        }
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + next() % span);
    }

  private:
    std::uint64_t state_;
};

element_list parse_input(std::istream& in) {
    element_list values;
    std::string token;
    std::size_t position = 0;
    while (in >> token) {
        ++position;
        std::string_view body = token;
        if (!body.empty() && body.front() == '+') {
            body.remove_prefix(1);
        }
        value_t value = 0;
        const auto* end = body.data() + body.size();
        const auto [ptr, ec] = std::from_chars(body.data(), end, value);
        if (ec == std::errc::result_out_of_range) {
            throw cli_error("token " + std::to_string(position) + " ('" + token +
                            "') is out of 64-bit range");
        }
        if (ec != std::errc{} || ptr != end || body.empty()) {
            throw cli_error("token " + std::to_string(position) + " ('" + token +
                            "') is not an integer");
        }
        values.push_back(value);
    }
    return values;
}

element_list read_elements(const std::string& path) {
    if (path.empty() || path == "-") {
        return parse_input(std::cin);
    }
    std::ifstream file(path);
    if (!file) {
        throw cli_error("cannot open input file '" + path + "'");
    }
    return parse_input(file);
}

template <typename T>
std::string join(const std::vector<T>& values, const char* sep = " ") {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out << sep;
        out << values[i];
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// rank

struct rank_config {
    std::string input_path;
    sort_order order = sort_order::ascending;
    bool stable = false;
    std::optional<int> bits;
    std::string emit = "ranks";
    std::string format = "lines";
};

int run_rank(const rank_config& config) {
    const element_list input = read_elements(config.input_path);

    // A requested bit limit ranks the input's own low bits, so negatives are
    // lifted but non-negative values stay untouched; full runs take the
    // min-shift, which trims iterations without changing ranks.
    const auto shifted =
        config.bits ? sonik::lift_negatives(input) : sonik::normalize(input);
    rank_list ranks = sonik::compute_ranks(shifted.values, config.order, config.bits);
    if (config.stable) {
        ranks = sonik::stabilize_ranks(input, ranks);
    }

    const bool want_ranks = config.emit == "ranks" || config.emit == "both";
    const bool want_sorted = config.emit == "sorted" || config.emit == "both";
    element_list sorted;
    if (want_sorted) {
        sorted = sonik::sorted_from_ranks(input, ranks);
    }

    std::ostream& out = std::cout;
    if (config.format == "lines") {
        if (want_ranks) {
            for (auto r : ranks) out << r << '\n';
        }
        if (want_ranks && want_sorted) {
            out << '\n';
        }
        if (want_sorted) {
            for (auto v : sorted) out << v << '\n';
        }
        return 0;
    }

    // csv
    if (want_ranks && want_sorted) {
        out << "position,value,rank,sorted_value\n";
        for (std::size_t i = 0; i < input.size(); ++i) {
            out << i + 1 << ',' << input[i] << ',' << ranks[i] << ',' << sorted[i] << '\n';
        }
    } else if (want_ranks) {
        out << "position,value,rank\n";
        for (std::size_t i = 0; i < input.size(); ++i) {
            out << i + 1 << ',' << input[i] << ',' << ranks[i] << '\n';
        }
    } else {
        out << "position,sorted_value\n";
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            out << i + 1 << ',' << sorted[i] << '\n';
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct verify_config {
    std::uint64_t trials = 1000;
    std::uint64_t seed = 42;
    std::uint64_t max_n = 64;
    value_t lo = -100;
    value_t hi = 100;
};

struct mismatch {
    std::string mode;
    std::optional<int> bit_limit;
    rank_list expected;
    rank_list got;
};

// Runs every comparison for one input; reports the first mismatch.
std::optional<mismatch> check_instance(const element_list& input) {
    for (bool desc : {false, true}) {
        const auto order = desc ? sort_order::descending : sort_order::ascending;
        const char* tag = desc ? "desc" : "asc";
        sonik::oracle::oracle_config config;
        config.descending = desc;

        const auto dense = sonik::compute_ranks(sonik::normalize(input).values, order);
        if (auto want = sonik::oracle::dense_ranks(input, config); dense != want) {
            return mismatch{std::string("dense/") + tag, std::nullopt, want, dense};
        }
        const auto stable = sonik::stabilize_ranks(input, dense);
        if (auto want = sonik::oracle::stable_ranks(input, config); stable != want) {
            return mismatch{std::string("stable/") + tag, std::nullopt, want, stable};
        }

        const auto lifted = sonik::lift_negatives(input);
        const int k = sonik::required_bits(lifted.values);
        for (int bits = 0; bits <= k; ++bits) {
            config.mask_bits = bits;
            const auto prefix = sonik::compute_ranks(lifted.values, order, bits);
            if (auto want = sonik::oracle::dense_ranks(input, config); prefix != want) {
                return mismatch{std::string("prefix/") + tag, bits, want, prefix};
            }
        }
    }
    return std::nullopt;
}

int run_verify(const verify_config& config) {
    if (config.lo > config.hi) {
        throw cli_error("--lo must not exceed --hi");
    }

    std::cout << "# verify seed=" << config.seed << " trials=" << config.trials
              << " max-n=" << config.max_n << " range=[" << config.lo << ","
              << config.hi << "]\n";

    rng gen(config.seed);
    for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
        const std::size_t n =
            static_cast<std::size_t>(gen.next() % (config.max_n + 1));
        element_list input;
        input.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            input.push_back(gen.range(config.lo, config.hi));
        }

        if (const auto bad = check_instance(input)) {
            std::cout << "MISMATCH at trial " << trial << " mode=" << bad->mode;
            if (bad->bit_limit) {
                std::cout << " bit_limit=" << *bad->bit_limit;
            }
            std::cout << "\ninput:    " << join(input) << "\nexpected: "
                      << join(bad->expected) << "\ngot:      " << join(bad->got) << '\n';
            return 1;
        }
    }
    std::cout << "verify: " << config.trials << " trials, 0 mismatches\n";
    return 0;
}

// ---------------------------------------------------------------------------
// bench

struct bench_config {
    std::vector<std::uint64_t> sizes;
    int k_bits = 16;
    std::uint64_t trials = 3;
    std::uint64_t seed = 42;
};

std::uint64_t fold_ranks(const rank_list& ranks) {
    std::uint64_t h = 1469598103934665603ull;
    for (auto r : ranks) {
        h = (h ^ r) * 1099511628211ull;
    }
    return h;
}

int run_bench(const bench_config& config) {
    using clock = std::chrono::steady_clock;

    const value_t top = config.k_bits >= 63
                            ? std::numeric_limits<value_t>::max()
                            : (value_t{1} << config.k_bits) - 1;

    std::cout << "n,k,algorithm,trial,elapsed_ns,checksum\n";
    rng gen(config.seed);
    for (const auto n : config.sizes) {
        element_list input;
        input.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i) {
            input.push_back(gen.range(0, top));
        }

        struct algo {
            const char* name;
            rank_list (*run)(const element_list&);
        };
        const algo algos[] = {
            {"sonik", [](const element_list& v) { return sonik::compute_ranks(v); }},
            {"sort-baseline",
             [](const element_list& v) {
                 return sonik::oracle::dense_ranks(v);
             }},
        };

        for (const auto& a : algos) {
            fold_ranks(a.run(input));  // warm-up, discarded
            for (std::uint64_t trial = 1; trial <= config.trials; ++trial) {
                const auto start = clock::now();
                const rank_list ranks = a.run(input);
                const auto stop = clock::now();
                const auto ns = std::max<std::int64_t>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
                        .count(),
                    1);
                std::cout << n << ',' << config.k_bits << ',' << a.name << ',' << trial
                          << ',' << ns << ',' << fold_ranks(ranks) << '\n';
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"In-situ integer ranking: per-element sorted-order ranks without sorting"};
    app.require_subcommand(1);

    const std::map<std::string, sort_order> order_names{
        {"asc", sort_order::ascending}, {"desc", sort_order::descending}};

    rank_config rank_cfg;
    auto* rank_cmd = app.add_subcommand("rank", "Rank an integer stream in input order");
    rank_cmd->add_option("--order", rank_cfg.order, "Sorted order: asc or desc")
        ->transform(CLI::CheckedTransformer(order_names, CLI::ignore_case));
    rank_cmd->add_flag("--stable", rank_cfg.stable,
                       "Stable ranks: duplicates numbered in appearance order");
    rank_cmd->add_option("--bits", rank_cfg.bits,
                         "Stop after this many low bits (anytime partial ranks)")
        ->check(CLI::Range(1, 64));
    rank_cmd->add_option("--emit", rank_cfg.emit, "Output: ranks, sorted, or both")
        ->check(CLI::IsMember({"ranks", "sorted", "both"}));
    rank_cmd->add_option("--format", rank_cfg.format, "Output format: lines or csv")
        ->check(CLI::IsMember({"lines", "csv"}));
    rank_cmd->add_option("FILE", rank_cfg.input_path,
                         "Whitespace-separated integers ('-' or absent: stdin)");

    verify_config verify_cfg;
    auto* verify_cmd = app.add_subcommand(
        "verify", "Differential campaign against the brute-force oracles");
    verify_cmd->add_option("--trials", verify_cfg.trials, "Random instances to check")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", verify_cfg.seed, "Generator seed");
    verify_cmd->add_option("--max-n", verify_cfg.max_n, "Maximum instance length");
    verify_cmd->add_option("--lo", verify_cfg.lo, "Smallest value drawn");
    verify_cmd->add_option("--hi", verify_cfg.hi, "Largest value drawn");

    bench_config bench_cfg;
    auto* bench_cmd =
        app.add_subcommand("bench", "Time the ranking core against the sort baseline");
    bench_cmd->add_option("--sizes", bench_cfg.sizes, "Input lengths, comma-separated")
        ->delimiter(',')
        ->required();
    bench_cmd->add_option("--k-bits", bench_cfg.k_bits, "Bit width of generated values")
        ->check(CLI::Range(1, 64));
    bench_cmd->add_option("--trials", bench_cfg.trials, "Timed runs per size and algorithm")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_cfg.seed, "Generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rank_cmd->parsed()) return run_rank(rank_cfg);
        if (verify_cmd->parsed()) return run_verify(verify_cfg);
        if (bench_cmd->parsed()) return run_bench(bench_cfg);
    } catch (const std::exception& e) {
        std::cerr << "sonik: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
