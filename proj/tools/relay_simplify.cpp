// relay-simplify: command-line front end for the relaynet library.
//
// Exit codes: 0 success, 1 input error, 2 usage, 3 budget, 4 verification violation.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "relaynet/capacity.hpp"
#include "relaynet/errors.hpp"
#include "relaynet/generators.hpp"
#include "relaynet/network_io.hpp"
#include "relaynet/report.hpp"
#include "relaynet/simplifier.hpp"

namespace {

using namespace relaynet;

enum Exit { kOk = 0, kInput = 1, kUsage = 2, kBudget = 3, kViolation = 4 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

unsigned resolve_jobs(const std::optional<unsigned>& flag) {
    if (flag) return std::max(1u, *flag);
    if (const char* env = std::getenv("RELAY_SIMPLIFY_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw InputError(std::string("RELAY_SIMPLIFY_JOBS must be a positive integer, got '") + env + "'");
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximate capacity, relay subnetwork selection and bound verification for layered relay networks"};
    app.require_subcommand(1);
    int budget = 24;
    app.add_option("--budget", budget, "Largest L*N enumerated exhaustively")->check(CLI::Range(1, 62));

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a network document");
    std::string gen_kind;
    int gen_layers = 2;
    int gen_relays = 3;
    std::string gen_dist = "rayleigh:1";
    std::uint64_t gen_seed = 1;
    double gen_base = 10.0;
    std::string gen_out;
    gen->add_option("kind", gen_kind, "random | odd-adv | even-adv")
        ->required()
        ->check(CLI::IsMember({"random", "odd-adv", "even-adv"}));
    gen->add_option("--layers", gen_layers, "Relay layers L")->check(CLI::Range(1, 64));
    gen->add_option("--relays", gen_relays, "Relays per layer N")->check(CLI::Range(1, kMaxNodesPerLayer));
    gen->add_option("--dist", gen_dist, "rayleigh:SIGMA | uniform-gain:LO:HI | uniform-capacity:LO:HI | zero");
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("--base-capacity", gen_base, "Design capacity c of the adversarial constructions (bits)");
    gen->add_option("--out", gen_out, "Output file (default stdout)");

    // cap
    auto* cap = app.add_subcommand("cap", "Approximate capacity and minimizing cut");
    std::string cap_file;
    std::optional<unsigned> cap_jobs;
    cap->add_option("file", cap_file, "Network document ('-' for stdin)")->required();
    cap->add_option("--jobs", cap_jobs, "Worker threads");

    // simplify
    auto* simplify = app.add_subcommand("simplify", "Best subnetwork with k relays per layer");
    std::string simplify_file;
    int simplify_k = 1;
    simplify->add_option("file", simplify_file, "Network document ('-' for stdin)")->required();
    simplify->add_option("--k", simplify_k, "Relays kept per layer")->required()->check(CLI::PositiveNumber);

    // verify
    auto* verify = app.add_subcommand("verify", "Monte Carlo verification campaign");
    CampaignConfig cfg;
    std::optional<unsigned> verify_jobs;
    std::string verify_out;
    std::string verify_csv;
    bool layers_given = false;
    verify->add_option("--theorem", cfg.theorem, "1 (single relay) or 2 (two of three relays)")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    verify->add_option("--trials", cfg.trials, "Number of random networks");
    verify->add_option("--seed", cfg.seed, "Campaign seed");
    verify->add_option("--dist", cfg.dist, "Gain distribution");
    auto* layers_opt = verify->add_option("--layers", cfg.layers, "Relay layers L")->check(CLI::Range(1, 62));
    auto* relays_opt = verify->add_option("--relays", cfg.relays, "Relays per layer N")->check(CLI::Range(1, kMaxNodesPerLayer));
    verify->add_option("--jobs", verify_jobs, "Worker threads (default: RELAY_SIMPLIFY_JOBS or 1)");
    verify->add_option("--out", verify_out, "Report JSON file (default stdout)");
    verify->add_option("--csv", verify_csv, "Per-trial CSV file");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Run a bound-checking suite");
    std::string bounds_file;
    std::string suite;
    int max_layers = 6;
    int max_relays = 5;
    bounds->add_option("file", bounds_file, "Network document (not used by maxt)");
    bounds->add_option("--suite", suite, "lemma1 | lemma2 | table1 | maxt")
        ->required()
        ->check(CLI::IsMember({"lemma1", "lemma2", "table1", "maxt"}));
    bounds->add_option("--max-layers", max_layers, "maxt: largest L")->check(CLI::Range(1, 30));
    bounds->add_option("--max-relays", max_relays, "maxt: largest N")->check(CLI::Range(1, 30));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    layers_given = layers_opt->count() > 0 || relays_opt->count() > 0;

    const EnumerationLimits serial{budget, 1};
    try {
        if (*gen) {
            LayeredNetwork net = LayeredNetwork::zeros(1, 1);
            if (gen_kind == "random") {
                net = random_network(gen_layers, gen_relays, parse_distribution(gen_dist), gen_seed);
            } else if (gen_kind == "odd-adv") {
                net = construct_adversarial_odd(gen_layers, gen_relays, gen_base);
            } else {
                net = construct_adversarial_even(gen_layers, gen_relays, gen_base);
            }
            write_text(gen_out, serialize(net));
            return kOk;
        }
        if (*cap) {
            const auto net = parse_network(read_text(cap_file));
            const auto r = approx_capacity(net, {budget, resolve_jobs(cap_jobs)});
            std::cout << to_json(r).dump(2) << '\n';
            return kOk;
        }
        if (*simplify) {
            const auto net = parse_network(read_text(simplify_file));
            if (simplify_k > net.relays()) throw DomainError("--k must not exceed N");
            const auto r = best_subnetwork(net, simplify_k, serial);
            std::cout << to_json(r).dump(2) << '\n';
            return kOk;
        }
        if (*verify) {
            if (cfg.theorem == 2 && !layers_given) {
                cfg.layers = 2;
                cfg.relays = 3;
            }
            cfg.jobs = resolve_jobs(verify_jobs);
            cfg.budget = budget;
            const auto report = run_campaign(cfg);
            write_text(verify_out, report_json(report, utc_timestamp()));
            if (!verify_csv.empty()) write_text(verify_csv, report_csv(report));
            std::cerr << "theorem " << cfg.theorem << ": " << report.summary.trials << " trials, "
                      << report.summary.violations << " violations, min ratio "
                      << format12(report.summary.min_ratio) << ", " << format12(report.runtime_seconds) << " s\n";
            return report.summary.violations == 0 ? kOk : kViolation;
        }
        if (*bounds) {
            SuiteReport r;
            if (suite == "maxt") {
                r = suite_maxt(max_layers, max_relays);
            } else {
                if (bounds_file.empty()) throw InputError("suite '" + suite + "' needs a network file");
                const auto net = parse_network(read_text(bounds_file));
                r = suite == "lemma1" ? suite_lemma1(net) : suite == "lemma2" ? suite_lemma2(net) : suite_table1(net);
            }
            std::cout << suite_json(suite, r, utc_timestamp());
            return r.violations == 0 ? kOk : kViolation;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    }
    return kUsage;
}
