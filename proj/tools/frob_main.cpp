#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frob/cli.hpp"

namespace {

bool env_wants_trace() {
    const char* v = std::getenv("FROB_LOG");
    return v != nullptr && std::string(v) == "trace";
}

/// Digits-only parse into Int; rejects signs, blanks, and garbage so error
/// reporting stays in our hands rather than the bigint constructor's.
std::optional<frob::Int> parse_value(const std::string& s) {
    if (s.empty()) {
        return std::nullopt;
    }
    for (const char c : s) {
        if (c < '0' || c > '9') {
            return std::nullopt;
        }
    }
    return frob::Int(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius numbers of two- and three-element coin systems"};
    app.require_subcommand(1);

    auto* comp = app.add_subcommand("compute", "Compute g for the given values");
    std::vector<std::string> value_strs;
    std::string method_str = "fast";
    bool json_flag = false;
    bool trace_flag = false;
    comp->add_option("values", value_strs, "2 or 3 positive integers")
        ->required()
        ->expected(2, 3);
    comp->add_option("--method", method_str, "fast|tripathi|sieve|bshockley")
        ->capture_default_str();
    comp->add_flag("--json", json_flag, "emit one JSON record");
    comp->add_flag("--trace", trace_flag, "print the intermediate tables");

    auto* ver = app.add_subcommand("verify", "Cross-check the fast solver against an oracle");
    std::uint64_t exhaustive_max = 0;
    std::uint64_t random_count = 0;
    std::uint64_t bound = 1000000;
    std::uint64_t seed = 1;
    bool search_ff33 = false;
    auto* ex_opt = ver->add_option("--exhaustive", exhaustive_max,
                                   "check every valid triple with a3 <= MAX against the sieve");
    auto* rnd_opt = ver->add_option("--random", random_count,
                                    "check COUNT random triples against the shortest-path oracle");
    ver->add_option("--bound", bound, "upper bound for random values")
        ->capture_default_str();
    ver->add_option("--seed", seed, "random seed")->capture_default_str();
    ver->add_flag("--search-ff33", search_ff33,
                  "log every input that reaches the rare falling-run dispatch");

    auto* bat = app.add_subcommand("batch", "Process a file of inputs into JSON-lines records");
    std::string batch_path;
    bat->add_option("file", batch_path, "one pair or triple per line; '#' starts a comment")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return frob::kExitInvalidInput;
    }

    if (comp->parsed()) {
        frob::ComputeOptions opt;
        for (const std::string& s : value_strs) {
            auto v = parse_value(s);
            if (!v) {
                std::cerr << "invalid integer: '" << s << "'\n";
                return frob::kExitInvalidInput;
            }
            opt.values.push_back(*v);
        }
        auto m = frob::parse_method(method_str);
        if (!m) {
            std::cerr << "unknown method: '" << method_str
                      << "' (expected fast|tripathi|sieve|bshockley)\n";
            return frob::kExitInvalidInput;
        }
        opt.method = *m;
        opt.json = json_flag;
        opt.trace = trace_flag || env_wants_trace();
        return frob::cmd_compute(opt, std::cout, std::cerr);
    }
    if (ver->parsed()) {
        frob::VerifyOptions opt;
        if (ex_opt->count() > 0) {
            opt.exhaustive_max = exhaustive_max;
        }
        if (rnd_opt->count() > 0) {
            opt.random_count = random_count;
        }
        opt.bound = bound;
        opt.seed = seed;
        opt.search_ff33 = search_ff33;
        return frob::cmd_verify(opt, std::cout, std::cerr);
    }
    frob::BatchOptions opt;
    opt.path = batch_path;
    return frob::cmd_batch(opt, std::cout, std::cerr);
}
