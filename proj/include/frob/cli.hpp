#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "frob/frobenius.hpp"
#include "frob/reduce.hpp"

namespace frob {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNoSolution = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitMismatch = 3;

inline constexpr const char* kNoSolutionMessage =
    "Frobenius number does not exist (gcd > 1)";

/// Flat, serializable result of one computation.  Exactly one of
/// `g` / `error` is set.
struct OutputRecord {
    std::vector<Int> input;
    std::optional<Int> g;
    std::string case_name;  // "" when no core case applies (errors, pairs, ...)
    std::optional<Int> nbar;
    std::uint64_t steps = 0;
    std::vector<ReductionStep> chain;
    std::optional<std::string> error;
};

/// JSON shape: {"input":[...],"g":int|str|null,"case":str,"nbar":int|null,
///              "steps":int,"reduction_chain":[{...}],"error":str|null}.
/// Integers that fit in 64 bits are numbers; larger ones are decimal strings.
nlohmann::json record_to_json(const OutputRecord& rec);

enum class Method { kFast, kTripathi, kSieve, kBShockley };

std::optional<Method> parse_method(const std::string& name);
const char* method_name(Method m);

struct ComputeOptions {
    std::vector<Int> values;
    Method method = Method::kFast;
    bool json = false;
    bool trace = false;
};

struct VerifyOptions {
    std::optional<std::uint64_t> exhaustive_max;
    std::optional<std::uint64_t> random_count;
    std::uint64_t bound = 1000000;
    std::uint64_t seed = 1;
    bool search_ff33 = false;
};

struct BatchOptions {
    std::string path;
};

/// Runs a computation and packages the outcome; never throws.  The second
/// member of the pair is the suggested process exit code.
std::pair<OutputRecord, int> compute_record(const std::vector<Int>& values,
                                            Method method);

int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_batch(const BatchOptions& opt, std::ostream& out, std::ostream& err);

/// Pretty-prints the full intermediate state of one solve: the reduction
/// chain, case parameters, both descent tables with the stopping rows
/// marked, the arm values, and g.
void print_reduction_trace(std::ostream& out, const std::vector<Int>& input,
                           const ReductionResult& rr);
void print_solution_trace(std::ostream& out, const Triple& t,
                          const FrobeniusSolution& sol);

}  // namespace frob
