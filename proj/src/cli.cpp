#include "frob/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "frob/modarith.hpp"
#include "frob/oracles.hpp"
#include "frob/random_triples.hpp"

namespace frob {

namespace {

nlohmann::json int_to_json(const Int& v) {
    static const Int kI64Min = Int(std::numeric_limits<std::int64_t>::min());
    static const Int kI64Max = Int(std::numeric_limits<std::int64_t>::max());
    if (v >= kI64Min && v <= kI64Max) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

nlohmann::json ints_to_json(const std::vector<Int>& vs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Int& v : vs) {
        arr.push_back(int_to_json(v));
    }
    return arr;
}

std::string join_ints(const std::vector<Int>& vs, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += vs[i].str();
    }
    return out;
}

std::string rational_with_decimal(const Rational& r) {
    std::string s = r.num.str();
    if (r.den != 1) {
        s += "/" + r.den.str();
    }
    s += " ≈ " + rat_decimal(r);
    return s;
}

/// Overall gcd of a non-empty list.
Int gcd_all(const std::vector<Int>& vs) {
    Int g = vs.front();
    for (std::size_t i = 1; i < vs.size(); ++i) {
        g = gcd(g, vs[i]);
    }
    return g;
}

void validate_values(const std::vector<Int>& values) {
    if (values.size() < 2 || values.size() > 3) {
        throw std::invalid_argument("expected 2 or 3 values, got " +
                                    std::to_string(values.size()));
    }
    for (const Int& v : values) {
        if (v < 1) {
            throw std::invalid_argument("values must be positive, got " + v.str());
        }
    }
}

}  // namespace

nlohmann::json record_to_json(const OutputRecord& rec) {
    nlohmann::json j;
    j["input"] = ints_to_json(rec.input);
    j["g"] = rec.g ? int_to_json(*rec.g) : nlohmann::json(nullptr);
    j["case"] = rec.case_name;
    j["nbar"] = rec.nbar ? int_to_json(*rec.nbar) : nlohmann::json(nullptr);
    j["steps"] = rec.steps;
    nlohmann::json chain = nlohmann::json::array();
    for (const ReductionStep& st : rec.chain) {
        nlohmann::json stj;
        stj["kind"] = step_kind_name(st.kind);
        stj["before"] = ints_to_json(st.before);
        stj["after"] = ints_to_json(st.after);
        if (st.divisor) {
            stj["divisor"] = int_to_json(*st.divisor);
        }
        if (st.pair_indices) {
            stj["pair"] = {st.pair_indices->first, st.pair_indices->second};
        }
        chain.push_back(std::move(stj));
    }
    j["reduction_chain"] = std::move(chain);
    j["error"] = rec.error ? nlohmann::json(*rec.error) : nlohmann::json(nullptr);
    return j;
}

std::optional<Method> parse_method(const std::string& name) {
    if (name == "fast") return Method::kFast;
    if (name == "tripathi") return Method::kTripathi;
    if (name == "sieve") return Method::kSieve;
    if (name == "bshockley") return Method::kBShockley;
    return std::nullopt;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::kFast: return "fast";
        case Method::kTripathi: return "tripathi";
        case Method::kSieve: return "sieve";
        case Method::kBShockley: return "bshockley";
    }
    throw std::logic_error("method_name: unknown method");
}

std::pair<OutputRecord, int> compute_record(const std::vector<Int>& values,
                                            Method method) {
    OutputRecord rec;
    rec.input = values;
    try {
        validate_values(values);
        if (method == Method::kSieve) {
            if (gcd_all(values) != 1) {
                rec.error = kNoSolutionMessage;
                return {std::move(rec), kExitNoSolution};
            }
            rec.g = sieve_frobenius(values);
            rec.case_name = "SIEVE";
            return {std::move(rec), kExitOk};
        }
        ReductionResult rr;
        switch (method) {
            case Method::kFast:
                rr = frobenius_general(values);
                break;
            case Method::kTripathi:
                rr = frobenius_general(
                    values, [](const Triple& t) { return tripathi_frobenius(t); });
                break;
            case Method::kBShockley:
                rr = frobenius_general(values, [](const Triple& t) {
                    return brauer_shockley_frobenius(t);
                });
                break;
            case Method::kSieve:
                break;  // handled above
        }
        rec.chain = rr.chain;
        if (!rr.g) {
            rec.error = kNoSolutionMessage;
            return {std::move(rec), kExitNoSolution};
        }
        rec.g = *rr.g;
        if (rr.core) {
            rec.case_name = case_tag_name(rr.core->case_tag);
            rec.nbar = rr.core->nbar;
            rec.steps = rr.core->diffmod_steps;
        } else if (!rr.chain.empty() &&
                   (rr.chain.back().kind == StepKind::kSylvester ||
                    rr.chain.back().kind == StepKind::kUnitElement)) {
            rec.case_name = step_kind_name(rr.chain.back().kind);
        } else if (method != Method::kFast) {
            // Oracle cores report no case decomposition.
            rec.case_name = "ORACLE";
        }
        return {std::move(rec), kExitOk};
    } catch (const OracleTooLarge& e) {
        rec.error = e.what();
        return {std::move(rec), kExitInvalidInput};
    } catch (const std::invalid_argument& e) {
        rec.error = e.what();
        return {std::move(rec), kExitInvalidInput};
    } catch (const std::exception& e) {
        rec.error = e.what();
        return {std::move(rec), kExitInvalidInput};
    }
}

void print_solution_trace(std::ostream& out, const Triple& t,
                          const FrobeniusSolution& sol) {
    out << "core: a1=" << t.a1 << " a2=" << t.a2 << " a3=" << t.a3 << "\n";
    out << "a0=" << t.a0 << "  a0^-1=" << t.a0_inv << "\n";
    out << "case=" << case_tag_name(sol.case_tag) << "\n";
    if (sol.case_tag == CaseTag::kTwoVarLike) {
        out << "a3 + a2*a0 > a1*a2: only n=0 contributes\n";
        out << "n̄=0\n";
        out << "arm1 = " << *sol.trace.arm_first << "\n";
        out << "g = " << sol.g << "\n";
        return;
    }
    const CaseParams& cp = *sol.trace.params;
    out << "direction=" << (cp.increasing ? "increasing" : "decreasing") << "\n";
    out << "α=" << cp.alpha << "  ᾱ=" << cp.alpha_bar << "  β=" << cp.beta << "\n";
    out << "θ = " << rational_with_decimal(cp.theta) << "\n";
    if (sol.sigma) {
        out << "σ-descent on (ᾱ, α), rows (v̄_j, v_j | θ_j):\n";
        for (std::size_t i = 0; i < sol.trace.ratio_rows.size(); ++i) {
            const DescentRow& row = sol.trace.ratio_rows[i];
            out << "  j=" << (i + 1) << ": " << row.vbar << " " << row.v;
            if (row.limit) {
                out << " | " << rational_with_decimal(*row.limit);
            }
            if (i + 1 == *sol.sigma) {
                out << "    <- σ=" << *sol.sigma;
            }
            out << "\n";
        }
    } else {
        out << "ᾱ < θ: closed-form n̄, no ratio descent\n";
    }
    out << "n̄=" << (sol.nbar ? sol.nbar->str() : "-") << "\n";
    if (sol.psi) {
        out << "ψ-walk on (a0^-1, a1), rows (φ̄_j, φ_j):\n";
        for (std::size_t i = 0; i < sol.trace.index_rows.size(); ++i) {
            const DescentRow& row = sol.trace.index_rows[i];
            out << "  j=" << (i + 1) << ": " << row.vbar << " " << row.v;
            if (i + 1 == *sol.psi) {
                out << "    <- ψ=" << *sol.psi;
            }
            out << "\n";
        }
    }
    if (sol.epsilon) {
        if (sol.case_tag == CaseTag::kPsiInc) {
            out << "ε̇=" << *sol.epsilon << "\n";
        } else {
            out << "ε̄=" << *sol.epsilon << "\n";
        }
    }
    if (sol.trace.arm_first) {
        out << "arm1 = " << *sol.trace.arm_first << "\n";
    }
    if (sol.trace.arm_second) {
        out << "arm2 = " << *sol.trace.arm_second << "\n";
    }
    out << "g = " << sol.g << "\n";
}

void print_reduction_trace(std::ostream& out, const std::vector<Int>& input,
                           const ReductionResult& rr) {
    out << "input: " << join_ints(input) << "\n";
    for (const ReductionStep& st : rr.chain) {
        out << "reduce: " << step_kind_name(st.kind);
        if (st.divisor) {
            out << " divisor=" << *st.divisor;
        }
        if (st.pair_indices) {
            out << " pair=(" << st.before[st.pair_indices->first] << ","
                << st.before[st.pair_indices->second] << ")";
        }
        out << ": [" << join_ints(st.before) << "] -> [" << join_ints(st.after)
            << "]\n";
    }
    if (rr.core) {
        // Reconstruct the core triple from the tail of the chain (or the input
        // itself when no reduction step applied).
        const std::vector<Int>& core_vals =
            rr.chain.empty() ? input : rr.chain.back().after;
        Triple t = Triple::create(core_vals[0], core_vals[1], core_vals[2]);
        print_solution_trace(out, t, *rr.core);
    }
    if (rr.g) {
        out << "g(" << join_ints(input, ", ") << ") = " << *rr.g << "\n";
    } else {
        out << kNoSolutionMessage << "\n";
    }
}

int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
    auto [rec, code] = compute_record(opt.values, opt.method);
    if (opt.trace && opt.method == Method::kFast && !rec.error) {
        // Re-run to obtain the full structured trace; solve is pure and cheap.
        ReductionResult rr = frobenius_general(opt.values);
        print_reduction_trace(opt.json ? err : out, opt.values, rr);
    }
    if (opt.json) {
        out << record_to_json(rec).dump() << "\n";
        return code;
    }
    if (rec.error) {
        err << *rec.error << "\n";
        return code;
    }
    out << *rec.g << "\n";
    return code;
}

namespace {

struct VerifyStats {
    std::uint64_t checked = 0;
    std::map<std::string, std::uint64_t> cases;
    std::uint64_t ff33_hits = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t max_steps = 0;
    std::uint64_t max_steps_a1_log = 0;  // floor(log2 a1) where max_steps occurred
    bool bound_violated = false;
};

unsigned floor_log2(const Int& v) {
    return static_cast<unsigned>(boost::multiprecision::msb(v));
}

/// Solves one triple, folds it into the stats, cross-checks g against the
/// supplied oracle value, and dumps a full trace on any disagreement.
void verify_one(const Triple& t, const Int& oracle_g, const char* oracle_name,
                VerifyStats& st, bool search_ff33, std::ostream& out) {
    FrobeniusSolution sol;
    try {
        sol = solve(t);
    } catch (const std::exception& e) {
        ++st.mismatches;
        out << "invariant failure on (" << t.a1 << ", " << t.a2 << ", " << t.a3
            << "): " << e.what() << "\n";
        return;
    }
    ++st.checked;
    ++st.cases[case_tag_name(sol.case_tag)];
    const unsigned lg = floor_log2(t.a1);
    if (sol.diffmod_steps > st.max_steps) {
        st.max_steps = sol.diffmod_steps;
        st.max_steps_a1_log = lg;
    }
    if (sol.diffmod_steps > 4ull * lg) {
        st.bound_violated = true;
        out << "step-bound violation on (" << t.a1 << ", " << t.a2 << ", " << t.a3
            << "): " << sol.diffmod_steps << " levels vs 4*floor(log2(a1)) = "
            << (4ull * lg) << "\n";
    }
    const bool ff33 = sol.case_tag == CaseTag::kPsiDecEq ||
                      sol.case_tag == CaseTag::kPsiDecGt;
    if (ff33) {
        ++st.ff33_hits;
        if (search_ff33) {
            out << "FF33 hit: (" << t.a1 << ", " << t.a2 << ", " << t.a3 << ") case="
                << case_tag_name(sol.case_tag) << " g=" << sol.g << "\n";
        }
    }
    if (sol.g != oracle_g) {
        ++st.mismatches;
        out << "mismatch on (" << t.a1 << ", " << t.a2 << ", " << t.a3
            << "): fast g=" << sol.g << ", " << oracle_name << " g=" << oracle_g
            << "\n";
        print_solution_trace(out, t, sol);
    }
}

void print_stats(const VerifyStats& st, std::ostream& out) {
    out << "checked " << st.checked << " triples\n";
    for (const auto& [name, count] : st.cases) {
        out << "  " << name << ": " << count << "\n";
    }
    out << "FF33 hits: " << st.ff33_hits << "\n";
    out << "max diff-mod levels: " << st.max_steps
        << " (4*floor(log2(a1)) there = " << (4 * st.max_steps_a1_log) << ")\n";
    out << "step bound 4*log2(a1) " << (st.bound_violated ? "VIOLATED" : "satisfied")
        << "\n";
    out << st.mismatches << " mismatches\n";
}

}  // namespace

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.exhaustive_max.has_value() == opt.random_count.has_value()) {
        err << "verify: pass exactly one of --exhaustive MAX or --random COUNT\n";
        return kExitInvalidInput;
    }
    VerifyStats st;
    if (opt.exhaustive_max) {
        const std::uint64_t mx = *opt.exhaustive_max;
        if (mx < 4) {
            err << "verify: --exhaustive needs MAX >= 4\n";
            return kExitInvalidInput;
        }
        if (mx > 4000) {
            err << "verify: --exhaustive MAX above 4000 exceeds the sieve oracle guard\n";
            return kExitInvalidInput;
        }
        for (std::uint64_t a1 = 2; a1 + 2 <= mx; ++a1) {
            for (std::uint64_t a2 = a1 + 1; a2 + 1 <= mx; ++a2) {
                if (std::gcd(a1, a2) != 1) continue;
                for (std::uint64_t a3 = a2 + 1; a3 <= mx; ++a3) {
                    if (std::gcd(a1, a3) != 1 || std::gcd(a2, a3) != 1) continue;
                    Triple t = Triple::create(Int(a1), Int(a2), Int(a3));
                    const Int oracle = sieve_frobenius({t.a1, t.a2, t.a3});
                    verify_one(t, oracle, "sieve", st, opt.search_ff33, out);
                }
            }
        }
    } else {
        if (opt.bound < 6) {
            err << "verify: --bound must be at least 6\n";
            return kExitInvalidInput;
        }
        if (opt.bound > 1000000) {
            err << "verify: --bound above 1000000 exceeds the shortest-path oracle guard\n";
            return kExitInvalidInput;
        }
        TripleSampler sampler(opt.seed, 2, opt.bound);
        for (std::uint64_t i = 0; i < *opt.random_count; ++i) {
            const auto v = sampler.next();
            Triple t = Triple::create(Int(v[0]), Int(v[1]), Int(v[2]));
            const Int oracle = brauer_shockley_frobenius(t);
            verify_one(t, oracle, "bshockley", st, opt.search_ff33, out);
        }
    }
    print_stats(st, out);
    return st.mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_batch(const BatchOptions& opt, std::ostream& out, std::ostream& err) {
    std::ifstream in(opt.path);
    if (!in) {
        err << "batch: cannot open file: " << opt.path << "\n";
        return kExitInvalidInput;
    }
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream tokens(line);
        std::vector<std::string> raw;
        std::string tok;
        while (tokens >> tok) {
            raw.push_back(tok);
        }
        if (raw.empty()) {
            continue;
        }
        OutputRecord rec;
        std::optional<std::string> parse_error;
        std::vector<Int> values;
        for (const std::string& r : raw) {
            const bool digits =
                !r.empty() && std::all_of(r.begin(), r.end(), [](unsigned char c) {
                    return std::isdigit(c) != 0;
                });
            if (!digits) {
                parse_error = "invalid integer: '" + r + "'";
                break;
            }
            values.emplace_back(r);
        }
        if (parse_error) {
            rec.input = values;
            rec.error = *parse_error;
            out << record_to_json(rec).dump() << "\n";
            continue;
        }
        auto [record, code] = compute_record(values, Method::kFast);
        (void)code;  // per-line problems are reported inside the record
        out << record_to_json(record).dump() << "\n";
    }
    return kExitOk;
}

}  // namespace frob
