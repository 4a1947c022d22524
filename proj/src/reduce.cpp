#include "frob/reduce.hpp"

#include <algorithm>
#include <array>

namespace frob {

namespace {

std::optional<Int> reduce_rec(std::vector<Int> vals, std::vector<ReductionStep>& chain,
                              const CoreFn& core) {
    std::vector<Int> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != vals) {
        chain.push_back(ReductionStep{StepKind::kSort, vals, sorted, std::nullopt, std::nullopt});
    }

    Int g_all = sorted[0];
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        g_all = gcd(g_all, sorted[i]);
    }
    if (g_all > 1) {
        chain.push_back(
            ReductionStep{StepKind::kNoSolution, sorted, sorted, std::nullopt, std::nullopt});
        return std::nullopt;
    }

    if (sorted.front() == 1) {
        chain.push_back(
            ReductionStep{StepKind::kUnitElement, sorted, sorted, std::nullopt, std::nullopt});
        return Int(-1);
    }

    std::vector<Int> uniq;
    for (const Int& v : sorted) {
        if (uniq.empty() || uniq.back() != v) {
            uniq.push_back(v);
        }
    }
    if (uniq != sorted) {
        chain.push_back(ReductionStep{StepKind::kDedupe, sorted, uniq, std::nullopt, std::nullopt});
    }

    if (uniq.size() == 1) {
        // All values equal: their overall gcd is that value, so the gcd test
        // above has already resolved every such input.
        throw InvariantViolation("frobenius_general: lone value past the gcd test");
    }

    if (uniq.size() == 2) {
        chain.push_back(
            ReductionStep{StepKind::kSylvester, uniq, uniq, std::nullopt, std::nullopt});
        return uniq[0] * uniq[1] - uniq[0] - uniq[1];
    }

    static constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kPairs = {
        {{0, 1}, {0, 2}, {1, 2}}};
    for (const auto& [i, j] : kPairs) {
        const Int d = gcd(uniq[i], uniq[j]);
        if (d > 1) {
            std::vector<Int> after = uniq;
            after[i] /= d;
            after[j] /= d;
            chain.push_back(ReductionStep{StepKind::kJohnson, uniq, after, d,
                                          std::make_pair(i, j)});
            const std::optional<Int> sub = reduce_rec(after, chain, core);
            if (!sub) {
                // Unreachable: a shared factor of the untouched value and the
                // divided pair would divide the original overall gcd.
                return std::nullopt;
            }
            const std::size_t untouched = 3 - i - j;
            return d * (*sub) + (d - 1) * uniq[untouched];
        }
    }

    const Triple t = Triple::create(uniq[0], uniq[1], uniq[2]);
    return core(t);
}

} // namespace

const char* step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::kSort: return "SORT";
        case StepKind::kDedupe: return "DEDUPE";
        case StepKind::kJohnson: return "JOHNSON";
        case StepKind::kSylvester: return "SYLVESTER";
        case StepKind::kUnitElement: return "UNIT_ELEMENT";
        case StepKind::kNoSolution: return "NO_SOLUTION";
    }
    throw std::logic_error("step_kind_name: unknown kind");
}

ReductionResult frobenius_general(const std::vector<Int>& values, const CoreFn& core) {
    if (values.size() < 2 || values.size() > 3) {
        throw std::invalid_argument("frobenius_general: need 2 or 3 values, got " +
                                    std::to_string(values.size()));
    }
    for (const Int& v : values) {
        if (v < 1) {
            throw std::invalid_argument("frobenius_general: values must be >= 1, got " + v.str());
        }
    }
    ReductionResult res;
    res.g = reduce_rec(values, res.chain, core);
    return res;
}

ReductionResult frobenius_general(const std::vector<Int>& values) {
    std::optional<FrobeniusSolution> core_solution;
    ReductionResult res = frobenius_general(values, [&core_solution](const Triple& t) {
        core_solution = solve(t);
        return core_solution->g;
    });
    res.core = std::move(core_solution);
    return res;
}

} // namespace frob
