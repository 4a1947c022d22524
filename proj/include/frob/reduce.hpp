#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "frob/frobenius.hpp"
#include "frob/modarith.hpp"

namespace frob {

// One normalization step applied on the way from raw input values to a
// pairwise-coprime three-generator core (or to a terminal answer).
enum class StepKind {
    kSort,         // reorder into ascending order
    kDedupe,       // drop repeated values
    kJohnson,      // divide a shared factor d out of one pair
    kSylvester,    // two-generator closed form x*y - x - y
    kUnitElement,  // a value 1 makes every integer representable: g = -1
    kNoSolution,   // overall gcd > 1: no finite answer exists
};

// Stable ALL_CAPS name ("SORT", "JOHNSON", ...).
const char* step_kind_name(StepKind k);

struct ReductionStep {
    StepKind kind;
    std::vector<Int> before;
    std::vector<Int> after;
    std::optional<Int> divisor;  // kJohnson: the extracted d
    std::optional<std::pair<std::size_t, std::size_t>> pair_indices;  // kJohnson
};

struct ReductionResult {
    std::optional<Int> g;  // nullopt <=> no finite answer (overall gcd > 1)
    std::vector<ReductionStep> chain;
    std::optional<FrobeniusSolution> core;  // set when the default core ran
};

// Answer for the pairwise-coprime three-generator instance the chain ends at.
using CoreFn = std::function<Int(const Triple&)>;

// General entry point: 2 or 3 values, each >= 1 (std::invalid_argument
// otherwise). Sorts, tests the overall gcd, applies the unit rule, dedupes,
// pulls shared factors out of pairs (scaling the sub-answer back by
// g = d*g' + (d-1)*untouched), closes two-generator instances directly, and
// hands any surviving three-generator core to solve() / the supplied core.
ReductionResult frobenius_general(const std::vector<Int>& values);
ReductionResult frobenius_general(const std::vector<Int>& values, const CoreFn& core);

} // namespace frob
