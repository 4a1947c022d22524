#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "frob/modarith.hpp"

namespace frob {

// Parameters of the residue sequence x -> (p * x) mod q, with 0 < p < q and
// gcd(p, q) = 1. Within one period the sequence rises in runs of step p when
// 2p < q and falls in runs of step q - p when 2p > q; 2p == q only for (1, 2).
struct ArmParams {
    Int p;
    Int q;
    ArmParams(Int p_, Int q_);  // validates the constraints above
};

// (p * x) mod q. Total for every integer x, negative included.
Int arm_eval(const ArmParams& s, const Int& x);

// The companion parameters (q - p, q), whose sequence mirrors this one
// value-wise: eval(x) + sibling_eval(x) == q whenever eval(x) != 0.
// (1, 2) is its own companion and is rejected with SelfSibling.
ArmParams sibling(const ArmParams& s);

// The x in [0, q) with eval(x) == y. Requires 0 <= y < q.
Int arm_inverse(const ArmParams& s, const Int& y);

// Comparison of 2*vbar against v at one level of the tower below.
enum class LevelBranch {
    kLow,   // 2*vbar <  v
    kHalf,  // 2*vbar == v (forces (vbar, v) == (1, 2))
    kHigh,  // 2*vbar >  v
};

struct DiffModLevel {
    Int vbar;
    Int v;
};

// The tower of pairs built from (p, q) by the rule: from (vbar, v) the next
// pair is (vbar - (v mod vbar), vbar) when 2*vbar <= v, and
// ((v mod (v - vbar)), v - vbar) when 2*vbar > v. Level 1 is (p, q); the
// tower ends at (1, 1) or (0, 1). Each level's v is the modulus of the next
// level's "border" sequence, which is what the descent algorithms exploit.
// Levels are 1-based and materialized on demand, so callers that stop early
// never pay for deep levels.
class DiffModSeq {
public:
    explicit DiffModSeq(const ArmParams& s);

    const DiffModLevel& level(std::size_t j);  // j >= 1, extends as needed
    LevelBranch branch(std::size_t j);         // comparison at level j
    bool is_terminal(std::size_t j);           // v_j == 1
    std::size_t levels_materialized() const { return levels_.size(); }

    std::size_t tau();                             // terminal level index (forces)
    const std::vector<DiffModLevel>& all_levels(); // forces through the terminal

private:
    void ensure(std::size_t j);
    std::vector<DiffModLevel> levels_;
};

// Fully materialized tower for params `s` (through the terminal level).
DiffModSeq diff_mod_sequence(const ArmParams& s);

// Same-level pair of the companion sequence's tower: (v - vbar, v). Valid for
// the seed level (prev_branch == nullopt) and below any level that did not
// split exactly in half; a kHalf predecessor throws InvalidLevel.
DiffModLevel sibling_diff_mod(const DiffModLevel& pair_j,
                              std::optional<LevelBranch> prev_branch);

struct IndexValue {
    Int index;
    Int value;
};

// Smallest index i > 0 with eval(i) <= limit, plus the value there.
// Requires 0 <= limit < q. limit >= 0 guarantees existence since eval(q) = 0.
IndexValue first_index_leq(const ArmParams& s, const Int& limit);

// Outcome of the ratio descent: the smallest index x > 0 with
// eval(x) <= limit * x, the value there, the level the descent resolved at,
// and the per-level pairs and exact limits walked on the way down.
struct RatioDescentResult {
    Int index;
    Int value_at_min;
    std::size_t sigma = 0;
    std::vector<DiffModLevel> levels;   // levels 1..sigma
    std::vector<Rational> limit_chain;  // limits L_1..L_sigma
};

// Requires p > 1 and 0 < limit < p. The excluded edges have closed answers
// the caller applies itself: p <= limit -> index 1, and p == 1 -> index q.
RatioDescentResult first_ratio_below(const ArmParams& s, const Rational& limit);

} // namespace frob
