#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frob/arm.hpp"
#include "frob/modarith.hpp"

namespace frob {

// A validated instance: 1 < a1 < a2 < a3, pairwise coprime, plus the two
// derived modular constants everything downstream keys off.
struct Triple {
    Int a1;
    Int a2;
    Int a3;
    Int a0;      // (-(a2^{-1} mod a1) * a3) mod a1
    Int a0_inv;  // a0^{-1} mod a1

    static Triple create(const Int& a1, const Int& a2, const Int& a3);
};

// The residue multiplier: smallest a0 >= 0 with a2*a0 + a3 = 0 (mod a1).
// Coprimality forces 0 < a0 < a1.
Int derive_a0(const Int& a1, const Int& a2, const Int& a3);

// Which of the seven mutually exclusive closed forms produced the answer.
enum class CaseTag {
    kTwoVarLike,  // a3 + a2*a0 > a1*a2: the third generator changes nothing
    kIncSmall,    // rising residue walk, shallow cutoff (alpha_bar < theta)
    kDecSmall,    // falling residue walk, shallow cutoff
    kPsiEdge,     // deep cutoff landing exactly at the end of a run
    kPsiInc,      // deep cutoff inside a rising run
    kPsiDecEq,    // deep cutoff inside a falling run, boundary subcase
    kPsiDecGt,    // deep cutoff inside a falling run, interior subcase
};

// Stable ALL_CAPS name for output records ("TWO_VAR_LIKE", "PSI_EDGE", ...).
const char* case_tag_name(CaseTag t);

// Shape constants of the non-trivial cases. `increasing` mirrors 2*a0 < a1:
// whether the residue walk h(n) = (a0*n) mod a1 rises or falls along runs.
struct CaseParams {
    Int alpha;      // run-count parameter: a0 when rising, a1 - a0 when falling
    Int alpha_bar;  // first element of the run-boundary sequence
    Int beta;       // a2*alpha + a3 when rising, a2*alpha - a3 when falling
    Rational theta; // exact cutoff ratio a1*a3 / beta, always > 1
    bool increasing;
};

// One row of a descent table kept for diagnostics and the CLI trace.
struct DescentRow {
    Int vbar;
    Int v;
    std::optional<Rational> limit;  // set on ratio-descent rows only
};

struct SolveTrace {
    std::optional<CaseParams> params;     // absent for kTwoVarLike
    std::vector<DescentRow> ratio_rows;   // ratio descent, rows 1..sigma
    std::vector<DescentRow> index_rows;   // cutoff-locating walk, rows 1..psi+1
    std::optional<Int> arm_first;         // candidate value(s) before the final -a1
    std::optional<Int> arm_second;
};

struct FrobeniusSolution {
    Int g;
    CaseTag case_tag;
    std::optional<Int> nbar;            // cutoff index (0 for kTwoVarLike)
    std::optional<std::size_t> sigma;   // ratio-descent resolution level
    std::optional<std::size_t> psi;     // cutoff-locating level
    std::optional<Int> epsilon;         // run-correction count (kPsiInc / kPsiDec*)
    std::size_t diffmod_steps = 0;      // total tower levels materialized
    SolveTrace trace;
};

// True when a3 + a2*a0 > a1*a2, i.e. the two-generator answer stands. Also
// enforces two structural facts: the sum never equals a1*a2, and 2*a0 == a1
// forces the sum above a1*a2 (so only this case can see 2*a0 == a1).
bool case1_check(const Triple& t);

// g for the two-generator case: a1*a2 - a1 - a2.
Int g_case1(const Triple& t);

// Shape constants for the remaining cases; requires !case1_check(t).
CaseParams derive_case_params(const Triple& t);

// The cutoff nbar: last n >= 0 before the weighted walk
// f(n) = a2*h(n) + a3*n first exceeds a1*a2. Closed forms when
// alpha_bar < theta; otherwise found by the ratio descent, whose bookkeeping
// is returned alongside. Always 0 < nbar < a1 here.
struct NbarResult {
    Int nbar;
    std::optional<RatioDescentResult> descent;  // set when the descent ran
};
NbarResult compute_nbar(const Triple& t, const CaseParams& cp);

// The level psi of the tower over (a0_inv, a1) with v_{psi+1} <= nbar < v_psi,
// plus both bracketing levels and the rows walked.
struct PsiResult {
    std::size_t psi = 0;
    DiffModLevel at_psi;
    DiffModLevel at_next;
    std::vector<DiffModLevel> rows;  // levels 1..psi+1
};
PsiResult compute_psi(const Triple& t, const Int& nbar);

// One evaluated closed form: g plus the compared candidates and, where a
// run correction is involved, its count.
struct CaseResult {
    Int g;
    CaseTag tag;
    Int arm_first;
    std::optional<Int> arm_second;
    std::optional<Int> epsilon;
};

CaseResult g_inc_small(const Triple& t, const CaseParams& cp, const Int& nbar);
CaseResult g_dec_small(const Triple& t, const CaseParams& cp, const Int& nbar);
CaseResult g_psi_edge(const Triple& t, const Int& nbar, const PsiResult& pr);
CaseResult g_psi_inc(const Triple& t, const Int& nbar, const PsiResult& pr);
CaseResult g_psi_dec(const Triple& t, const Int& nbar, const PsiResult& pr);

// Full dispatch: exact g(a1, a2, a3) for a validated triple, with the case
// tag, descent bookkeeping, and step instrumentation filled in.
FrobeniusSolution solve(const Triple& t);

} // namespace frob
