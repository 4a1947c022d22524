#pragma once

#include <vector>

#include "frob/frobenius.hpp"
#include "frob/modarith.hpp"

namespace frob {

// Independent slow references. None of these share logic with solve(): they
// work from first principles (dynamic programming, shortest paths, direct
// minimax, linear scans) so that agreement with solve() is meaningful.
// Each enforces a resource guard and throws OracleTooLarge beyond it.

// Representability sieve over [0, product of the two largest distinct
// values). Accepts 2 or 3 values, each >= 1, overall gcd 1; returns -1 when
// every positive integer is representable. Guard: at most 2*10^7 cells.
Int sieve_frobenius(const std::vector<Int>& values);

// Shortest-path formulation: for each residue class modulo a1, the smallest
// integer reachable with steps a2 and a3; the answer is the largest of those
// minus a1. Label-correcting relaxation over a1 nodes with 2 arcs each.
// Guard: a1 <= 10^6 and a1*a3 < 2^62.
Int brauer_shockley_frobenius(const Triple& t);

// Direct minimax: max over r in (0, a1) of min over n in [0, a1) of
// a2*((a0*n - r) mod a1) + a3*n, minus a1. Quadratic in a1.
// Guard: a1 <= 3000 and a1*a3 < 2^61.
Int tripathi_frobenius(const Triple& t);

// The cutoff by its definition: the smallest n >= 0 such that
// f(n+1) = a2*((a0*(n+1)) mod a1) + a3*(n+1) exceeds a1*a2, found by a
// linear scan. Guard: a1 <= 10^6 and a1*a3 < 2^61.
Int nbar_scan(const Triple& t);

struct NiEntry {
    Int n;
    Int h;  // (a0 * n) mod a1
    Int f;  // a2 * h + a3 * n
};

// The minimizer sequence built directly from its defining conditions: start
// at n = 0 and repeatedly take, among all n in [0, a1) whose h exceeds the
// previous entry's h, the one with the smallest f, while that f stays below
// a1*a2. The jump ladders come from the definitions too:
//   delta[i]     = h(n_i) - h(n_{i-1})
//   delta_dot[i] = smallest D > 0 with (a0^{-1} * D mod a1) <= n_i
//   delta_bar[i] = smallest D > 0 with (-a0^{-1} * D mod a1) <= nbar - n_i
// All three vectors use 1-based index semantics (slot 0 is unused zero).
// `nbar` is computed independently by the same scan as nbar_scan.
// Guard: a1 <= 10^5 and a1*a3 < 2^61.
struct NiSequence {
    std::vector<NiEntry> entries;  // entries[0] is n_0 = 0
    Int nbar;
    std::vector<Int> delta;
    std::vector<Int> delta_dot;
    std::vector<Int> delta_bar;
};
NiSequence build_ni_sequence(const Triple& t);

} // namespace frob
