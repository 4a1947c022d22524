#include "frob/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <vector>

namespace frob {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

i64 to_i64(const Int& v) { return v.convert_to<i64>(); }

void guard_small(const Triple& t, i64 a1_max, int product_bits, const char* who) {
    if (t.a1 > a1_max) {
        throw OracleTooLarge(std::string(who) + ": a1 " + t.a1.str() + " exceeds guard " +
                             std::to_string(a1_max));
    }
    if (t.a1 * t.a3 >= (Int(1) << product_bits)) {
        throw OracleTooLarge(std::string(who) + ": a1*a3 exceeds the word-size guard");
    }
}

} // namespace

Int sieve_frobenius(const std::vector<Int>& values) {
    if (values.size() < 2 || values.size() > 3) {
        throw std::domain_error("sieve_frobenius: need 2 or 3 values");
    }
    std::vector<Int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 1) {
        throw std::domain_error("sieve_frobenius: values must be >= 1");
    }
    Int g_all = sorted[0];
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        g_all = gcd(g_all, sorted[i]);
    }
    if (g_all != 1) {
        throw std::domain_error("sieve_frobenius: overall gcd must be 1");
    }
    if (sorted.front() == 1) {
        return Int(-1);
    }
    std::vector<Int> uniq;
    for (const Int& v : sorted) {
        if (uniq.empty() || uniq.back() != v) {
            uniq.push_back(v);
        }
    }
    // Cell count: the classical bound keeps every non-representable integer
    // below the product of the two largest distinct values.
    const Int bound_int = uniq[uniq.size() - 1] * uniq[uniq.size() - 2];
    if (bound_int > 20'000'000) {
        throw OracleTooLarge("sieve_frobenius: table of " + bound_int.str() +
                             " cells exceeds the 2*10^7 guard");
    }
    const i64 bound = to_i64(bound_int);
    std::vector<char> rep(static_cast<std::size_t>(bound), 0);
    rep[0] = 1;
    for (const Int& v : uniq) {
        const i64 step = to_i64(v);
        for (i64 i = step; i < bound; ++i) {
            if (rep[static_cast<std::size_t>(i - step)]) {
                rep[static_cast<std::size_t>(i)] = 1;
            }
        }
    }
    for (i64 i = bound - 1; i >= 1; --i) {
        if (!rep[static_cast<std::size_t>(i)]) {
            return Int(i);
        }
    }
    return Int(-1);
}

Int brauer_shockley_frobenius(const Triple& t) {
    guard_small(t, 1'000'000, 62, "brauer_shockley_frobenius");
    const i64 a1 = to_i64(t.a1);
    const u64 w2 = t.a2.convert_to<u64>();
    const u64 w3 = t.a3.convert_to<u64>();
    const i64 s2 = to_i64(t.a2 % t.a1);
    const i64 s3 = to_i64(t.a3 % t.a1);

    constexpr u64 kInf = std::numeric_limits<u64>::max();
    std::vector<u64> dist(static_cast<std::size_t>(a1), kInf);
    std::vector<char> in_queue(static_cast<std::size_t>(a1), 0);
    dist[0] = 0;
    std::deque<i64> queue{0};
    in_queue[0] = 1;
    while (!queue.empty()) {
        const i64 u = queue.front();
        queue.pop_front();
        in_queue[static_cast<std::size_t>(u)] = 0;
        const u64 du = dist[static_cast<std::size_t>(u)];
        const i64 steps[2] = {s2, s3};
        const u64 weights[2] = {w2, w3};
        for (int k = 0; k < 2; ++k) {
            i64 v = u + steps[k];
            if (v >= a1) {
                v -= a1;
            }
            const u64 nd = du + weights[k];
            if (nd < dist[static_cast<std::size_t>(v)]) {
                dist[static_cast<std::size_t>(v)] = nd;
                if (!in_queue[static_cast<std::size_t>(v)]) {
                    in_queue[static_cast<std::size_t>(v)] = 1;
                    queue.push_back(v);
                }
            }
        }
    }
    u64 worst = 0;
    for (const u64 d : dist) {
        if (d == kInf) {
            throw InvariantViolation("brauer_shockley_frobenius: unreachable residue");
        }
        worst = std::max(worst, d);
    }
    return Int(worst) - t.a1;
}

Int tripathi_frobenius(const Triple& t) {
    guard_small(t, 3000, 61, "tripathi_frobenius");
    const i64 a1 = to_i64(t.a1);
    const i64 a2 = to_i64(t.a2);
    const i64 a3 = to_i64(t.a3);
    const i64 a0 = to_i64(t.a0);

    std::vector<i64> h(static_cast<std::size_t>(a1));
    h[0] = 0;
    for (i64 n = 1; n < a1; ++n) {
        i64 next = h[static_cast<std::size_t>(n - 1)] + a0;
        if (next >= a1) {
            next -= a1;
        }
        h[static_cast<std::size_t>(n)] = next;
    }

    i64 best_max = std::numeric_limits<i64>::min();
    for (i64 r = 1; r < a1; ++r) {
        i64 best_min = std::numeric_limits<i64>::max();
        for (i64 n = 0; n < a1; ++n) {
            i64 residue = h[static_cast<std::size_t>(n)] - r;
            if (residue < 0) {
                residue += a1;
            }
            const i64 candidate = a2 * residue + a3 * n;
            if (candidate < best_min) {
                best_min = candidate;
            }
        }
        if (best_min > best_max) {
            best_max = best_min;
        }
    }
    return Int(best_max) - t.a1;
}

Int nbar_scan(const Triple& t) {
    guard_small(t, 1'000'000, 61, "nbar_scan");
    const i64 a1 = to_i64(t.a1);
    const i64 a2 = to_i64(t.a2);
    const i64 a3 = to_i64(t.a3);
    const i64 a0 = to_i64(t.a0);
    const i64 cap = a1 * a2;

    i64 hboundary = 0;
    for (i64 n = 0;; ++n) {
        // f(n+1) via the running residue h(n+1).
        hboundary += a0;
        if (hboundary >= a1) {
            hboundary -= a1;
        }
        const i64 f_next = a2 * hboundary + a3 * (n + 1);
        if (f_next > cap) {
            return Int(n);
        }
        if (n >= a1) {
            throw InvariantViolation("nbar_scan: no cutoff below a1");
        }
    }
}

NiSequence build_ni_sequence(const Triple& t) {
    guard_small(t, 100'000, 61, "build_ni_sequence");
    const i64 a1 = to_i64(t.a1);
    const i64 a2 = to_i64(t.a2);
    const i64 a3 = to_i64(t.a3);
    const i64 a0 = to_i64(t.a0);
    const i64 a0_inv = to_i64(t.a0_inv);
    const i64 cap = a1 * a2;

    // All (n, h, f) points, ordered by h. h is a bijection on [0, a1), so the
    // order is strict.
    std::vector<i64> h(static_cast<std::size_t>(a1));
    std::vector<i64> n_of_h(static_cast<std::size_t>(a1));
    h[0] = 0;
    n_of_h[0] = 0;
    for (i64 n = 1; n < a1; ++n) {
        i64 next = h[static_cast<std::size_t>(n - 1)] + a0;
        if (next >= a1) {
            next -= a1;
        }
        h[static_cast<std::size_t>(n)] = next;
        n_of_h[static_cast<std::size_t>(next)] = n;
    }
    const auto f_of = [&](i64 n) { return a2 * h[static_cast<std::size_t>(n)] + a3 * n; };

    // suffix_min_idx[k] = the h-position in [k, a1) whose point has minimal f.
    std::vector<i64> suffix_min_idx(static_cast<std::size_t>(a1) + 1);
    suffix_min_idx[static_cast<std::size_t>(a1)] = -1;
    for (i64 k = a1 - 1; k >= 0; --k) {
        const i64 below = suffix_min_idx[static_cast<std::size_t>(k + 1)];
        if (below < 0 ||
            f_of(n_of_h[static_cast<std::size_t>(k)]) < f_of(n_of_h[static_cast<std::size_t>(below)])) {
            suffix_min_idx[static_cast<std::size_t>(k)] = k;
        } else {
            suffix_min_idx[static_cast<std::size_t>(k)] = below;
        }
    }

    NiSequence seq;
    seq.entries.push_back(NiEntry{Int(0), Int(0), Int(0)});
    i64 h_prev = 0;
    for (;;) {
        if (h_prev + 1 >= a1) {
            break;
        }
        const i64 pos = suffix_min_idx[static_cast<std::size_t>(h_prev + 1)];
        if (pos < 0) {
            break;
        }
        const i64 n = n_of_h[static_cast<std::size_t>(pos)];
        const i64 f = f_of(n);
        if (f == cap) {
            throw InvariantViolation("build_ni_sequence: f hit a1*a2 exactly");
        }
        if (f > cap) {
            break;
        }
        seq.entries.push_back(NiEntry{Int(n), Int(h[static_cast<std::size_t>(n)]), Int(f)});
        h_prev = h[static_cast<std::size_t>(n)];
    }

    // Independent cutoff scan (same definition nbar_scan uses).
    {
        i64 hb = 0;
        for (i64 n = 0;; ++n) {
            hb += a0;
            if (hb >= a1) {
                hb -= a1;
            }
            if (a2 * hb + a3 * (n + 1) > cap) {
                seq.nbar = n;
                break;
            }
            if (n >= a1) {
                throw InvariantViolation("build_ni_sequence: no cutoff below a1");
            }
        }
    }

    const i64 nbar = to_i64(seq.nbar);
    const std::size_t m = seq.entries.size() - 1;
    seq.delta.assign(m + 1, Int(0));
    seq.delta_dot.assign(m + 1, Int(0));
    seq.delta_bar.assign(m + 1, Int(0));
    for (std::size_t i = 1; i <= m; ++i) {
        seq.delta[i] = seq.entries[i].h - seq.entries[i - 1].h;
        const i64 ni = to_i64(seq.entries[i].n);
        // Smallest D > 0 whose forward preimage sits at or before n_i.
        for (i64 d = 1;; ++d) {
            if (d > a1) {
                throw InvariantViolation("build_ni_sequence: forward ladder scan ran off");
            }
            const i64 pre = static_cast<i64>((static_cast<u64>(a0_inv) * static_cast<u64>(d)) %
                                             static_cast<u64>(a1));
            if (pre <= ni) {
                seq.delta_dot[i] = d;
                break;
            }
        }
        // Smallest D > 0 whose companion preimage sits at or before nbar - n_i.
        for (i64 d = 1;; ++d) {
            if (d > a1) {
                throw InvariantViolation("build_ni_sequence: companion ladder scan ran off");
            }
            const i64 fwd = static_cast<i64>((static_cast<u64>(a0_inv) * static_cast<u64>(d)) %
                                             static_cast<u64>(a1));
            const i64 pre = fwd == 0 ? 0 : a1 - fwd;
            if (pre <= nbar - ni) {
                seq.delta_bar[i] = d;
                break;
            }
        }
    }
    return seq;
}

} // namespace frob
