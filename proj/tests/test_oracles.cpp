#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "frob/errors.hpp"
#include "frob/frobenius.hpp"
#include "frob/modarith.hpp"
#include "frob/oracles.hpp"

using frob::Int;
using frob::NiSequence;
using frob::Triple;

TEST_CASE("sieve spot values") {
    CHECK(frob::sieve_frobenius({Int(3), Int(5)}) == 7);
    CHECK(frob::sieve_frobenius({Int(2), Int(3)}) == 1);
    CHECK(frob::sieve_frobenius({Int(1), Int(5)}) == -1);
    CHECK(frob::sieve_frobenius({Int(31), Int(41)}) == 31 * 41 - 31 - 41);
    CHECK(frob::sieve_frobenius({Int(6), Int(9), Int(20)}) == 43);
    CHECK(frob::sieve_frobenius({Int(9), Int(11), Int(20)}) == 79);
    // Duplicates collapse.
    CHECK(frob::sieve_frobenius({Int(5), Int(5), Int(3)}) == 7);
    CHECK_THROWS_AS(frob::sieve_frobenius({Int(4), Int(6)}), std::domain_error);
    CHECK_THROWS_AS(frob::sieve_frobenius({Int(5)}), std::domain_error);
    CHECK_THROWS_AS(frob::sieve_frobenius({Int(40000), Int(40001)}),
                    frob::OracleTooLarge);
}

TEST_CASE("oracle guards reject out-of-range instances") {
    const Triple big = Triple::create(Int(3001), Int(3002), Int(3005));
    CHECK_THROWS_AS(frob::tripathi_frobenius(big), frob::OracleTooLarge);
    const Triple huge =
        Triple::create(Int(1000001), Int(1000003), Int(1000007));
    CHECK_THROWS_AS(frob::brauer_shockley_frobenius(huge), frob::OracleTooLarge);
    CHECK_THROWS_AS(frob::nbar_scan(huge), frob::OracleTooLarge);
    const Triple mid = Triple::create(Int(100001), Int(100003), Int(100019));
    CHECK_THROWS_AS(frob::build_ni_sequence(mid), frob::OracleTooLarge);
}

TEST_CASE("all oracles agree with each other exhaustively (small)") {
    long checked = 0;
    for (long a1 = 2; a1 <= 25; ++a1) {
        for (long a2 = a1 + 1; a2 <= 28; ++a2) {
            if (std::gcd(a1, a2) != 1) continue;
            for (long a3 = a2 + 1; a3 <= 31; ++a3) {
                if (std::gcd(a1, a3) != 1 || std::gcd(a2, a3) != 1) continue;
                const Triple t = Triple::create(a1, a2, a3);
                const Int s = frob::sieve_frobenius({t.a1, t.a2, t.a3});
                CHECK(frob::tripathi_frobenius(t) == s);
                CHECK(frob::brauer_shockley_frobenius(t) == s);
                ++checked;
            }
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("nbar_scan golden values") {
    CHECK(frob::nbar_scan(Triple::create(9, 11, 20)) == 0);
    CHECK(frob::nbar_scan(Triple::create(53, 55, 82)) == 3);
    CHECK(frob::nbar_scan(Triple::create(19, 23, 28)) == 2);
    CHECK(frob::nbar_scan(Triple::create(74, 79, 81)) == 11);
    CHECK(frob::nbar_scan(Triple::create(77, 82, 83)) == 16);
}

TEST_CASE("ni sequence worked examples") {
    {
        const NiSequence seq = frob::build_ni_sequence(Triple::create(53, 55, 82));
        CHECK(seq.nbar == 3);
        REQUIRE(seq.entries.size() == 4);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(seq.entries[i].n == static_cast<long>(i));
        }
    }
    {
        const NiSequence seq = frob::build_ni_sequence(Triple::create(19, 23, 28));
        CHECK(seq.nbar == 2);
        REQUIRE(seq.entries.size() == 3);
        CHECK(seq.entries[0].n == 0);
        CHECK(seq.entries[1].n == 2);  // h(2) = 5
        CHECK(seq.entries[2].n == 1);  // h(1) = 12
        CHECK(seq.entries[1].h == 5);
        CHECK(seq.entries[2].h == 12);
    }
}

namespace {

/// Exhaustive pairwise-coprime triples with a1 in [lo1, hi1], spreads capped
/// so the loops stay quick.
template <typename Fn>
void for_small_triples(long lo1, long hi1, long spread, Fn&& fn) {
    for (long a1 = lo1; a1 <= hi1; ++a1) {
        for (long a2 = a1 + 1; a2 <= a1 + spread; ++a2) {
            if (std::gcd(a1, a2) != 1) continue;
            for (long a3 = a2 + 1; a3 <= a2 + spread; ++a3) {
                if (std::gcd(a1, a3) != 1 || std::gcd(a2, a3) != 1) continue;
                fn(Triple::create(a1, a2, a3));
            }
        }
    }
}

}  // namespace

TEST_CASE("ni sequence structure: permutation of 0..nbar ordered by h") {
    for_small_triples(2, 60, 6, [](const Triple& t) {
        const NiSequence seq = frob::build_ni_sequence(t);
        const long nbar = seq.nbar.convert_to<long>();
        REQUIRE(static_cast<long>(seq.entries.size()) == nbar + 1);
        std::set<long> seen;
        Int h_prev(-1), f_prev(-1);
        for (const auto& e : seq.entries) {
            seen.insert(e.n.convert_to<long>());
            CHECK(e.n >= 0);
            CHECK(e.n <= nbar);
            CHECK(e.h > h_prev);   // ordered by h, strictly
            CHECK(e.f > f_prev);   // minimality forces rising f
            CHECK(e.f < t.a1 * t.a2);
            CHECK(e.h == frob::mod_pos(t.a0 * e.n, t.a1));
            CHECK(e.f == t.a2 * e.h + t.a3 * e.n);
            h_prev = e.h;
            f_prev = e.f;
        }
        CHECK(static_cast<long>(seen.size()) == nbar + 1);  // all distinct, all present
        CHECK(seq.nbar == frob::nbar_scan(t));
    });
}

TEST_CASE("ni sequence minimality matches its defining property") {
    // Each entry must carry the least f among all n with h(n) above the
    // previous entry's h.
    for_small_triples(2, 40, 5, [](const Triple& t) {
        const NiSequence seq = frob::build_ni_sequence(t);
        const long a1 = t.a1.convert_to<long>();
        for (std::size_t i = 1; i < seq.entries.size(); ++i) {
            const Int h_prev = seq.entries[i - 1].h;
            Int best_f(-1);
            for (long n = 0; n < a1; ++n) {
                const Int h = frob::mod_pos(t.a0 * n, t.a1);
                if (h <= h_prev) continue;
                const Int f = t.a2 * h + t.a3 * n;
                if (best_f < 0 || f < best_f) best_f = f;
            }
            CHECK(seq.entries[i].f == best_f);
        }
    });
}

TEST_CASE("residue-class minima match the piecewise formula") {
    // For each r in (0, a1), the direct minimum of F(n, r) must equal the
    // staircase read off the sequence: f(n_i) - a2*r on the step holding r,
    // a1*a2 - a2*r above the final step.
    for_small_triples(2, 35, 4, [](const Triple& t) {
        if (t.a1 > 200) return;
        const NiSequence seq = frob::build_ni_sequence(t);
        const long a1 = t.a1.convert_to<long>();
        for (long r = 1; r < a1; ++r) {
            Int direct(-1);
            for (long n = 0; n < a1; ++n) {
                const Int f =
                    t.a2 * frob::mod_pos(t.a0 * n - r, t.a1) + t.a3 * n;
                if (direct < 0 || f < direct) direct = f;
            }
            Int piecewise(-1);
            const auto& es = seq.entries;
            for (std::size_t i = 1; i < es.size(); ++i) {
                if (es[i - 1].h < r && r <= es[i].h) {
                    piecewise = es[i].f - t.a2 * r;
                    break;
                }
            }
            if (piecewise < 0) {
                REQUIRE(r > es.back().h);
                piecewise = t.a1 * t.a2 - t.a2 * r;
            }
            CHECK(direct == piecewise);
        }
    });
}

TEST_CASE("step-ladder values obey their defining minimality and linkage") {
    for_small_triples(2, 50, 5, [](const Triple& t) {
        const NiSequence seq = frob::build_ni_sequence(t);
        const long a1 = t.a1.convert_to<long>();
        const Int nbar = seq.nbar;
        const std::size_t m = seq.entries.size() - 1;
        const auto h_inv = [&](const Int& d) {
            return frob::mod_pos(t.a0_inv * d, t.a1);
        };
        const auto h_inv_s = [&](const Int& d) {
            return frob::mod_pos(-t.a0_inv * d, t.a1);
        };
        for (std::size_t i = 1; i <= m; ++i) {
            const Int ni = seq.entries[i].n;
            const Int di = seq.delta[i];
            const Int dot = seq.delta_dot[i];
            const Int bar = seq.delta_bar[i];
            CHECK(di == seq.entries[i].h - seq.entries[i - 1].h);
            // Forward rung: smallest positive step whose preimage is within
            // reach; re-derive by scan.
            Int want_dot(-1);
            for (long d = 1; d <= a1; ++d) {
                if (h_inv(Int(d)) <= ni) {
                    want_dot = d;
                    break;
                }
            }
            CHECK(dot == want_dot);
            // Companion rung: same, against the distance left to the cutoff.
            // At n_i == nbar no real step exists and a1 acts as the sentinel.
            Int want_bar(-1);
            for (long d = 1; d <= a1; ++d) {
                const Int pre = d == a1 ? Int(0) : h_inv_s(Int(d));
                if (pre <= nbar - ni) {
                    want_bar = d;
                    break;
                }
            }
            CHECK(bar == want_bar);
            if (ni == nbar) {
                CHECK(bar == t.a1);
            } else {
                CHECK(bar < t.a1);
            }
            // The step into i is the smaller rung, and the rungs never tie.
            CHECK(dot != bar);
            CHECK(di == (dot < bar ? dot : bar));
            // The winning rung also explains the jump in n.
            if (di == dot) {
                CHECK(ni == seq.entries[i - 1].n + h_inv(dot));
            } else {
                CHECK(ni == seq.entries[i - 1].n - h_inv_s(bar));
            }
        }
        // Monotonicity across positions: larger n means a smaller-or-equal
        // forward rung and a larger-or-equal companion rung.
        for (std::size_t i = 1; i <= m; ++i) {
            for (std::size_t k = 1; k <= m; ++k) {
                if (seq.entries[k].n > seq.entries[i].n) {
                    CHECK(seq.delta_bar[k] >= seq.delta_bar[i]);
                    CHECK(seq.delta_dot[i] >= seq.delta_dot[k]);
                }
            }
        }
    });
}

TEST_CASE("forward-step identity on random points") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 200; ++it) {
        const long a1 = 3 + static_cast<long>(rng() % 997);
        const long a0 = 1 + static_cast<long>(rng() % (a1 - 1));
        if (std::gcd(a0, a1) != 1) continue;
        const Int a0_inv = frob::mod_inverse(Int(a0), Int(a1));
        for (int jt = 0; jt < 20; ++jt) {
            const long n = static_cast<long>(rng() % a1);
            const long d = 1 + static_cast<long>(rng() % (a1 - 1));
            const Int h = frob::mod_pos(Int(a0) * n, Int(a1));
            if (h + d >= a1) continue;
            const Int pre = frob::mod_pos(a0_inv * d, Int(a1));
            CHECK(frob::mod_pos(Int(a0) * (n + pre), Int(a1)) == h + d);
        }
    }
}

TEST_CASE("shortest-path oracle handles a mid-size instance quickly") {
    const Triple t = Triple::create(Int(99991), Int(100003), Int(100019));
    const Int g = frob::brauer_shockley_frobenius(t);
    CHECK(g > 0);
    CHECK(g == frob::solve(t).g);
}
