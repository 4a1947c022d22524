#include "frob/frobenius.hpp"

#include <algorithm>
#include <utility>

namespace frob {

namespace {

Int max_int(const Int& a, const Int& b) { return a >= b ? a : b; }

// h(n) = (a0 * n) mod a1 and its companion walk; total for any integer n.
Int h_of(const Triple& t, const Int& n) { return mod_pos(t.a0 * n, t.a1); }
Int hs_of(const Triple& t, const Int& n) { return mod_pos((t.a1 - t.a0) * n, t.a1); }

} // namespace

Int derive_a0(const Int& a1, const Int& a2, const Int& a3) {
    return mod_pos(-mod_inverse(a2, a1) * a3, a1);
}

Triple Triple::create(const Int& a1, const Int& a2, const Int& a3) {
    if (!(1 < a1 && a1 < a2 && a2 < a3)) {
        throw std::invalid_argument("Triple: need 1 < a1 < a2 < a3, got (" + a1.str() + ", " +
                                    a2.str() + ", " + a3.str() + ")");
    }
    if (gcd(a1, a2) != 1 || gcd(a1, a3) != 1 || gcd(a2, a3) != 1) {
        throw std::invalid_argument("Triple: values must be pairwise coprime, got (" + a1.str() +
                                    ", " + a2.str() + ", " + a3.str() + ")");
    }
    Triple t;
    t.a1 = a1;
    t.a2 = a2;
    t.a3 = a3;
    t.a0 = derive_a0(a1, a2, a3);
    if (!(0 < t.a0 && t.a0 < a1)) {
        throw InvariantViolation("Triple: a0 outside (0, a1)");
    }
    t.a0_inv = mod_inverse(t.a0, a1);
    return t;
}

const char* case_tag_name(CaseTag t) {
    switch (t) {
        case CaseTag::kTwoVarLike: return "TWO_VAR_LIKE";
        case CaseTag::kIncSmall: return "INC_SMALL";
        case CaseTag::kDecSmall: return "DEC_SMALL";
        case CaseTag::kPsiEdge: return "PSI_EDGE";
        case CaseTag::kPsiInc: return "PSI_INC";
        case CaseTag::kPsiDecEq: return "PSI_DEC_EQ";
        case CaseTag::kPsiDecGt: return "PSI_DEC_GT";
    }
    throw std::logic_error("case_tag_name: unknown tag");
}

bool case1_check(const Triple& t) {
    const Int sum = t.a3 + t.a2 * t.a0;
    const Int prod = t.a1 * t.a2;
    if (sum == prod) {
        // sum = f(1); equality would force a2 to divide a multiple of itself
        // below a2, which coprimality rules out.
        throw InvariantViolation("case1_check: a3 + a2*a0 == a1*a2 for (" + t.a1.str() + ", " +
                                 t.a2.str() + ", " + t.a3.str() + ")");
    }
    if (2 * t.a0 == t.a1 && sum < prod) {
        // 2*a0 == a1 forces (a0, a1) == (1, 2), whose sum side is structural.
        throw InvariantViolation("case1_check: 2*a0 == a1 must imply the two-generator case");
    }
    return sum > prod;
}

Int g_case1(const Triple& t) {
    return t.a1 * t.a2 - t.a1 - t.a2;
}

CaseParams derive_case_params(const Triple& t) {
    if (case1_check(t)) {
        throw std::domain_error("derive_case_params: instance is in the two-generator case");
    }
    CaseParams cp;
    cp.increasing = 2 * t.a0 < t.a1;
    if (cp.increasing) {
        cp.alpha = t.a0;
        cp.alpha_bar = mod_pos(t.a1, cp.alpha);
        cp.beta = t.a2 * cp.alpha + t.a3;
    } else {
        cp.alpha = t.a1 - t.a0;
        cp.alpha_bar = cp.alpha - mod_pos(t.a1, cp.alpha);
        cp.beta = t.a2 * cp.alpha - t.a3;
    }
    if (cp.beta <= 0) {
        // Falling branch: a3 + a2*a0 < a1*a2 rearranges to a3 < a2*alpha.
        throw InvariantViolation("derive_case_params: beta must be positive");
    }
    cp.theta = Rational(t.a1 * t.a3, cp.beta);
    if (rat_cmp(cp.theta, Rational(1)) != std::strong_ordering::greater) {
        throw InvariantViolation("derive_case_params: theta must exceed 1");
    }
    return cp;
}

NbarResult compute_nbar(const Triple& t, const CaseParams& cp) {
    NbarResult out;
    const auto cmp = rat_cmp(Rational(cp.alpha_bar), cp.theta);
    if (cmp == std::strong_ordering::equal) {
        throw InvariantViolation("compute_nbar: alpha_bar equals theta");
    }
    if (cmp == std::strong_ordering::less) {
        out.nbar = cp.increasing ? Int(ceil_div(t.a1 * t.a2, cp.beta) - 1)
                                 : floor_div(t.a1, cp.alpha);
    } else {
        // Deep case: the first weighted-walk peak past a1*a2 shows up as the
        // first border element whose value/index ratio drops below theta.
        const ArmParams border(cp.alpha_bar, cp.alpha);
        out.descent = first_ratio_below(border, cp.theta);
        if (out.descent->value_at_min == 0) {
            // A zero resolution would place the peak at index alpha itself,
            // which the cutoff structure rules out.
            throw InvariantViolation("compute_nbar: ratio descent resolved to zero");
        }
        out.nbar = mod_pos(-t.a0_inv * (out.descent->value_at_min + t.a0), t.a1);
    }
    if (!(0 < out.nbar && out.nbar < t.a1)) {
        throw InvariantViolation("compute_nbar: nbar " + out.nbar.str() + " outside (0, a1)");
    }
    return out;
}

PsiResult compute_psi(const Triple& t, const Int& nbar) {
    if (!(0 < nbar && nbar < t.a1)) {
        throw std::domain_error("compute_psi: nbar must lie in (0, a1)");
    }
    DiffModSeq seq(ArmParams{t.a0_inv, t.a1});
    std::size_t j = 1;
    while (nbar < seq.level(j + 1).v) {
        ++j;
    }
    PsiResult pr;
    pr.psi = j;
    pr.at_psi = seq.level(j);
    pr.at_next = seq.level(j + 1);
    for (std::size_t k = 1; k <= j + 1; ++k) {
        pr.rows.push_back(seq.level(k));
    }
    return pr;
}

CaseResult g_inc_small(const Triple& t, const CaseParams& cp, const Int& nbar) {
    if (!cp.increasing) {
        throw std::domain_error("g_inc_small: rising-walk case only");
    }
    CaseResult r;
    r.tag = CaseTag::kIncSmall;
    r.arm_first = t.a3 * nbar + t.a2 * (t.a0 - 1);
    r.arm_second = t.a2 * (t.a1 - nbar * t.a0 - 1);
    r.g = max_int(r.arm_first, *r.arm_second) - t.a1;
    return r;
}

CaseResult g_dec_small(const Triple& t, const CaseParams& cp, const Int& nbar) {
    if (cp.increasing) {
        throw std::domain_error("g_dec_small: falling-walk case only");
    }
    CaseResult r;
    r.tag = CaseTag::kDecSmall;
    r.arm_first = t.a3 * nbar + t.a2 * (mod_pos(t.a1, cp.alpha) - 1);
    r.arm_second = t.a3 * (nbar - 1) + t.a2 * (cp.alpha - 1);
    r.g = max_int(r.arm_first, *r.arm_second) - t.a1;
    return r;
}

CaseResult g_psi_edge(const Triple& t, const Int& nbar, const PsiResult& pr) {
    if (nbar != pr.at_psi.v - 1) {
        throw std::domain_error("g_psi_edge: nbar must end the run exactly");
    }
    CaseResult r;
    r.tag = CaseTag::kPsiEdge;
    r.arm_first = t.a3 * nbar + t.a2 * (h_of(t, pr.at_psi.vbar) - 1);
    r.arm_second = t.a3 * (pr.at_psi.vbar - 1) +
                   t.a2 * (hs_of(t, pr.at_psi.v - pr.at_psi.vbar) - 1);
    r.g = max_int(r.arm_first, *r.arm_second) - t.a1;
    return r;
}

CaseResult g_psi_inc(const Triple& t, const Int& nbar, const PsiResult& pr) {
    if (!(nbar < pr.at_psi.v - 1 && 2 * pr.at_psi.vbar < pr.at_psi.v)) {
        throw std::domain_error("g_psi_inc: interior rising-run case only");
    }
    const Int eps = floor_div(nbar - pr.at_next.v + 1 + pr.at_next.vbar, pr.at_next.v);
    if (eps < 0) {
        throw InvariantViolation("g_psi_inc: negative run correction");
    }
    CaseResult r;
    r.tag = CaseTag::kPsiInc;
    r.epsilon = eps;
    r.arm_first = t.a3 * nbar + t.a2 * (h_of(t, pr.at_psi.vbar) - 1);
    r.arm_second = t.a3 * (pr.at_psi.vbar - 1) +
                   t.a2 * (hs_of(t, eps * pr.at_psi.vbar - pr.at_next.vbar) - 1);
    r.g = max_int(r.arm_first, *r.arm_second) - t.a1;
    return r;
}

CaseResult g_psi_dec(const Triple& t, const Int& nbar, const PsiResult& pr) {
    if (!(nbar < pr.at_psi.v - 1 && 2 * pr.at_psi.vbar > pr.at_psi.v)) {
        throw std::domain_error("g_psi_dec: interior falling-run case only");
    }
    const Int eps = floor_div(nbar + 1 - pr.at_next.vbar, pr.at_next.v);
    if (eps < 0) {
        throw InvariantViolation("g_psi_dec: negative run correction");
    }
    if (eps == 0 && pr.at_next.vbar <= 1) {
        throw InvariantViolation("g_psi_dec: zero correction forces vbar_{psi+1} > 1");
    }
    const Int boundary = eps * pr.at_next.v + pr.at_next.vbar - 1;
    CaseResult r;
    r.epsilon = eps;
    if (nbar == boundary) {
        r.tag = CaseTag::kPsiDecEq;
        r.arm_first = t.a3 * nbar +
                      t.a2 * (h_of(t, pr.at_next.vbar + (eps - 1) * pr.at_next.v) - 1);
        r.g = r.arm_first - t.a1;
    } else if (nbar > boundary) {
        r.tag = CaseTag::kPsiDecGt;
        r.arm_first = t.a3 * nbar +
                      t.a2 * (h_of(t, pr.at_next.vbar + eps * pr.at_next.v) - 1);
        r.arm_second = t.a3 * boundary +
                       t.a2 * (h_of(t, pr.at_next.vbar + (eps - 1) * pr.at_next.v) - 1);
        r.g = max_int(r.arm_first, *r.arm_second) - t.a1;
    } else {
        // The correction count is the floor of exactly the quantity that
        // makes nbar >= boundary; dropping below it is impossible.
        throw InvariantViolation("g_psi_dec: nbar below the run boundary");
    }
    return r;
}

FrobeniusSolution solve(const Triple& t) {
    FrobeniusSolution sol;
    if (case1_check(t)) {
        sol.case_tag = CaseTag::kTwoVarLike;
        sol.g = g_case1(t);
        sol.nbar = 0;  // f(1) already exceeds a1*a2, so the chain stops at n_0.
        sol.trace.arm_first = t.a1 * t.a2 - t.a2;
        return sol;
    }

    const CaseParams cp = derive_case_params(t);
    sol.trace.params = cp;

    const NbarResult nb = compute_nbar(t, cp);
    sol.nbar = nb.nbar;

    CaseResult cr;
    if (!nb.descent) {
        // Shallow cutoff: closed forms, no towers walked.
        cr = cp.increasing ? g_inc_small(t, cp, nb.nbar) : g_dec_small(t, cp, nb.nbar);
    } else {
        sol.sigma = nb.descent->sigma;
        for (std::size_t i = 0; i < nb.descent->sigma; ++i) {
            sol.trace.ratio_rows.push_back(
                DescentRow{nb.descent->levels[i].vbar, nb.descent->levels[i].v,
                           nb.descent->limit_chain[i]});
        }

        const PsiResult pr = compute_psi(t, nb.nbar);
        sol.psi = pr.psi;
        for (const DiffModLevel& lv : pr.rows) {
            sol.trace.index_rows.push_back(DescentRow{lv.vbar, lv.v, std::nullopt});
        }
        sol.diffmod_steps = nb.descent->sigma + pr.rows.size();

        if (nb.nbar == pr.at_psi.v - 1) {
            cr = g_psi_edge(t, nb.nbar, pr);
        } else {
            const Int twice = 2 * pr.at_psi.vbar;
            if (twice < pr.at_psi.v) {
                cr = g_psi_inc(t, nb.nbar, pr);
            } else if (twice > pr.at_psi.v) {
                cr = g_psi_dec(t, nb.nbar, pr);
            } else {
                // An exact half split here would contradict the deep-case
                // entry condition.
                throw InvariantViolation("solve: half split at the cutoff level");
            }
        }
    }

    sol.case_tag = cr.tag;
    sol.g = cr.g;
    sol.epsilon = cr.epsilon;
    sol.trace.arm_first = cr.arm_first;
    sol.trace.arm_second = cr.arm_second;
    return sol;
}

} // namespace frob
