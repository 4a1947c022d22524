#include "frob/arm.hpp"

#include <utility>

namespace frob {

namespace {

LevelBranch classify(const DiffModLevel& lv) {
    const Int twice = 2 * lv.vbar;
    if (twice < lv.v) {
        return LevelBranch::kLow;
    }
    if (twice > lv.v) {
        return LevelBranch::kHigh;
    }
    return LevelBranch::kHalf;
}

} // namespace

ArmParams::ArmParams(Int p_, Int q_) : p(std::move(p_)), q(std::move(q_)) {
    if (!(0 < p && p < q)) {
        throw std::domain_error("ArmParams: need 0 < p < q, got p=" + p.str() + " q=" + q.str());
    }
    if (gcd(p, q) != 1) {
        throw std::domain_error("ArmParams: p and q must be coprime, got p=" + p.str() +
                                " q=" + q.str());
    }
}

Int arm_eval(const ArmParams& s, const Int& x) {
    return mod_pos(s.p * x, s.q);
}

ArmParams sibling(const ArmParams& s) {
    if (s.p == 1 && s.q == 2) {
        throw SelfSibling("sibling: (1, 2) is its own companion");
    }
    return ArmParams(s.q - s.p, s.q);
}

Int arm_inverse(const ArmParams& s, const Int& y) {
    if (y < 0 || y >= s.q) {
        throw std::domain_error("arm_inverse: value " + y.str() + " outside [0, " + s.q.str() +
                                ")");
    }
    return mod_pos(mod_inverse(s.p, s.q) * y, s.q);
}

DiffModSeq::DiffModSeq(const ArmParams& s) {
    levels_.push_back(DiffModLevel{s.p, s.q});
}

void DiffModSeq::ensure(std::size_t j) {
    if (j == 0) {
        throw std::domain_error("DiffModSeq: levels are 1-based");
    }
    while (levels_.size() < j) {
        const DiffModLevel& cur = levels_.back();
        if (cur.v == 1) {
            throw InvariantViolation("DiffModSeq: extension past the terminal level");
        }
        DiffModLevel next;
        if (2 * cur.vbar <= cur.v) {
            next.v = cur.vbar;
            next.vbar = next.v - mod_pos(cur.v, next.v);
        } else {
            next.v = cur.v - cur.vbar;
            next.vbar = mod_pos(cur.v, next.v);
        }
        if (!(0 <= next.vbar && next.vbar <= next.v && next.v < cur.v)) {
            throw InvariantViolation("DiffModSeq: malformed level below (" + cur.vbar.str() +
                                     ", " + cur.v.str() + ")");
        }
        levels_.push_back(std::move(next));
    }
}

const DiffModLevel& DiffModSeq::level(std::size_t j) {
    ensure(j);
    return levels_[j - 1];
}

LevelBranch DiffModSeq::branch(std::size_t j) {
    ensure(j);
    return classify(levels_[j - 1]);
}

bool DiffModSeq::is_terminal(std::size_t j) {
    ensure(j);
    return levels_[j - 1].v == 1;
}

std::size_t DiffModSeq::tau() {
    std::size_t j = levels_.size();
    while (!is_terminal(j)) {
        ++j;
    }
    return j;
}

const std::vector<DiffModLevel>& DiffModSeq::all_levels() {
    tau();
    return levels_;
}

DiffModSeq diff_mod_sequence(const ArmParams& s) {
    DiffModSeq seq(s);
    seq.tau();
    return seq;
}

DiffModLevel sibling_diff_mod(const DiffModLevel& pair_j,
                              std::optional<LevelBranch> prev_branch) {
    if (prev_branch && *prev_branch == LevelBranch::kHalf) {
        throw InvalidLevel("sibling_diff_mod: predecessor level split exactly in half");
    }
    if (!(0 <= pair_j.vbar && pair_j.vbar <= pair_j.v && pair_j.v >= 1)) {
        throw std::domain_error("sibling_diff_mod: malformed pair (" + pair_j.vbar.str() + ", " +
                                pair_j.v.str() + ")");
    }
    return DiffModLevel{pair_j.v - pair_j.vbar, pair_j.v};
}

IndexValue first_index_leq(const ArmParams& s, const Int& limit) {
    if (limit < 0 || limit >= s.q) {
        throw std::domain_error("first_index_leq: limit " + limit.str() + " outside [0, " +
                                s.q.str() + ")");
    }
    if (limit == 0) {
        // The only zero in one period sits at index q.
        return IndexValue{s.q, 0};
    }

    DiffModSeq seq(s);
    std::size_t j = 1;
    // Walk down while even the next modulus exceeds the limit; every local
    // minimum at this level then still lies above `limit`, so the answer is
    // governed by the level below.
    while (limit < seq.level(j + 1).v) {
        ++j;
    }

    const DiffModLevel& at = seq.level(j);
    Int value;
    if (2 * at.vbar <= at.v) {
        // Rising level: its very first element vbar_j already fits.
        value = at.vbar;
    } else {
        // Falling level: the first run descends from vbar_j in steps of
        // v_{j+1}; pick the first element of that run that fits.
        const Int& step = seq.level(j + 1).v;
        value = at.v - step * ceil_div(at.v - limit, step);
    }
    if (!(0 < value && value <= limit)) {
        throw InvariantViolation("first_index_leq: resolved value " + value.str() +
                                 " outside (0, " + limit.str() + "]");
    }
    const Int index = arm_inverse(s, value);
    if (arm_eval(s, index) != value) {
        throw InvariantViolation("first_index_leq: index/value mismatch");
    }
    return IndexValue{index, value};
}

RatioDescentResult first_ratio_below(const ArmParams& s, const Rational& limit) {
    if (s.p == 1) {
        throw std::domain_error("first_ratio_below: p must exceed 1 (answer is index q)");
    }
    if (rat_cmp(limit, Rational(0)) != std::strong_ordering::greater) {
        throw std::domain_error("first_ratio_below: limit must be positive");
    }
    if (rat_cmp(Rational(s.p), limit) != std::strong_ordering::greater) {
        throw std::domain_error("first_ratio_below: limit must be below p (answer is index 1)");
    }

    DiffModSeq seq(s);
    RatioDescentResult out;
    Rational lim = limit;
    std::size_t j = 1;
    for (;;) {
        out.limit_chain.push_back(lim);
        const DiffModLevel at = seq.level(j);  // copy: ensure() may reallocate
        out.levels.push_back(at);
        if (at.vbar == 1 || rat_cmp(Rational(at.vbar), lim) != std::strong_ordering::greater) {
            out.sigma = j;
            break;
        }
        // Not resolved here, so vbar_j > max(1, L_j); a half split would mean
        // vbar_j == 1 and cannot reach this point.
        const LevelBranch br = classify(at);
        if (br == LevelBranch::kHalf) {
            throw InvariantViolation("first_ratio_below: half split past the resolution test");
        }
        const Int next_v = seq.level(j + 1).v;
        if (br == LevelBranch::kLow) {
            // Rising level: the limit line, pulled to the border sequence,
            // steepens to v*L / (v_{j+1} - L); the denominator is positive
            // because v_{j+1} = vbar_j > L_j here.
            lim = Rational(at.v) * lim / (Rational(next_v) - lim);
        } else {
            lim = Rational(at.v) * lim / (Rational(next_v) + lim);
        }
        ++j;
    }

    const DiffModLevel at = seq.level(out.sigma);
    const Rational& lim_sigma = out.limit_chain.back();
    Int value;
    if (rat_cmp(Rational(at.vbar), lim_sigma) != std::strong_ordering::greater) {
        // The level's first element already satisfies the ratio bound; map it
        // back through the level above.
        if (out.sigma == 1) {
            throw InvariantViolation("first_ratio_below: resolution at the seed level");
        }
        const DiffModLevel prev = seq.level(out.sigma - 1);
        const LevelBranch prev_br = classify(prev);
        if (prev_br == LevelBranch::kLow) {
            value = at.vbar;
        } else if (prev_br == LevelBranch::kHigh) {
            const Rational& lim_prev = out.limit_chain[out.sigma - 2];
            const Int k = ceil_rat(Rational(prev.v) / (Rational(at.v) + lim_prev));
            value = prev.v - at.v * k;
        } else {
            throw InvariantViolation("first_ratio_below: half split above the resolution level");
        }
    } else {
        // vbar_sigma == 1 with a limit below 1: only the zero element
        // qualifies, and the zero sits at index q.
        value = 0;
    }

    if (!(0 <= value && value < s.q)) {
        throw InvariantViolation("first_ratio_below: resolved value " + value.str() +
                                 " outside [0, q)");
    }
    out.value_at_min = value;
    out.index = value == 0 ? s.q : arm_inverse(s, value);
    if (arm_eval(s, out.index) != value) {
        throw InvariantViolation("first_ratio_below: index/value mismatch");
    }
    return out;
}

} // namespace frob
