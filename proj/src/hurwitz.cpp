#include "zetaver/hurwitz.hpp"

#include <algorithm>

#include "zetaver/bernoulli.hpp"
#include "zetaver/errors.hpp"

namespace zv {

namespace {

// rising factorial s(s+1)...(s+m-1), exact for integer s
rat rising_q(long s, long m) {
    rat acc(1);
    for (long t = 0; t < m; ++t) acc *= rat(s + t);
    return acc;
}

ball rising_b(const ball& s, long m, mpfr_prec_t wp) {
    ball acc = ball::from_si(1, wp);
    for (long t = 0; t < m; ++t) acc = mul(acc, add(s, ball::from_si(t, wp), wp), wp);
    return acc;
}

// Euler-Maclaurin with remainder after the B_{2M} term:
//
//   zeta_H(s,a) = sum_{k<N} (k+a)^-s + (N+a)^(1-s)/(s-1) + (N+a)^-s / 2
//               + sum_{j=1..M} B_{2j}/(2j)! * (s)_{2j-1} * (N+a)^(-s-2j+1) + R_M
//
//   |R_M| <= |B_{2M}|/(2M)! * |(s)_{2M}| / (s+2M-1) * (N+a)^(-s-2M+1)
//
// The identity holds for Re(s) > 1 and both sides are analytic in s on
// s + 2M - 1 > 0 (s != 1), so it persists there; the remainder bound is the
// periodic-Bernoulli integral bound |B~_{2M}(x)| <= |B_{2M}| applied to
// f(x) = (x+a)^-s.  For integer s <= 0 the rising factorial (s)_{2M}
// vanishes once 2M >= 1-s and the formula is exact.
rat tail_bound_q(long s, const rat& npa, long M) {
    rat rise = rising_q(s, 2 * M);
    if (rise == 0) return rat(0);
    rat b = bernoulli(2 * M);
    if (b < 0) b = -b;
    if (rise < 0) rise = -rise;
    rat t = b / rat(factorial(2 * M)) * rise / rat(s + 2 * M - 1);
    return t * pow_q(npa, -s - 2 * M + 1);
}

bool small_enough(const rat& bound, long bits_below) {
    // bound <= 2^-bits_below ?
    if (bound == 0) return true;
    rat thr(1);
    thr /= pow_q(rat(2), bits_below);
    return bound <= thr;
}

ball hurwitz_core_int(long s, const rat& a, mpfr_prec_t prec, mpfr_prec_t wp) {
    long M = std::max<long>(4, (prec + 3 * hurwitz_guard_bits) / 3 + 2);
    if (s <= 0) M = std::max(M, (3 - s) / 2 + 1);
    long N = std::max<long>({M, 2, 1 - s});
    while (!small_enough(tail_bound_q(s, rat(N) + a, M), prec + 2 * hurwitz_guard_bits)) {
        N *= 2;
        if (N > (1L << 22)) fail(errc::internal, "hurwitz: no convergent parameters");
    }
    rat npa = rat(N) + a;

    ball sum(wp);
    for (long k = 0; k < N; ++k)
        sum = add(sum, rat_pow(a + rat(k), -s, wp), wp);
    // integral term and half term, exact rationals
    sum = add(sum, ball::from_rat(pow_q(npa, 1 - s) / rat(s - 1), wp), wp);
    sum = add(sum, ball::from_rat(pow_q(npa, -s) / rat(2), wp), wp);
    for (long j = 1; j <= M; ++j) {
        rat rise = rising_q(s, 2 * j - 1);
        if (rise == 0) continue;
        rat term = bernoulli(2 * j) / rat(factorial(2 * j)) * rise * pow_q(npa, -s - 2 * j + 1);
        sum = add(sum, ball::from_rat(term, wp), wp);
    }
    rat tb = tail_bound_q(s, npa, M);
    if (tb != 0) {
        ball t = ball::from_rat(tb, ball::radius_prec);
        mpfr_t up;
        mpfr_init2(up, ball::radius_prec);
        mpfr_abs(up, t.mid(), MPFR_RNDU);
        mpfr_add(up, up, t.rad(), MPFR_RNDU);
        sum.add_error(up);
        mpfr_clear(up);
    }
    return sum;
}

// upper bound of |x| as a fresh radius-precision mpfr (caller clears)
void upper_abs(mpfr_t out, const ball& x) {
    mpfr_abs(out, x.mid(), MPFR_RNDU);
    mpfr_add(out, out, x.rad(), MPFR_RNDU);
}

ball hurwitz_core_ball(const ball& s, const rat& a, mpfr_prec_t prec, mpfr_prec_t wp) {
    // conservative magnitude of s for parameter choice
    double smag = std::abs(s.mid_d()) + 1;
    long M = std::max<long>(4, (prec + 3 * hurwitz_guard_bits) / 3 + 2);
    M = std::max<long>(M, static_cast<long>(smag / 2) + 2);
    long N = std::max<long>({M, 2, static_cast<long>(smag) + 2});

    ball two_m1(wp);
    auto tail_ok = [&](long NN) {
        // |B_2M|/(2M)! * |(s)_2M| / (s+2M-1) * (N+a)^(1-s-2M), upper bound
        ball npa = ball::from_rat(rat(NN) + a, wp);
        ball denom = add(s, ball::from_si(2 * M - 1, wp), wp);
        if (denom.sign() <= 0) return false;
        ball rise = abs_b(rising_b(s, 2 * M, wp));
        ball expo = sub(ball::from_si(1 - 2 * M, wp), s, wp);
        ball p = exp_b(mul(expo, log_b(npa, wp), wp), wp);
        rat bq = bernoulli(2 * M);
        if (bq < 0) bq = -bq;
        ball t = mul(ball::from_rat(bq / rat(factorial(2 * M)), wp), rise, wp);
        t = mul(div(t, denom, wp), p, wp);
        mpfr_t up, thr;
        mpfr_init2(up, ball::radius_prec);
        mpfr_init2(thr, ball::radius_prec);
        upper_abs(up, t);
        mpfr_set_ui_2exp(thr, 1, -(prec + 2 * hurwitz_guard_bits), MPFR_RNDD);
        bool ok = mpfr_cmp(up, thr) <= 0;
        mpfr_clear(up);
        mpfr_clear(thr);
        if (ok) two_m1 = t;
        return ok;
    };
    while (!tail_ok(N)) {
        N *= 2;
        if (N > (1L << 22)) fail(errc::internal, "hurwitz: no convergent parameters");
    }
    rat npa_q = rat(N) + a;
    ball npa = ball::from_rat(npa_q, wp);
    ball lognpa = log_b(npa, wp);

    ball sum(wp);
    for (long k = 0; k < N; ++k) {
        ball lg = log_b(ball::from_rat(a + rat(k), wp), wp);
        sum = add(sum, exp_b(mul(neg(s), lg, wp), wp), wp);
    }
    ball sm1 = sub(s, ball::from_si(1, wp), wp);
    ball p1 = exp_b(mul(sub(ball::from_si(1, wp), s, wp), lognpa, wp), wp);
    sum = add(sum, div(p1, sm1, wp), wp);
    ball p0 = exp_b(mul(neg(s), lognpa, wp), wp);
    sum = add(sum, div(p0, ball::from_si(2, wp), wp), wp);
    for (long j = 1; j <= M; ++j) {
        ball rise = rising_b(s, 2 * j - 1, wp);
        ball expo = sub(ball::from_si(1 - 2 * j, wp), s, wp);
        ball pw = exp_b(mul(expo, lognpa, wp), wp);
        ball term = mul(ball::from_rat(bernoulli(2 * j) / rat(factorial(2 * j)), wp), mul(rise, pw, wp), wp);
        sum = add(sum, term, wp);
    }
    mpfr_t up;
    mpfr_init2(up, ball::radius_prec);
    upper_abs(up, two_m1);
    sum.add_error(up);
    mpfr_clear(up);
    return sum;
}

bool radius_ok(const ball& b, mpfr_prec_t prec) {
    mpfr_t thr;
    mpfr_init2(thr, ball::radius_prec);
    mpfr_set_ui_2exp(thr, 1, -(static_cast<long>(prec) - hurwitz_guard_bits), MPFR_RNDD);
    bool ok = mpfr_cmp(b.rad(), thr) <= 0;
    mpfr_clear(thr);
    return ok;
}

void check_args(const rat& a, mpfr_prec_t prec) {
    if (prec < 32) fail(errc::domain, "hurwitz: prec must be >= 32");
    if (a <= 0 || a > 1) fail(errc::domain, "hurwitz: a must lie in (0, 1]");
}

} // namespace

ball hurwitz_zeta(long s, const rat& a, mpfr_prec_t prec) {
    check_args(a, prec);
    if (s == 1) fail(errc::pole, "hurwitz: pole at s = 1");
    for (int attempt = 0; attempt < 4; ++attempt) {
        mpfr_prec_t wp = prec + 64 + 64 * attempt;
        ball r = hurwitz_core_int(s, a, prec, wp);
        if (radius_ok(r, prec)) return r;
    }
    fail(errc::internal, "hurwitz: radius target not reached");
}

ball hurwitz_zeta(const rat& s, const rat& a, mpfr_prec_t prec) {
    check_args(a, prec);
    if (s == 1) fail(errc::pole, "hurwitz: pole at s = 1");
    if (s.get_den() == 1 && s.get_num().fits_slong_p())
        return hurwitz_zeta(s.get_num().get_si(), a, prec);
    ball last(prec);
    for (int attempt = 0; attempt < 4; ++attempt) {
        mpfr_prec_t wp = prec + 64 + 64 * attempt;
        ball r = hurwitz_core_ball(ball::from_rat(s, wp), a, prec, wp);
        if (radius_ok(r, prec)) return r;
        last = r;
    }
    fail(errc::internal, "hurwitz: radius target not reached");
}

ball hurwitz_zeta(const ball& s, const rat& a, mpfr_prec_t prec) {
    check_args(a, prec);
    if (s.contains(rat(1))) fail(errc::pole, "hurwitz: s interval contains the pole at 1");
    if (s.is_exact()) {
        if (mpfr_integer_p(s.mid()) && mpfr_fits_slong_p(s.mid(), MPFR_RNDN))
            return hurwitz_zeta(mpfr_get_si(s.mid(), MPFR_RNDN), a, prec);
        rat sq;
        mpfr_get_q(sq.get_mpq_t(), s.mid());
        return hurwitz_zeta(sq, a, prec);
    }
    ball out(prec);
    for (int attempt = 0; attempt < 4; ++attempt) {
        mpfr_prec_t wp = prec + 64 + 64 * attempt;
        out = hurwitz_core_ball(s, a, prec, wp);
        if (radius_ok(out, prec)) return out;
    }
    return out; // honest enclosure; the input ball's width dominates
}

ball hurwitz_zeta_reg1(const rat& a, mpfr_prec_t prec) {
    check_args(a, prec);
    for (int attempt = 0; attempt < 4; ++attempt) {
        mpfr_prec_t wp = prec + 64 + 64 * attempt;
        long M = std::max<long>(4, (prec + 3 * hurwitz_guard_bits) / 3 + 2);
        long N = std::max<long>(M, 2);
        // tail: |B_2M|/(2M) * (N+a)^-2M
        auto tail_q = [&](long NN) -> rat {
            rat b = bernoulli(2 * M);
            if (b < 0) b = -b;
            return b / rat(2 * M) * pow_q(rat(NN) + a, -2 * M);
        };
        while (!small_enough(tail_q(N), prec + 2 * hurwitz_guard_bits)) {
            N *= 2;
            if (N > (1L << 22)) fail(errc::internal, "hurwitz_reg1: no convergent parameters");
        }
        rat npa = rat(N) + a;
        ball sum(wp);
        for (long k = 0; k < N; ++k)
            sum = add(sum, ball::from_rat(rat(1) / (a + rat(k)), wp), wp);
        sum = sub(sum, log_b(ball::from_rat(npa, wp), wp), wp);
        sum = add(sum, ball::from_rat(pow_q(npa, -1) / rat(2), wp), wp);
        for (long j = 1; j <= M; ++j)
            sum = add(sum, ball::from_rat(bernoulli(2 * j) / rat(2 * j) * pow_q(npa, -2 * j), wp), wp);
        ball t = ball::from_rat(tail_q(N), ball::radius_prec);
        mpfr_t up;
        mpfr_init2(up, ball::radius_prec);
        mpfr_abs(up, t.mid(), MPFR_RNDU);
        mpfr_add(up, up, t.rad(), MPFR_RNDU);
        sum.add_error(up);
        mpfr_clear(up);
        if (radius_ok(sum, prec)) return sum;
    }
    fail(errc::internal, "hurwitz_reg1: radius target not reached");
}

} // namespace zv
