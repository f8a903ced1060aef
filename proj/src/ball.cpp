#include "zetaver/ball.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "zetaver/errors.hpp"

namespace zv {

namespace {

// One ulp of x at precision p, as an upper bound on a correctly rounded
// operation's error.  Zero results of RNDN ops are exact (mpfr has an
// essentially unbounded exponent range at desk scale).
void add_ulp(mpfr_t rad, const mpfr_t x, mpfr_prec_t p) {
    if (mpfr_zero_p(x) || !mpfr_number_p(x)) return;
    mpfr_t u;
    mpfr_init2(u, ball::radius_prec);
    mpfr_set_ui_2exp(u, 1, mpfr_get_exp(x) - p, MPFR_RNDU);
    mpfr_add(rad, rad, u, MPFR_RNDU);
    mpfr_clear(u);
}

void abs_up(mpfr_t out, const mpfr_t x) {
    mpfr_abs(out, x, MPFR_RNDU);
}

} // namespace

ball::ball(mpfr_prec_t prec) {
    mpfr_init2(mid_, prec);
    mpfr_init2(rad_, radius_prec);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
}

ball::ball(const ball& o) {
    mpfr_init2(mid_, mpfr_get_prec(o.mid_));
    mpfr_init2(rad_, radius_prec);
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

ball::ball(ball&& o) noexcept {
    mid_[0] = o.mid_[0];
    rad_[0] = o.rad_[0];
    mpfr_init2(o.mid_, 2);
    mpfr_init2(o.rad_, radius_prec);
    mpfr_set_zero(o.mid_, 1);
    mpfr_set_zero(o.rad_, 1);
}

ball& ball::operator=(const ball& o) {
    if (this != &o) {
        mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
    }
    return *this;
}

ball& ball::operator=(ball&& o) noexcept {
    if (this != &o) {
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
    }
    return *this;
}

ball::~ball() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

ball ball::from_si(long v, mpfr_prec_t prec) {
    ball r(prec);
    int inexact = mpfr_set_si(r.mid_, v, MPFR_RNDN);
    if (inexact != 0) add_ulp(r.rad_, r.mid_, prec);
    return r;
}

ball ball::from_rat(const rat& q, mpfr_prec_t prec) {
    ball r(prec);
    int inexact = mpfr_set_q(r.mid_, q.get_mpq_t(), MPFR_RNDN);
    if (inexact != 0) add_ulp(r.rad_, r.mid_, prec);
    return r;
}

ball ball::pi(mpfr_prec_t prec) {
    ball r(prec);
    mpfr_const_pi(r.mid_, MPFR_RNDN);
    add_ulp(r.rad_, r.mid_, prec);
    return r;
}

ball ball::from_decimal(const std::string& s, mpfr_prec_t prec) {
    ball r(prec);
    if (mpfr_set_str(r.mid_, s.c_str(), 10, MPFR_RNDN) != 0)
        fail(errc::schema, "bad decimal literal: " + s);
    add_ulp(r.rad_, r.mid_, prec);
    // one unit in the last decimal place
    auto dot = s.find('.');
    long frac_digits = 0;
    if (dot != std::string::npos) {
        auto epos = s.find_first_of("eE");
        std::string frac = (epos == std::string::npos) ? s.substr(dot + 1) : s.substr(dot + 1, epos - dot - 1);
        frac_digits = static_cast<long>(frac.size());
        if (epos != std::string::npos) frac_digits -= std::stol(s.substr(epos + 1));
    }
    mpfr_t u;
    mpfr_init2(u, radius_prec);
    mpfr_set_ui(u, 10, MPFR_RNDU);
    mpfr_pow_si(u, u, -frac_digits, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, u, MPFR_RNDU);
    mpfr_clear(u);
    return r;
}

ball ball::from_mpfr(const mpfr_t x, mpfr_prec_t prec) {
    ball r(prec);
    int inexact = mpfr_set(r.mid_, x, MPFR_RNDN);
    if (inexact != 0) add_ulp(r.rad_, r.mid_, prec);
    return r;
}

bool ball::contains_zero() const {
    mpfr_t a;
    mpfr_init2(a, radius_prec);
    mpfr_abs(a, mid_, MPFR_RNDD);
    bool c = mpfr_cmp(a, rad_) <= 0;
    mpfr_clear(a);
    return c;
}

bool ball::contains(const rat& q) const {
    mpfr_t d;
    mpfr_init2(d, prec() + 64);
    mpfr_set_q(d, q.get_mpq_t(), MPFR_RNDN);
    mpfr_sub(d, mid_, d, MPFR_RNDA);
    mpfr_abs(d, d, MPFR_RNDU);
    // slack for the RNDN conversion of q
    mpfr_t r2;
    mpfr_init2(r2, radius_prec);
    mpfr_set(r2, rad_, MPFR_RNDU);
    add_ulp(r2, d, prec() + 64);
    bool c = mpfr_cmp(d, r2) <= 0;
    mpfr_clear(d);
    mpfr_clear(r2);
    return c;
}

bool ball::contains(const ball& inner) const {
    mpfr_t d;
    mpfr_init2(d, std::max(prec(), inner.prec()) + 32);
    mpfr_sub(d, mid_, inner.mid(), MPFR_RNDA);
    mpfr_abs(d, d, MPFR_RNDU);
    mpfr_t lhs;
    mpfr_init2(lhs, radius_prec);
    mpfr_add(lhs, d, inner.rad(), MPFR_RNDU);
    bool c = mpfr_cmp(lhs, rad_) <= 0;
    mpfr_clear(d);
    mpfr_clear(lhs);
    return c;
}

bool ball::overlaps(const ball& o) const {
    // distance between midpoints, rounded down, against the radius sum
    mpfr_t d;
    mpfr_init2(d, std::max(prec(), o.prec()) + 32);
    mpfr_sub(d, mid_, o.mid(), MPFR_RNDZ);
    mpfr_abs(d, d, MPFR_RNDD);
    mpfr_t rs;
    mpfr_init2(rs, radius_prec);
    mpfr_add(rs, rad_, o.rad(), MPFR_RNDU);
    bool c = mpfr_cmp(d, rs) <= 0;
    mpfr_clear(d);
    mpfr_clear(rs);
    return c;
}

int ball::sign() const {
    if (contains_zero()) return 0;
    return mpfr_sgn(mid_) > 0 ? 1 : -1;
}

double ball::log2_radius() const {
    if (mpfr_zero_p(rad_)) return -1e9;
    return mpfr_get_d(rad_, MPFR_RNDU) == 0 ? -1e9 : static_cast<double>(mpfr_get_exp(rad_));
}

void ball::add_error(const mpfr_t e) {
    mpfr_add(rad_, rad_, e, MPFR_RNDU);
}

void ball::add_error_2exp(long e) {
    mpfr_t u;
    mpfr_init2(u, radius_prec);
    mpfr_set_ui_2exp(u, 1, e, MPFR_RNDU);
    mpfr_add(rad_, rad_, u, MPFR_RNDU);
    mpfr_clear(u);
}

std::string ball::str(int digits) const {
    char* m = nullptr;
    char* r = nullptr;
    mpfr_asprintf(&m, "%.*Rg", digits, mid_);
    mpfr_asprintf(&r, "%.2Rg", rad_);
    std::string out = std::string(m) + " +/- " + std::string(r);
    mpfr_free_str(m);
    mpfr_free_str(r);
    return out;
}

ball add(const ball& a, const ball& b, mpfr_prec_t prec) {
    ball r(prec);
    mpfr_add(r.mid_raw(), a.mid(), b.mid(), MPFR_RNDN);
    mpfr_add(r.rad_raw(), a.rad(), b.rad(), MPFR_RNDU);
    add_ulp(r.rad_raw(), r.mid(), prec);
    return r;
}

ball sub(const ball& a, const ball& b, mpfr_prec_t prec) {
    ball r(prec);
    mpfr_sub(r.mid_raw(), a.mid(), b.mid(), MPFR_RNDN);
    mpfr_add(r.rad_raw(), a.rad(), b.rad(), MPFR_RNDU);
    add_ulp(r.rad_raw(), r.mid(), prec);
    return r;
}

ball mul(const ball& a, const ball& b, mpfr_prec_t prec) {
    ball r(prec);
    mpfr_mul(r.mid_raw(), a.mid(), b.mid(), MPFR_RNDN);
    // |a||rb| + |b||ra| + ra*rb
    mpfr_t t, am, bm;
    mpfr_init2(t, ball::radius_prec);
    mpfr_init2(am, ball::radius_prec);
    mpfr_init2(bm, ball::radius_prec);
    abs_up(am, a.mid());
    abs_up(bm, b.mid());
    mpfr_mul(t, am, b.rad(), MPFR_RNDU);
    mpfr_add(r.rad_raw(), r.rad(), t, MPFR_RNDU);
    mpfr_mul(t, bm, a.rad(), MPFR_RNDU);
    mpfr_add(r.rad_raw(), r.rad(), t, MPFR_RNDU);
    mpfr_mul(t, a.rad(), b.rad(), MPFR_RNDU);
    mpfr_add(r.rad_raw(), r.rad(), t, MPFR_RNDU);
    add_ulp(r.rad_raw(), r.mid(), prec);
    mpfr_clear(t);
    mpfr_clear(am);
    mpfr_clear(bm);
    return r;
}

ball div(const ball& a, const ball& b, mpfr_prec_t prec) {
    // |b| must be bounded away from zero
    mpfr_t bm_lo;
    mpfr_init2(bm_lo, ball::radius_prec);
    mpfr_abs(bm_lo, b.mid(), MPFR_RNDD);
    mpfr_sub(bm_lo, bm_lo, b.rad(), MPFR_RNDD);
    if (mpfr_sgn(bm_lo) <= 0) {
        mpfr_clear(bm_lo);
        fail(errc::division_by_zero, "ball division by interval containing zero");
    }
    ball r(prec);
    mpfr_div(r.mid_raw(), a.mid(), b.mid(), MPFR_RNDN);
    // |a/b - am/bm| <= (ra*|bm| + |am|*rb) / (|bm| * (|bm| - rb))
    mpfr_t num, t, am, bm;
    mpfr_init2(num, ball::radius_prec);
    mpfr_init2(t, ball::radius_prec);
    mpfr_init2(am, ball::radius_prec);
    mpfr_init2(bm, ball::radius_prec);
    abs_up(am, a.mid());
    abs_up(bm, b.mid());
    mpfr_mul(num, a.rad(), bm, MPFR_RNDU);
    mpfr_mul(t, am, b.rad(), MPFR_RNDU);
    mpfr_add(num, num, t, MPFR_RNDU);
    mpfr_abs(t, b.mid(), MPFR_RNDD);
    mpfr_mul(t, t, bm_lo, MPFR_RNDD);
    mpfr_div(num, num, t, MPFR_RNDU);
    mpfr_add(r.rad_raw(), r.rad(), num, MPFR_RNDU);
    add_ulp(r.rad_raw(), r.mid(), prec);
    mpfr_clear(num);
    mpfr_clear(t);
    mpfr_clear(am);
    mpfr_clear(bm);
    mpfr_clear(bm_lo);
    return r;
}

ball neg(const ball& a) {
    ball r(a);
    mpfr_neg(r.mid_raw(), r.mid(), MPFR_RNDN);
    return r;
}

ball abs_b(const ball& a) {
    ball r(a);
    mpfr_abs(r.mid_raw(), r.mid(), MPFR_RNDN);
    return r;
}

namespace {

// Monotone function on the interval [mid-rad, mid+rad]: evaluate at the
// endpoints with directed rounding and take the hull.
template <typename F>
ball monotone_hull(const ball& a, mpfr_prec_t prec, F&& f, bool need_positive, const char* name) {
    mpfr_t lo, hi;
    mpfr_init2(lo, prec + 16);
    mpfr_init2(hi, prec + 16);
    mpfr_sub(lo, a.mid(), a.rad(), MPFR_RNDD);
    mpfr_add(hi, a.mid(), a.rad(), MPFR_RNDU);
    if (need_positive && mpfr_sgn(lo) <= 0) {
        mpfr_clear(lo);
        mpfr_clear(hi);
        fail(errc::domain, std::string(name) + ": interval not strictly positive");
    }
    mpfr_t flo, fhi;
    mpfr_init2(flo, prec + 16);
    mpfr_init2(fhi, prec + 16);
    f(flo, lo, MPFR_RNDD);
    f(fhi, hi, MPFR_RNDU);
    if (mpfr_cmp(flo, fhi) > 0) mpfr_swap(flo, fhi); // decreasing case
    ball r(prec);
    mpfr_add(r.mid_raw(), flo, fhi, MPFR_RNDN);
    mpfr_div_2ui(r.mid_raw(), r.mid(), 1, MPFR_RNDN);
    mpfr_t half;
    mpfr_init2(half, ball::radius_prec);
    mpfr_sub(half, fhi, flo, MPFR_RNDU);
    mpfr_div_2ui(half, half, 1, MPFR_RNDU);
    mpfr_set(r.rad_raw(), half, MPFR_RNDU);
    add_ulp(r.rad_raw(), r.mid(), prec + 16);
    add_ulp(r.rad_raw(), r.mid(), prec);
    mpfr_clear(lo); mpfr_clear(hi); mpfr_clear(flo); mpfr_clear(fhi); mpfr_clear(half);
    return r;
}

} // namespace

ball sqrt_b(const ball& a, mpfr_prec_t prec) {
    mpfr_t lo;
    mpfr_init2(lo, ball::radius_prec);
    mpfr_sub(lo, a.mid(), a.rad(), MPFR_RNDD);
    bool nonneg = mpfr_sgn(lo) >= 0;
    mpfr_clear(lo);
    if (!nonneg) fail(errc::domain, "sqrt of interval containing negatives");
    return monotone_hull(a, prec, [](mpfr_t o, const mpfr_t x, mpfr_rnd_t rnd) { mpfr_sqrt(o, x, rnd); },
                         false, "sqrt");
}

ball log_b(const ball& a, mpfr_prec_t prec) {
    return monotone_hull(a, prec, [](mpfr_t o, const mpfr_t x, mpfr_rnd_t rnd) { mpfr_log(o, x, rnd); },
                         true, "log");
}

ball exp_b(const ball& a, mpfr_prec_t prec) {
    return monotone_hull(a, prec, [](mpfr_t o, const mpfr_t x, mpfr_rnd_t rnd) { mpfr_exp(o, x, rnd); },
                         false, "exp");
}

ball pow_si(const ball& a, long e, mpfr_prec_t prec) {
    if (e == 0) return ball::from_si(1, prec);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    ball acc = ball::from_si(1, prec);
    ball base = a;
    while (k) {
        if (k & 1) acc = mul(acc, base, prec);
        base = mul(base, base, prec);
        k >>= 1;
    }
    if (inv) return div(ball::from_si(1, prec), acc, prec);
    return acc;
}

ball cos_b(const ball& a, mpfr_prec_t prec) {
    ball r(prec);
    mpfr_cos(r.mid_raw(), a.mid(), MPFR_RNDN);
    mpfr_set(r.rad_raw(), a.rad(), MPFR_RNDU);
    add_ulp(r.rad_raw(), r.mid(), prec);
    return r;
}

ball sin_b(const ball& a, mpfr_prec_t prec) {
    ball r(prec);
    mpfr_sin(r.mid_raw(), a.mid(), MPFR_RNDN);
    mpfr_set(r.rad_raw(), a.rad(), MPFR_RNDU);
    add_ulp(r.rad_raw(), r.mid(), prec);
    return r;
}

ball rat_pow(const rat& base, long e, mpfr_prec_t prec) {
    return ball::from_rat(pow_q(base, e), prec);
}

cball cadd(const cball& a, const cball& b, mpfr_prec_t prec) {
    return cball(add(a.re, b.re, prec), add(a.im, b.im, prec));
}

cball cmul(const cball& a, const cball& b, mpfr_prec_t prec) {
    ball re = sub(mul(a.re, b.re, prec), mul(a.im, b.im, prec), prec);
    ball im = add(mul(a.re, b.im, prec), mul(a.im, b.re, prec), prec);
    return cball(std::move(re), std::move(im));
}

cball cmul(const cball& a, const ball& b, mpfr_prec_t prec) {
    return cball(mul(a.re, b, prec), mul(a.im, b, prec));
}

ball cnorm(const cball& a, mpfr_prec_t prec) {
    return add(mul(a.re, a.re, prec), mul(a.im, a.im, prec), prec);
}

} // namespace zv
