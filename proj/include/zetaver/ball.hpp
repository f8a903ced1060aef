#ifndef ZETAVER_BALL_HPP
#define ZETAVER_BALL_HPP

#include <mpfr.h>
#include <string>

#include "zetaver/rational.hpp"

namespace zv {

// Midpoint-radius real with outward rounding.  The midpoint carries the
// working precision; the radius is a low-precision upper bound (always
// rounded up), like a magnitude type.  Every operation below returns a ball
// whose interval encloses the exact image of the operand intervals.
class ball {
public:
    static constexpr mpfr_prec_t radius_prec = 32;

    explicit ball(mpfr_prec_t prec = 128);
    ball(const ball& o);
    ball(ball&& o) noexcept;
    ball& operator=(const ball& o);
    ball& operator=(ball&& o) noexcept;
    ~ball();

    static ball from_si(long v, mpfr_prec_t prec);
    static ball from_rat(const rat& q, mpfr_prec_t prec);
    static ball pi(mpfr_prec_t prec);
    // Decimal literal; the radius is one unit in the last decimal place,
    // so "0.4812118250596" means 0.4812118250596 +/- 1e-13.
    static ball from_decimal(const std::string& s, mpfr_prec_t prec);
    // Exact point ball from a dyadic midpoint already in an mpfr.
    static ball from_mpfr(const mpfr_t x, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(mid_); }
    const __mpfr_struct* mid() const { return mid_; }
    const __mpfr_struct* rad() const { return rad_; }

    bool is_exact() const { return mpfr_zero_p(rad_); }
    bool contains_zero() const;
    bool contains(const rat& q) const;
    bool contains(const ball& inner) const;
    bool overlaps(const ball& o) const;
    // Definite sign of every point of the ball: +1, -1, or 0 if undecided.
    int sign() const;
    // log2 of the radius (HUGE_VAL-free convenience for tests); -inf -> very negative.
    double log2_radius() const;
    double mid_d() const { return mpfr_get_d(mid_, MPFR_RNDN); }

    // Inflate the radius by an absolute bound (rounded up).
    void add_error(const mpfr_t e);
    void add_error_2exp(long e); // radius += 2^e

    std::string str(int digits = 25) const;

    // internal: mutable access for the implementation
    __mpfr_struct* mid_raw() { return mid_; }
    __mpfr_struct* rad_raw() { return rad_; }

private:
    mpfr_t mid_;
    mpfr_t rad_;
};

ball add(const ball& a, const ball& b, mpfr_prec_t prec);
ball sub(const ball& a, const ball& b, mpfr_prec_t prec);
ball mul(const ball& a, const ball& b, mpfr_prec_t prec);
ball div(const ball& a, const ball& b, mpfr_prec_t prec);
ball neg(const ball& a);
ball abs_b(const ball& a);
ball sqrt_b(const ball& a, mpfr_prec_t prec);
ball log_b(const ball& a, mpfr_prec_t prec);
ball exp_b(const ball& a, mpfr_prec_t prec);
ball pow_si(const ball& a, long e, mpfr_prec_t prec);
// cos/sin are 1-Lipschitz, so the radius transfers directly.
ball cos_b(const ball& a, mpfr_prec_t prec);
ball sin_b(const ball& a, mpfr_prec_t prec);
// Exact rational power folded into a ball with one rounding.
ball rat_pow(const rat& base, long e, mpfr_prec_t prec);

inline ball operator+(const ball& a, const ball& b) { return add(a, b, std::max(a.prec(), b.prec())); }
inline ball operator-(const ball& a, const ball& b) { return sub(a, b, std::max(a.prec(), b.prec())); }
inline ball operator*(const ball& a, const ball& b) { return mul(a, b, std::max(a.prec(), b.prec())); }
inline ball operator/(const ball& a, const ball& b) { return div(a, b, std::max(a.prec(), b.prec())); }
inline ball operator-(const ball& a) { return neg(a); }

// Complex ball, used only for character sums with non-real values.
struct cball {
    ball re, im;
    cball(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    cball(ball r, ball i) : re(std::move(r)), im(std::move(i)) {}
};
cball cadd(const cball& a, const cball& b, mpfr_prec_t prec);
cball cmul(const cball& a, const cball& b, mpfr_prec_t prec);
cball cmul(const cball& a, const ball& b, mpfr_prec_t prec);
ball cnorm(const cball& a, mpfr_prec_t prec); // re^2 + im^2

} // namespace zv

#endif
