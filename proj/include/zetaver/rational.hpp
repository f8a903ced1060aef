#ifndef ZETAVER_RATIONAL_HPP
#define ZETAVER_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <string>

#include "zetaver/errors.hpp"

namespace zv {

// Exact rationals are GMP rationals in canonical form (denominator > 0,
// coprime to the numerator).  mpq_class canonicalizes on construction from
// num/den; we keep a thin alias plus the handful of helpers the engine needs.
using rat = mpq_class;

inline rat make_rat(long num, long den) {
    if (den == 0) fail(errc::domain, "rational with zero denominator");
    rat r(num, den);
    r.canonicalize();
    return r;
}

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpz_class pow_z(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// b^e for signed e; b must be nonzero when e < 0.
inline rat pow_q(const rat& b, long e) {
    if (e == 0) return rat(1);
    bool inv = e < 0;
    unsigned long a = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    rat r;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den().get_mpz_t(), a);
    r.canonicalize();
    if (inv) {
        if (r == 0) fail(errc::division_by_zero, "pow_q: 0 to a negative power");
        return rat(1) / r;
    }
    return r;
}

// Best rational approximation to num/den with denominator <= bound, via the
// continued fraction of num/den.  Used for rational reconstruction of solved
// ratios; callers must check the result against their enclosure.
inline rat rational_reconstruct(const rat& x, const mpz_class& den_bound) {
    mpz_class p0(1), q0(0), p1(x.get_num() >= 0 ? 0 : -0), q1(1);
    // convergents of the continued fraction
    mpz_class a, num = x.get_num(), den = x.get_den();
    p1 = 0; q1 = 1; p0 = 1; q0 = 0; // p0/q0 = 1/0, p1/q1 previous
    mpz_class pa(0), qa(1), pb(1), qb(0); // pb/qb current convergent
    mpz_class n = num, d = den;
    while (d != 0) {
        mpz_class q = n / d;
        mpz_class r = n - q * d;
        if (r < 0) { q -= 1; r += d; } // floor division
        mpz_class pn = q * pb + pa;
        mpz_class qn = q * qb + qa;
        if (qn > den_bound) break;
        pa = pb; qa = qb; pb = pn; qb = qn;
        n = d; d = r;
    }
    rat out(pb, qb);
    out.canonicalize();
    return out;
}

inline std::string rat_str(const rat& r) { return r.get_str(); }

} // namespace zv

#endif
