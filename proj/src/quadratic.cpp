#include "zetaver/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "zetaver/errors.hpp"

namespace zv {

namespace {

constexpr long kMaxAbsDisc = 100000000L; // overflow guard for the enumeration

bool squarefree(long m) {
    for (long d = 2; d * d <= std::llabs(m); ++d)
        if (m % (d * d) == 0) return false;
    return true;
}

long isqrt_floor(long n) {
    if (n < 0) return -1;
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// ---- imaginary case: primitive reduced forms (a, b, c), b^2 - 4ac = D ----

long class_number_imaginary(long D) {
    long h = 0;
    long bmax = isqrt_floor(-D / 3);
    for (long b = (D % 2 == 0) ? 0 : 1; b <= bmax; b += 2) {
        long num = (b * b - D) / 4; // = a*c
        for (long a = std::max(b, 1L); a * a <= num; ++a) {
            if (num % a != 0) continue;
            long c = num / a;
            if (c < a) continue;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            // reduced: |b| <= a <= c, and b >= 0 when |b| == a or a == c
            h += 1;                              // (a, b, c)
            if (b != 0 && b != a && a != c) h += 1; // (a, -b, c)
        }
    }
    return h;
}

// ---- real case: cycles of reduced indefinite forms ----

bool is_reduced_indef(long a, long b, long c, long D, long sq) {
    // 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b
    (void)c;
    if (b <= 0 || b * b >= D) return false;
    long twoa = 2 * std::llabs(a);
    // sqrt(D) - b < 2|a|  <=>  (sq green) use exact integer comparisons:
    // sqrt(D) < 2|a| + b  <=>  D < (2|a| + b)^2
    if (D >= (twoa + b) * (twoa + b)) return false;
    // 2|a| < sqrt(D) + b  <=>  (2|a| - b)^2 < D when 2|a| > b, else trivially true
    if (twoa > b && (twoa - b) * (twoa - b) >= D) return false;
    (void)sq;
    return true;
}

struct Form {
    long a, b, c;
    bool operator<(const Form& o) const { return std::tie(a, b, c) < std::tie(o.a, o.b, o.c); }
    bool operator==(const Form& o) const { return a == o.a && b == o.b && c == o.c; }
};

// reduction step rho(a,b,c) = (c, r, (r^2-D)/(4c)) with r = -b mod 2|c|,
// chosen in (sqrt(D) - 2|c|, sqrt(D))
Form rho(const Form& f, long D, long sq) {
    long c = f.c;
    long m = 2 * std::llabs(c);
    long r = ((-f.b) % m + m) % m;
    // adjust r into (sqrt(D) - 2|c|, sqrt(D)): take the largest value < sqrt(D)+1
    long target_hi = sq; // floor(sqrt(D)); r <= sq works since D not a square
    while (r > target_hi) r -= m;
    while (r + m <= target_hi) r += m;
    long cc = (r * r - D) / (4 * c);
    return Form{c, r, cc};
}

long narrow_class_number_real(long D) {
    long sq = isqrt_floor(D);
    std::set<Form> all;
    for (long b = 1; b <= sq; ++b) {
        if ((b * b - D) % 4 != 0) continue; // b parity must match D
        long num4 = (b * b - D) / 4;        // = a c < 0
        for (long a = 1; 2 * a <= sq + b; ++a) { // 2|a| < sqrt(D) + b, checked exactly below
            if (num4 % a != 0) continue;
            for (long sa : {a, -a}) {
                long c = num4 / sa;
                if (!is_reduced_indef(sa, b, c, D, sq)) continue;
                if (std::gcd(std::gcd(std::llabs(sa), b), std::llabs(c)) != 1) continue;
                all.insert(Form{sa, b, c});
            }
        }
    }
    // partition into rho-cycles
    long cycles = 0;
    std::set<Form> seen;
    for (const Form& f : all) {
        if (seen.count(f)) continue;
        ++cycles;
        Form g = f;
        do {
            seen.insert(g);
            g = rho(g, D, sq);
            if (!all.count(g)) fail(errc::internal, "reduction left the reduced set");
        } while (!(g == f));
    }
    return cycles;
}

// fundamental solution of x^2 - m y^2 = +/-1 via the continued fraction of
// sqrt(m); returns (x, y, norm).  If the period has length L, the convergent
// p_{L-1}/q_{L-1} satisfies p^2 - m q^2 = (-1)^L and is minimal.
void pell_unit(long m, mpz_class& x, mpz_class& y, int& norm) {
    long a0 = isqrt_floor(m);
    if (a0 * a0 == m) fail(errc::domain, "pell_unit: square argument");
    long P = 0, Q = 1, a = a0;
    mpz_class p_prev(1), p_cur(a0), q_prev(0), q_cur(1);
    long steps = 0;
    while (true) {
        P = a * Q - P;
        Q = (m - P * P) / Q;
        a = (a0 + P) / Q;
        if (Q == 1) break; // period closes; p_cur/q_cur is the last convergent inside it
        mpz_class p_next = a * p_cur + p_prev;
        mpz_class q_next = a * q_cur + q_prev;
        p_prev = p_cur; p_cur = p_next;
        q_prev = q_cur; q_cur = q_next;
        if (++steps > 10000000L) fail(errc::overflow_guard, "pell period beyond guard");
    }
    x = p_cur;
    y = q_cur;
    mpz_class n = x * x - mpz_class(m) * y * y;
    if (n == 1) norm = 1;
    else if (n == -1) norm = -1;
    else fail(errc::internal, "pell convergent is not a unit");
}

// fundamental unit (t + u sqrt(D))/2 of the order of discriminant D > 0
void fundamental_unit(long D, mpz_class& t, mpz_class& u, int& norm) {
    if (D % 4 == 0) {
        mpz_class x, y;
        pell_unit(D / 4, x, y, norm);
        t = 2 * x;
        u = y;
        return;
    }
    // D odd: start from the minimal solution of x^2 - D y^2 = +/-1; when
    // D = 5 mod 8 the fundamental unit may be its cube root with t, u odd.
    mpz_class x, y;
    int n1;
    pell_unit(D, x, y, n1);
    if (D % 8 == 5) {
        // try (t + u sqrt(D))/2 with eps^3 = x + y sqrt(D):
        // t^3 + 3 t u^2 D = 8x and u (3 t^2 + u^2 D) = 8y
        mpfr_t e, c;
        mpfr_init2(e, 256);
        mpfr_init2(c, 256);
        mpfr_set_z(e, x.get_mpz_t(), MPFR_RNDN);
        mpfr_sqrt_ui(c, static_cast<unsigned long>(D), MPFR_RNDN);
        mpfr_mul_z(c, c, y.get_mpz_t(), MPFR_RNDN);
        mpfr_add(e, e, c, MPFR_RNDN);
        mpfr_cbrt(e, e, MPFR_RNDN);
        long t0 = mpfr_get_si(e, MPFR_RNDN);
        mpfr_clear(e);
        mpfr_clear(c);
        for (long tc = std::max(1L, t0 - 2); tc <= t0 + 2; ++tc) {
            // u^2 = (tc^2 -+ 4)/D for norm +1 / -1
            for (int s : {-1, 1}) {
                mpz_class num = mpz_class(tc) * tc - 4 * s;
                if (num <= 0 || num % D != 0) continue;
                mpz_class u2 = num / D;
                mpz_class ur = sqrt(u2);
                if (ur * ur != u2) continue;
                // verify eps^3 = x + y sqrt(D) exactly
                mpz_class tt(tc), uu(ur);
                mpz_class t3 = tt * tt * tt + 3 * tt * uu * uu * D;
                mpz_class u3 = uu * (3 * tt * tt + uu * uu * D);
                if (t3 == 8 * x && u3 == 8 * y) {
                    t = tt;
                    u = uu;
                    norm = s;
                    return;
                }
            }
        }
    }
    t = 2 * x;
    u = 2 * y;
    norm = n1;
}

} // namespace

bool is_fundamental_discriminant(long D) {
    if (D == 0 || D == 1) return false;
    long m = D % 4;
    if (m < 0) m += 4;
    if (m == 1) return squarefree(D);
    if (m == 0) {
        long q = D / 4;
        long qm = q % 4;
        if (qm < 0) qm += 4;
        return squarefree(q) && (qm == 2 || qm == 3);
    }
    return false;
}

QuadraticInvariants quadratic_invariants(long D, mpfr_prec_t prec) {
    if (!is_fundamental_discriminant(D))
        fail(errc::domain, "not a fundamental discriminant: " + std::to_string(D));
    if (std::llabs(D) > kMaxAbsDisc)
        fail(errc::overflow_guard, "discriminant beyond the configured bound");
    QuadraticInvariants out;
    if (D < 0) {
        out.h = class_number_imaginary(D);
        out.R = ball::from_si(1, prec);
        out.w = (D == -3) ? 6 : (D == -4) ? 4 : 2;
        out.real = false;
        return out;
    }
    out.real = true;
    out.w = 2;
    fundamental_unit(D, out.unit_t, out.unit_u, out.unit_norm);
    long hplus = narrow_class_number_real(D);
    out.h = (out.unit_norm == -1) ? hplus : hplus / 2;
    if (out.h == 0 || (out.unit_norm == 1 && hplus % 2 != 0))
        fail(errc::internal, "narrow/wide class number bookkeeping failed");
    // R = log((t + u sqrt(D)) / 2)
    mpfr_prec_t wp = prec + 32;
    ball sq = sqrt_b(ball::from_si(D, wp), wp);
    ball eps = mul(add(ball::from_rat(rat(out.unit_t), wp), mul(ball::from_rat(rat(out.unit_u), wp), sq, wp), wp),
                   ball::from_rat(make_rat(1, 2), wp), wp);
    out.R = log_b(eps, prec);
    return out;
}

} // namespace zv
