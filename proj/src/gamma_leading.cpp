#include "zetaver/gamma_leading.hpp"

namespace zv {

namespace {

// Gamma at the integer m: value (m-1)! for m >= 1, residue (-1)^k / k! at
// m = -k <= 0 (from Gamma(s) = Gamma(s+1)/s applied k+1 times to the
// residue-1 pole at 0).
lead_data gamma_int(long m) {
    lead_data d;
    if (m >= 1) {
        d.order = 0;
        d.coeff = lead_value(sym_real(rat(factorial(m - 1))));
    } else {
        long k = -m;
        rat c(factorial(k));
        c = rat(1) / c;
        if (k % 2) c = -c;
        d.order = -1;
        d.coeff = lead_value(sym_real(c));
    }
    return d;
}

// Gamma at the half integer m + 1/2: Gamma(1/2+m) = (2m)!/(4^m m!) sqrt(pi)
// for m >= 0 and Gamma(1/2-j) = (-4)^j j!/(2j)! sqrt(pi) for j > 0.  The
// callers below always pair the sqrt(pi) with a pi^(-odd/2) prefactor, so
// only the rational part is returned here.
rat gamma_half_rational(long m) {
    if (m >= 0)
        return rat(factorial(2 * m)) / (pow_q(rat(4), m) * rat(factorial(m)));
    long j = -m;
    rat c = pow_q(rat(-4), j) * rat(factorial(j)) / rat(factorial(2 * j));
    return c;
}

} // namespace

lead_data gamma_leading_sym(gamma_kind kind, long n) {
    switch (kind) {
    case gamma_kind::plain:
        return gamma_int(n);
    case gamma_kind::real: {
        lead_data d;
        if (n % 2 == 0) {
            long m = n / 2;
            lead_data g = gamma_int(m);
            d.order = g.order;
            sym_real c = g.coeff.sym();
            if (g.order == -1) c.coeff *= 2; // Gamma(s/2) pole in s is twice as wide
            c.pi_pow -= m;                   // pi^(-n/2)
            d.coeff = lead_value(c);
        } else {
            long m = (n - 1) / 2; // n/2 = m + 1/2
            d.order = 0;
            sym_real c(gamma_half_rational(m), (1 - n) / 2); // pi^(-n/2) * sqrt(pi)
            d.coeff = lead_value(c);
        }
        return d;
    }
    case gamma_kind::cplx: {
        lead_data g = gamma_int(n);
        sym_real c = g.coeff.sym();
        c.coeff *= rat(2) / pow_q(rat(2), n); // 2 * 2^-n
        c.pi_pow -= n;                        // (2 pi)^-n
        lead_data d;
        d.order = g.order;
        d.coeff = lead_value(c);
        return d;
    }
    }
    fail(errc::internal, "unreachable gamma kind");
}

LeadingTaylor gamma_leading(gamma_kind kind, long n, mpfr_prec_t prec) {
    return gamma_leading_sym(kind, n).to_public(n, prec);
}

} // namespace zv
