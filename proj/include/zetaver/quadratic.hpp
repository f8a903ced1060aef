#ifndef ZETAVER_QUADRATIC_HPP
#define ZETAVER_QUADRATIC_HPP

#include "zetaver/ball.hpp"

namespace zv {

struct QuadraticInvariants {
    long h = 0;        // (wide) class number
    ball R;            // regulator: 1 for imaginary fields, log eps_0 for real
    long w = 0;        // number of roots of unity
    // extra data for real fields
    bool real = false;
    mpz_class unit_t, unit_u; // fundamental unit (t + u sqrt(D)) / 2
    int unit_norm = 0;        // +1 or -1
};

bool is_fundamental_discriminant(long D);

// Independent class-number / regulator / torsion oracle.
//  D < 0: h by counting primitive reduced positive definite forms, R = 1,
//         w = 6, 4, 2 for D = -3, -4, else.
//  D > 0: form cycles under the reduction operator give the narrow class
//         number; the fundamental solution of t^2 - D u^2 = +/-4 gives the
//         fundamental unit, whose norm converts narrow to wide.
QuadraticInvariants quadratic_invariants(long D, mpfr_prec_t prec = 128);

} // namespace zv

#endif
