#ifndef ZETAVER_GAMMA_LEADING_HPP
#define ZETAVER_GAMMA_LEADING_HPP

#include "zetaver/leading.hpp"

namespace zv {

// Gamma(s), Gamma_R(s) = pi^(-s/2) Gamma(s/2), Gamma_C(s) = 2 (2pi)^-s Gamma(s)
enum class gamma_kind { plain, real, cplx };

// Order and leading coefficient at s = n.  Poles are simple: Gamma at
// n <= 0, Gamma_R at even n <= 0, Gamma_C at n <= 0.  The coefficient is
// always an exact rational times an integer power of pi.
lead_data gamma_leading_sym(gamma_kind kind, long n);

// Public form per the module contract.
LeadingTaylor gamma_leading(gamma_kind kind, long n, mpfr_prec_t prec);

} // namespace zv

#endif
