#ifndef ZETAVER_HURWITZ_HPP
#define ZETAVER_HURWITZ_HPP

#include "zetaver/ball.hpp"
#include "zetaver/rational.hpp"

namespace zv {

// Guard bits: public operations target a final radius <= 2^-(prec - guard).
inline constexpr long hurwitz_guard_bits = 16;

// zeta_H(s, a) = sum_{k>=0} (k+a)^(-s), analytically continued, for real
// integer s != 1 and rational a in (0, 1].  Final radius <= 2^-(prec-16).
ball hurwitz_zeta(long s, const rat& a, mpfr_prec_t prec);

// Rational s != 1; same radius target (s is re-rendered at each working
// precision, so the target is reachable).
ball hurwitz_zeta(const rat& s, const rat& a, mpfr_prec_t prec);

// Real s given as a ball excluding 1.  The result is always an enclosure;
// the radius target only applies net of the input ball's own width.
ball hurwitz_zeta(const ball& s, const rat& a, mpfr_prec_t prec);

// Regularized value at the pole: lim_{s->1} (zeta_H(s,a) - 1/(s-1)),
// which equals -digamma(a).  Needed for L-function residues at s = 1.
ball hurwitz_zeta_reg1(const rat& a, mpfr_prec_t prec);

} // namespace zv

#endif
