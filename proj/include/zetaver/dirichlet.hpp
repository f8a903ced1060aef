#ifndef ZETAVER_DIRICHLET_HPP
#define ZETAVER_DIRICHLET_HPP

#include <map>
#include <vector>

#include "zetaver/ball.hpp"
#include "zetaver/leading.hpp"

namespace zv {

// Dirichlet character of modulus f with values in the roots of unity of a
// fixed order: chi(a) = e^(2 pi i k_a / order) on units, 0 elsewhere.
// Values are stored exactly as the exponents k_a.
class DirichletCharacter {
public:
    // exponents: map from residue a (coprime to modulus, 1 <= a <= modulus)
    // to k with chi(a) = e(k/order).  Validates multiplicativity and parity.
    DirichletCharacter(long modulus, long order, std::map<long, long> exponents);

    long modulus() const { return modulus_; }
    long order() const { return order_; }
    bool is_principal() const;
    bool is_real() const;       // values in {0, +1, -1}
    bool is_even() const;       // chi(-1) = +1
    long conductor() const;     // smallest inducing modulus
    bool is_primitive() const { return conductor() == modulus_; }

    // exponent k with chi(a) = e(k/order); a must be coprime to the modulus
    long exponent_at(long a) const;
    // 0 if gcd(a, f) > 1, else +1/-1 for real characters
    int real_value(long a) const;
    bool vanishes_at(long a) const;
    cball value(long a, mpfr_prec_t prec) const;

private:
    long modulus_;
    long order_;
    std::map<long, long> exp_; // residue -> exponent mod order
};

// L(n, chi) for a real-valued primitive character at an integer n != 1 (and
// n = 1 for non-principal chi), via L(s,chi) = f^-s sum_a chi(a) zeta_H(s, a/f).
// At n = 1 the pole parts cancel for non-principal chi and the regularized
// Hurwitz values are used.
ball dirichlet_L_value_real(const DirichletCharacter& chi, long n, mpfr_prec_t prec);

// Same for arbitrary (possibly complex) characters.
cball dirichlet_L_value(const DirichletCharacter& chi, long n, mpfr_prec_t prec);

// Order and leading coefficient of L(s, chi) at s = n for a primitive
// real-valued character.  For the principal character this is the Riemann
// zeta function: at n = 1 the order is -1 with residue 1 (exact); at even
// n >= 2 the value is returned exactly as rational * pi^n.
// Fails with unverified_order if the value ball contains zero.
LeadingTaylor dirichlet_L_leading(const DirichletCharacter& chi, long n, mpfr_prec_t prec);

// Internal form used by the Dedekind zeta assembly.
lead_data dirichlet_L_leading_data(const DirichletCharacter& chi, long n, mpfr_prec_t prec);

// Exact zeta(2k) = (-1)^(k+1) B_{2k} (2 pi)^(2k) / (2 (2k)!), as rational * pi^(2k).
sym_real riemann_zeta_even_sym(long m);

} // namespace zv

#endif
