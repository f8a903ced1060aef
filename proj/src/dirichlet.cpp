#include "zetaver/dirichlet.hpp"

#include <numeric>

#include "zetaver/bernoulli.hpp"
#include "zetaver/errors.hpp"
#include "zetaver/hurwitz.hpp"

namespace zv {

namespace {
long gcd_l(long a, long b) { return std::gcd(a, b); }
long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}
} // namespace

DirichletCharacter::DirichletCharacter(long modulus, long order, std::map<long, long> exponents)
    : modulus_(modulus), order_(order), exp_(std::move(exponents)) {
    if (modulus_ < 1) fail(errc::schema, "character modulus must be positive");
    if (order_ < 1) fail(errc::schema, "character order must be positive");
    std::vector<long> units;
    for (long a = 1; a <= modulus_; ++a)
        if (gcd_l(a, modulus_) == 1) units.push_back(a % modulus_ == 0 ? modulus_ : a);
    if (modulus_ == 1) units = {1};
    for (long a : units) {
        auto it = exp_.find(a);
        if (it == exp_.end()) fail(errc::schema, "character value missing at residue " + std::to_string(a));
        it->second = mod_pos(it->second, order_);
    }
    if (exp_.size() != units.size()) fail(errc::schema, "character has values at non-units");
    // chi(1) = 1 and multiplicativity on all unit pairs (desk-scale moduli)
    if (exp_.at(1) != 0) fail(errc::schema, "chi(1) != 1");
    for (long a : units)
        for (long b : units) {
            long ab = mod_pos(a * b, modulus_);
            if (ab == 0) ab = modulus_;
            if (mod_pos(exp_.at(a) + exp_.at(b), order_) != exp_.at(ab == 0 ? modulus_ : ab))
                fail(errc::schema, "character is not multiplicative");
        }
}

bool DirichletCharacter::is_principal() const {
    for (auto& [a, k] : exp_)
        if (k != 0) return false;
    return true;
}

bool DirichletCharacter::is_real() const {
    for (auto& [a, k] : exp_)
        if (mod_pos(2 * k, order_) != 0) return false;
    return true;
}

bool DirichletCharacter::is_even() const {
    if (modulus_ <= 2) return true;
    return exp_.at(modulus_ - 1) == 0;
}

long DirichletCharacter::conductor() const {
    // smallest divisor f' of f with chi trivial on units congruent to 1 mod f'
    for (long fp = 1; fp <= modulus_; ++fp) {
        if (modulus_ % fp != 0) continue;
        bool ok = true;
        for (long a = 1; a <= modulus_ && ok; ++a) {
            if (gcd_l(a, modulus_) != 1) continue;
            if (a % fp == 1 % fp && exp_.at(a) != 0) ok = false;
        }
        if (ok) return fp;
    }
    return modulus_;
}

long DirichletCharacter::exponent_at(long a) const {
    long r = mod_pos(a, modulus_);
    if (r == 0) r = modulus_;
    auto it = exp_.find(r);
    if (it == exp_.end()) fail(errc::domain, "character exponent at non-unit");
    return it->second;
}

bool DirichletCharacter::vanishes_at(long a) const {
    long r = mod_pos(a, modulus_);
    return gcd_l(r == 0 ? modulus_ : r, modulus_) != 1;
}

int DirichletCharacter::real_value(long a) const {
    if (vanishes_at(a)) return 0;
    long k = exponent_at(a);
    if (k == 0) return 1;
    if (mod_pos(2 * k, order_) == 0) return -1;
    fail(errc::domain, "character is not real-valued");
}

cball DirichletCharacter::value(long a, mpfr_prec_t prec) const {
    cball z(prec);
    if (vanishes_at(a)) return z;
    long k = exponent_at(a);
    ball ang = mul(ball::pi(prec), ball::from_rat(make_rat(2 * k, order_), prec), prec);
    z.re = cos_b(ang, prec);
    z.im = sin_b(ang, prec);
    return z;
}

namespace {

// sum over residues of chi(a) * zeta_H(n, a/f), with the pole parts removed
// when n = 1 (they cancel because sum chi(a) = 0 for non-principal chi).
ball character_sum_real(const DirichletCharacter& chi, long n, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    long f = chi.modulus();
    ball acc(wp);
    for (long a = 1; a <= f; ++a) {
        int v = chi.real_value(a);
        if (v == 0) continue;
        ball h = (n == 1) ? hurwitz_zeta_reg1(make_rat(a, f), wp) : hurwitz_zeta(n, make_rat(a, f), wp);
        acc = (v > 0) ? add(acc, h, wp) : sub(acc, h, wp);
    }
    return mul(acc, rat_pow(rat(f), -n, wp), wp);
}

cball character_sum(const DirichletCharacter& chi, long n, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    long f = chi.modulus();
    cball acc(wp);
    for (long a = 1; a <= f; ++a) {
        if (chi.vanishes_at(a)) continue;
        cball v = chi.value(a, wp);
        ball h = (n == 1) ? hurwitz_zeta_reg1(make_rat(a, f), wp) : hurwitz_zeta(n, make_rat(a, f), wp);
        acc = cadd(acc, cmul(v, h, wp), wp);
    }
    ball fac = rat_pow(rat(f), -n, wp);
    return cmul(acc, fac, wp);
}

} // namespace

ball dirichlet_L_value_real(const DirichletCharacter& chi, long n, mpfr_prec_t prec) {
    if (!chi.is_real()) fail(errc::domain, "real L-value of a non-real character");
    if (n == 1 && chi.is_principal()) fail(errc::pole, "L(s, principal) has a pole at 1");
    return character_sum_real(chi, n, prec);
}

cball dirichlet_L_value(const DirichletCharacter& chi, long n, mpfr_prec_t prec) {
    if (n == 1 && chi.is_principal()) fail(errc::pole, "L(s, principal) has a pole at 1");
    return character_sum(chi, n, prec);
}

sym_real riemann_zeta_even_sym(long m) {
    if (m < 2 || m % 2 != 0) fail(errc::domain, "riemann_zeta_even_sym wants even m >= 2");
    long k = m / 2;
    rat c = bernoulli(m) * pow_q(rat(2), m) / (rat(2) * rat(factorial(m)));
    if (k % 2 == 0) c = -c;
    return sym_real(c, m); // c * pi^m
}

lead_data dirichlet_L_leading_data(const DirichletCharacter& chi, long n, mpfr_prec_t prec) {
    if (!chi.is_primitive()) fail(errc::domain, "leading data wants a primitive character");
    lead_data d;
    if (chi.is_principal()) {
        // Riemann zeta
        if (n == 1) {
            d.order = -1;
            d.coeff = lead_value(sym_real(rat(1)));
            return d;
        }
        if (n >= 2 && n % 2 == 0) {
            sym_real exact = riemann_zeta_even_sym(n);
            ball numeric = hurwitz_zeta(n, rat(1), prec);
            if (!numeric.overlaps(exact.to_ball(prec + 32)))
                fail(errc::internal, "zeta(even) enclosure inconsistent with the exact value");
            d.order = 0;
            d.coeff = lead_value(exact);
            return d;
        }
        ball v = hurwitz_zeta(n, rat(1), prec);
        if (v.contains_zero())
            fail(errc::unverified_order, "zeta leading coefficient ball contains zero at n=" + std::to_string(n));
        d.order = 0;
        d.coeff = lead_value(v);
        return d;
    }
    if (!chi.is_real()) fail(errc::domain, "leading data for complex characters is handled pairwise");
    ball v = dirichlet_L_value_real(chi, n, prec);
    if (v.contains_zero())
        fail(errc::unverified_order, "L leading coefficient ball contains zero at n=" + std::to_string(n));
    d.order = 0;
    d.coeff = lead_value(v);
    return d;
}

LeadingTaylor dirichlet_L_leading(const DirichletCharacter& chi, long n, mpfr_prec_t prec) {
    return dirichlet_L_leading_data(chi, n, prec).to_public(n, prec);
}

} // namespace zv
