#include "zetaver/number_field.hpp"

#include <algorithm>
#include <numeric>

#include "zetaver/gamma_leading.hpp"

namespace zv {

NumberFieldRecord::NumberFieldRecord(std::string label, long degree, long r1, long r2, mpz_class disc,
                                     std::vector<DirichletCharacter> abelian_data,
                                     std::optional<KTheoryData> invariants)
    : label_(std::move(label)), degree_(degree), r1_(r1), r2_(r2), disc_(std::move(disc)),
      chars_(std::move(abelian_data)), invariants_(std::move(invariants)) {
    if (degree_ < 1 || r1_ < 0 || r2_ < 0) fail(errc::schema, "bad degree/signature");
    if (r1_ + 2 * r2_ != degree_) fail(errc::schema, "signature does not match degree: r1 + 2 r2 != degree");
    if (disc_ == 0) fail(errc::schema, "discriminant must be nonzero");
    if (!chars_.empty()) {
        if (static_cast<long>(chars_.size()) != degree_)
            fail(errc::schema, "abelian data must have exactly [F:Q] characters");
        mpz_class cond_prod(1);
        long principals = 0;
        for (const auto& chi : chars_) {
            if (!chi.is_primitive()) fail(errc::schema, "characters must be primitive");
            cond_prod *= chi.conductor();
            if (chi.is_principal()) ++principals;
        }
        if (principals != 1) fail(errc::schema, "character group needs exactly one principal character");
        if (cond_prod != abs_disc())
            fail(errc::schema, "conductor-discriminant mismatch: product of conductors != |disc|");
        // closed under inversion: for each chi, some listed character has the
        // negated exponent table
        for (const auto& chi : chars_) {
            bool found = false;
            for (const auto& psi : chars_) {
                if (psi.modulus() != chi.modulus() || psi.order() != chi.order()) continue;
                bool all = true;
                for (long a = 1; a <= chi.modulus() && all; ++a) {
                    if (chi.vanishes_at(a)) continue;
                    long want = (chi.order() - chi.exponent_at(a)) % chi.order();
                    if (psi.exponent_at(a) != want) all = false;
                }
                if (all) { found = true; break; }
            }
            if (!found) fail(errc::schema, "character set is not closed under inversion");
        }
        // abelian fields are totally real or totally imaginary, and the
        // number of odd characters is degree - (r1 + r2) in both cases
        long odd = 0;
        for (const auto& chi : chars_)
            if (!chi.is_even()) ++odd;
        if (odd != degree_ - (r1_ + r2_))
            fail(errc::schema, "character parity does not match the signature (r1, r2)");
    }
}

long rho_order(long r1, long r2, long n) {
    if (n < 0) return (n % 2 != 0) ? r2 : r1 + r2;
    if (n == 0) return r1 + r2 - 1;
    if (n == 1) return -1;
    return 0;
}

namespace {

// index of the conjugate (inverse) character within the list
std::size_t conjugate_index(const std::vector<DirichletCharacter>& chars, std::size_t i) {
    const auto& chi = chars[i];
    for (std::size_t j = 0; j < chars.size(); ++j) {
        const auto& psi = chars[j];
        if (psi.modulus() != chi.modulus() || psi.order() != chi.order()) continue;
        bool all = true;
        for (long a = 1; a <= chi.modulus() && all; ++a) {
            if (chi.vanishes_at(a)) continue;
            if (psi.exponent_at(a) != (chi.order() - chi.exponent_at(a)) % chi.order()) all = false;
        }
        if (all) return j;
    }
    fail(errc::internal, "conjugate character not found");
}

// product over nontrivial (or all) characters of L(n, chi), conjugate pairs
// folded into |L|^2.  For n = 1 skips the principal character.
lead_value character_product(const NumberFieldRecord& F, long n, bool skip_principal, mpfr_prec_t prec) {
    const auto& chars = F.characters();
    mpfr_prec_t wp = prec + 32;
    lead_value acc(sym_real(rat(1)));
    std::vector<bool> done(chars.size(), false);
    for (std::size_t i = 0; i < chars.size(); ++i) {
        if (done[i]) continue;
        const auto& chi = chars[i];
        done[i] = true;
        if (chi.is_principal()) {
            if (skip_principal) continue;
            acc = lv_mul(acc, dirichlet_L_leading_data(chi, n, wp).coeff, wp);
            continue;
        }
        if (chi.is_real()) {
            ball v = dirichlet_L_value_real(chi, n, wp);
            acc = lv_mul(acc, lead_value(v), wp);
            continue;
        }
        std::size_t j = conjugate_index(chars, i);
        if (j == i || done[j]) fail(errc::internal, "complex character without a distinct conjugate");
        done[j] = true;
        cball v = dirichlet_L_value(chi, n, wp);
        acc = lv_mul(acc, lead_value(cnorm(v, wp)), wp); // L(chi) L(conj chi) = |L|^2 at real s
    }
    return acc;
}

} // namespace

lead_value dedekind_zeta_value(const NumberFieldRecord& F, long n, mpfr_prec_t prec) {
    if (n < 2) fail(errc::domain, "dedekind_zeta_value wants n >= 2");
    if (!F.has_abelian_data()) fail(errc::domain, "no abelian data for zeta value");
    return character_product(F, n, false, prec);
}

lead_value dedekind_residue(const NumberFieldRecord& F, mpfr_prec_t prec) {
    if (!F.has_abelian_data()) fail(errc::domain, "no abelian data for residue");
    return character_product(F, 1, true, prec);
}

lead_data dedekind_zeta_leading_data(const NumberFieldRecord& F, long n, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 48;
    if (!F.has_abelian_data()) {
        if (F.has_zeta_source()) return F.zeta_src()(n, prec);
        fail(errc::domain, "record has neither abelian data nor an attached zeta source");
    }
    lead_data d;
    if (n >= 2) {
        d.order = 0;
        d.coeff = dedekind_zeta_value(F, n, wp);
        if (!d.coeff.definitely_nonzero())
            fail(errc::unverified_order, "zeta_F(n) enclosure touches zero");
        return d;
    }
    if (n == 1) {
        d.order = -1;
        d.coeff = dedekind_residue(F, wp);
        if (!d.coeff.definitely_nonzero())
            fail(errc::unverified_order, "residue enclosure touches zero");
        return d;
    }
    // n <= 0: completed functional equation
    //   zeta_F(s) = |D|^((1-2s)/2) * (G(1-s)/G(s)) * zeta_F(1-s),
    //   G(s) = Gamma_R(s)^r1 Gamma_C(s)^r2,
    // assembled from exact Gamma leading data; f(1-s) leading data at s=n is
    // the data of f at 1-n with the coefficient times (-1)^order.
    lead_data base = reflect(dedekind_zeta_leading_data(F, 1 - n, prec));
    lead_data gr1 = reflect(gamma_leading_sym(gamma_kind::real, 1 - n));
    lead_data gc1 = reflect(gamma_leading_sym(gamma_kind::cplx, 1 - n));
    lead_data gr0 = gamma_leading_sym(gamma_kind::real, n);
    lead_data gc0 = gamma_leading_sym(gamma_kind::cplx, n);

    long r1 = F.r1(), r2 = F.r2();
    d.order = base.order + r1 * (gr1.order - gr0.order) + r2 * (gc1.order - gc0.order);

    lead_value coeff = base.coeff;
    auto mul_pow = [&](const lead_data& g, long e) {
        if (e == 0) return;
        coeff = lv_mul(coeff, lead_value(g.coeff.sym().pow(e)), wp);
    };
    mul_pow(gr1, r1);
    mul_pow(gc1, r2);
    mul_pow(gr0, -r1);
    mul_pow(gc0, -r2);

    // |D|^((1-2n)/2) = |D|^(-n) * sqrt(|D|); the square root stays exact
    // only for |D| = 1, which is the case where exactness matters (F = Q).
    rat absd(F.abs_disc());
    coeff = lv_mul(coeff, lead_value(sym_real(pow_q(absd, -n))), wp);
    if (absd != 1) {
        ball sq = sqrt_b(ball::from_rat(absd, wp), wp);
        coeff = lv_mul(coeff, lead_value(sq), wp);
    }
    d.coeff = coeff;
    return d;
}

LeadingTaylor dedekind_zeta_leading(const NumberFieldRecord& F, long n, mpfr_prec_t prec) {
    lead_data d = dedekind_zeta_leading_data(F, n, prec);
    long expect = rho_order(F, n);
    if (d.order != expect)
        fail(errc::order_mismatch, "analytic order " + std::to_string(d.order) + " != closed-form " +
                                       std::to_string(expect) + " at n=" + std::to_string(n));
    return d.to_public(n, prec);
}

mpz_class torsion_w_n(const NumberFieldRecord& F, long n) {
    if (n < 1) fail(errc::domain, "torsion_w_n wants n >= 1");
    if (!F.has_abelian_data()) fail(errc::domain, "torsion_w_n needs abelian data");
    const auto& chars = F.characters();
    mpz_class w(1);
    // Only primes ell with ell - 1 <= degree * n can contribute: the fixed
    // group H <= (Z/ell)^x is cyclic of order >= (ell-1)/degree and must
    // have exponent dividing n.
    long ell_bound = F.degree() * n + 1;
    for (long ell = 2; ell <= ell_bound; ++ell) {
        bool prime = ell >= 2;
        for (long d = 2; d * d <= ell && prime; ++d)
            if (ell % d == 0) prime = false;
        if (!prime) continue;
        long power = 1; // ell^k currently accepted
        long q = 1;
        for (int k = 1; k < 40; ++k) {
            if (q > (1L << 24) / ell) break; // desk-scale guard
            q *= ell;
            // H = intersection of kernels of the characters of conductor | q,
            // viewed inside (Z/q)^x; need a^n = 1 mod q for every a in H.
            bool ok = true;
            for (long A = 1; A < q && ok; ++A) {
                if (std::gcd(A, q) != 1) continue;
                bool in_h = true;
                for (const auto& chi : chars) {
                    if (q % chi.conductor() != 0) continue;
                    if (chi.vanishes_at(A) || chi.exponent_at(A) != 0) { in_h = false; break; }
                }
                if (!in_h) continue;
                // a^n mod q
                long r = 1, base = A % q;
                for (long e = 0; e < n; ++e) r = (r * base) % q;
                if (r != 1) ok = false;
            }
            if (!ok) break;
            power = q;
        }
        w *= power;
    }
    return w;
}

} // namespace zv
