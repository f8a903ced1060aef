#include "zetaver/special_value.hpp"

#include <cmath>
#include <sstream>

#include "zetaver/gamma_leading.hpp"

namespace zv {

rat correction_factor(long degree, long n) {
    if (n <= 0) return rat(1);
    return pow_q(rat(factorial(n - 1)), -degree);
}

DerhamDet derived_derham_det(const NumberFieldRecord& F, long n) {
    DerhamDet d;
    if (n <= 0) {
        d.det = 1;
        d.trivial = true;
        d.structural = "RGamma_dR/F^n = 0 for n <= 0; determinant trivial";
        return d;
    }
    d.det = pow_z(F.abs_disc(), static_cast<unsigned long>(n - 1));
    d.structural = "det_Z RGamma_dR/F^n = |D|^{n-1} * det_Z O_F";
    return d;
}

ball ClosedForm::to_ball(const mpz_class& absD, mpfr_prec_t prec) const {
    mpfr_prec_t wp = prec + 32;
    ball v = ball::from_rat(coeff, wp);
    if (pi_pow != 0) v = mul(v, pow_si(ball::pi(wp), pi_pow, wp), wp);
    if (sqrtD_pow != 0) {
        ball s = sqrt_b(ball::from_rat(rat(absD), wp), wp);
        v = div(v, pow_si(s, sqrtD_pow, wp), wp);
    }
    return v;
}

std::string ClosedForm::str() const {
    std::ostringstream os;
    os << coeff.get_str();
    if (pi_pow) os << " * pi^" << pi_pow;
    if (sqrtD_pow) os << " / sqrt|D|^" << sqrtD_pow;
    os << " * (h_" << k_twist << " R_" << k_twist << " / w_" << k_twist << ")";
    return os.str();
}

ClosedForm special_value_closed_form(long degree, long r1, long r2, long n) {
    ClosedForm cf;
    if (n <= 0) {
        cf.coeff = rat(1);
        cf.k_twist = 1 - n;
        return cf;
    }
    long d1 = delta_parity(1, n);
    long d2 = delta_parity(2, n);
    long two_pi_exp = degree * n - r2 - r1 * d1;
    cf.coeff = pow_q(rat(factorial(n - 1)), -degree) * pow_q(rat(2), r1 * (d1 - d2)) *
               pow_q(rat(2), two_pi_exp);
    cf.pi_pow = two_pi_exp;
    cf.sqrtD_pow = 1;
    cf.k_twist = n;
    return cf;
}

double rel_defect_bound(const ball& a, const ball& b, mpfr_prec_t prec) {
    ball q = div(abs_b(a), abs_b(b), prec);
    ball d = sub(q, ball::from_si(1, prec), prec);
    mpfr_t up;
    mpfr_init2(up, 64);
    mpfr_abs(up, d.mid(), MPFR_RNDU);
    mpfr_add(up, up, d.rad(), MPFR_RNDU);
    double out = mpfr_get_d(up, MPFR_RNDU);
    mpfr_clear(up);
    return out;
}

FundamentalLineReport special_value_prediction(const NumberFieldRecord& F, long n,
                                               std::optional<KTheoryData::Entry> K,
                                               mpfr_prec_t prec, double rel_tol) {
    mpfr_prec_t wp = prec + 32;
    FundamentalLineReport rep;
    rep.field_label = F.label();
    rep.n = n;
    rep.correction = correction_factor(F, n);
    DerhamDet dd = derived_derham_det(F, n);
    rep.derham_det = dd.det;
    rep.derham_trivial = dd.trivial;
    rep.closed_form = special_value_closed_form(F.degree(), F.r1(), F.r2(), n);
    if (n >= 1) {
        // |D|^{1-n} multiplies the K-free part
        rep.closed_form.coeff *= pow_q(rat(F.abs_disc()), 1 - n);
    }

    lead_data an = dedekind_zeta_leading_data(F, n, prec);
    rep.analytic_order = an.order;
    rep.analytic = an.coeff.to_ball(wp);
    ball kfree = rep.closed_form.to_ball(F.abs_disc(), wp);

    if (K) {
        ball pred = mul(kfree, div(mul(ball::from_rat(rat(K->h), wp), K->R, wp),
                                   ball::from_rat(rat(K->w), wp), wp),
                        wp);
        rep.predicted_value = pred;
        rep.rel_defect = rel_defect_bound(pred, rep.analytic, wp);
        rep.match = rep.rel_defect <= rel_tol;
        rep.provenance = "special-value closed form vs analytic leading value (magnitudes)";
    } else {
        ball solved = div(abs_b(rep.analytic), abs_b(kfree), wp);
        rep.solved_ratio = solved;
        // unique rational with denominator <= 10^4 requires radius < 1/(2*10^8)
        mpfr_t thr;
        mpfr_init2(thr, 64);
        mpfr_set_d(thr, 0.5e-8, MPFR_RNDD);
        bool tight = mpfr_cmp(solved.rad(), thr) < 0;
        mpfr_clear(thr);
        if (tight) {
            mpq_class mid_q;
            mpfr_get_q(mid_q.get_mpq_t(), solved.mid());
            rat guess = rational_reconstruct(mid_q, mpz_class(10000));
            if (solved.contains(guess)) rep.solved_rational = guess;
        }
        rep.provenance = "solved h R / w from the analytic leading value";
    }
    return rep;
}

namespace {

// value = sym * |D|^(half_D/2); half-integer |D| powers kept symbolic so
// the two routes can be compared exactly.
struct sym_with_disc {
    sym_real sym;
    long half_D = 0;
    ball to_ball(const mpz_class& absD, mpfr_prec_t prec) const {
        ball v = sym.to_ball(prec);
        if (half_D != 0) {
            ball s = sqrt_b(ball::from_rat(rat(absD), prec), prec);
            v = mul(v, pow_si(s, half_D, prec), prec);
        }
        return v;
    }
    std::string str() const {
        std::string s = sym.str();
        if (half_D) s += " * |D|^(" + std::to_string(half_D) + "/2)";
        return s;
    }
};

// zeta*(n)/zeta*(1-n) forced by the completed functional equation:
// |D|^((1-2n)/2) * reflect(G(1-n)) / G(n) with G = Gamma_R^r1 Gamma_C^r2.
sym_with_disc fe_forced_ratio(long r1, long r2, long n) {
    lead_data gr1 = reflect(gamma_leading_sym(gamma_kind::real, 1 - n));
    lead_data gc1 = reflect(gamma_leading_sym(gamma_kind::cplx, 1 - n));
    lead_data gr0 = gamma_leading_sym(gamma_kind::real, n);
    lead_data gc0 = gamma_leading_sym(gamma_kind::cplx, n);
    sym_real s = gr1.coeff.sym().pow(r1) * gc1.coeff.sym().pow(r2) *
                 gr0.coeff.sym().pow(-r1) * gc0.coeff.sym().pow(-r2);
    return {s, 1 - 2 * n};
}

} // namespace

FeConsistencyReport fe_consistency_check(const NumberFieldRecord& F, long n, mpfr_prec_t prec,
                                         double rel_tol) {
    if (n < 1) fail(errc::domain, "fe_consistency_check wants n >= 1");
    mpfr_prec_t wp = prec + 48;
    FeConsistencyReport rep;
    rep.n = n;

    // predicted(n)/predicted(1-n): the h R / w symbols have the same twist
    // on both sides (n and 1-(1-n)) and cancel
    ClosedForm top = special_value_closed_form(F.degree(), F.r1(), F.r2(), n);
    ClosedForm bot = special_value_closed_form(F.degree(), F.r1(), F.r2(), 1 - n);
    if (top.k_twist != bot.k_twist)
        fail(errc::internal, "K-theory symbols do not cancel in the FE ratio");
    // prediction ratio = top * |D|^{1-n} / bot, i.e. sym * |D|^((2(1-n)-1)/2)
    sym_with_disc pred_norm;
    pred_norm.sym = sym_real(top.coeff / bot.coeff, top.pi_pow - bot.pi_pow);
    pred_norm.half_D = 2 * (1 - n) - top.sqrtD_pow;

    sym_with_disc fe = fe_forced_ratio(F.r1(), F.r2(), n);

    // exact comparison up to sign
    rat pc = pred_norm.sym.coeff;
    rat fc = fe.sym.coeff;
    if (pc < 0) pc = -pc;
    if (fc < 0) fc = -fc;
    rep.exact_match = (pc == fc) && (pred_norm.sym.pi_pow == fe.sym.pi_pow) &&
                      (pred_norm.half_D == fe.half_D);
    rep.predicted_str = pred_norm.str();
    rep.fe_str = fe.str();

    // numeric comparison against the engine's zeta values
    lead_data zn = dedekind_zeta_leading_data(F, n, prec);
    lead_data z1n = dedekind_zeta_leading_data(F, 1 - n, prec);
    ball analytic = div(abs_b(zn.coeff.to_ball(wp)), abs_b(z1n.coeff.to_ball(wp)), wp);
    ball pred_b = abs_b(pred_norm.to_ball(F.abs_disc(), wp));
    rep.analytic_str = analytic.str();
    rep.rel_defect = rel_defect_bound(pred_b, analytic, wp);
    rep.analytic_match = rep.rel_defect <= rel_tol;
    if (!rep.exact_match)
        fail(errc::invariant_violation, "FE ratio: closed-form and Gamma-route disagree symbolically at n=" +
                                            std::to_string(n));
    return rep;
}

} // namespace zv
