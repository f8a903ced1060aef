#include <doctest.h>

#include <cmath>
#include <vector>

#include "zetaver/dirichlet.hpp"
#include "zetaver/gamma_leading.hpp"
#include "zetaver/ingest.hpp"
#include "zetaver/quadratic.hpp"

using namespace zv;

namespace {

NumberFieldRecord load(const char* name) {
    return ingest_field(std::string(ZETAVER_DATA_DIR) + "/" + name);
}

DirichletCharacter chi_principal() { return DirichletCharacter(1, 1, {{1, 0}}); }
DirichletCharacter chi_m4() { return DirichletCharacter(4, 2, {{1, 0}, {3, 1}}); }

ball pi_oracle(mpfr_prec_t prec) { return ball::pi(prec); }

// Leibniz partial sum 1 - 1/3 + 1/5 - ... with its alternating-series bound
ball leibniz_quarter_pi(long terms, mpfr_prec_t prec) {
    ball acc(prec);
    for (long k = 0; k < terms; ++k) {
        ball t = ball::from_rat(make_rat(1, 2 * k + 1), prec);
        acc = (k % 2 == 0) ? add(acc, t, prec) : sub(acc, t, prec);
    }
    ball out = acc;
    out.add_error_2exp(static_cast<long>(-std::log2(2.0 * terms + 1)) + 1);
    return out;
}

} // namespace

TEST_CASE("character validation") {
    DirichletCharacter p = chi_principal();
    CHECK(p.is_principal());
    CHECK(p.is_real());
    CHECK(p.conductor() == 1);
    DirichletCharacter c4 = chi_m4();
    CHECK(c4.is_primitive());
    CHECK(!c4.is_even());
    CHECK(c4.real_value(3) == -1);
    CHECK(c4.vanishes_at(2));
    // chi(3)*chi(3) must be chi(9 mod 4) = chi(1): a non-multiplicative table fails
    CHECK_THROWS_AS(DirichletCharacter(4, 2, {{1, 1}, {3, 0}}), error);
    // imprimitive: the principal character mod 4
    DirichletCharacter imprim(4, 1, {{1, 0}, {3, 0}});
    CHECK(imprim.conductor() == 1);
    CHECK(!imprim.is_primitive());
}

TEST_CASE("L-function leading data examples") {
    LeadingTaylor z2 = dirichlet_L_leading(chi_principal(), 2, 128);
    CHECK(z2.order == 0);
    ball pi2_6 = div(mul(pi_oracle(256), pi_oracle(256), 256), ball::from_si(6, 256), 256);
    CHECK(z2.to_ball(128).overlaps(pi2_6));

    LeadingTaylor z0 = dirichlet_L_leading(chi_principal(), 0, 128);
    CHECK(z0.order == 0);
    CHECK(z0.to_ball(128).contains(make_rat(-1, 2)));

    LeadingTaylor l1 = dirichlet_L_leading(chi_m4(), 1, 128);
    CHECK(l1.order == 0);
    ball quarter_pi = div(pi_oracle(256), ball::from_si(4, 256), 256);
    CHECK(l1.to_ball(128).overlaps(quarter_pi));
    CHECK(l1.to_ball(128).overlaps(leibniz_quarter_pi(200000, 96)));
}

TEST_CASE("dedekind zeta leading data") {
    NumberFieldRecord Q = load("q.json");
    NumberFieldRecord Qi = load("qi.json");

    LeadingTaylor zm1 = dedekind_zeta_leading(Q, -1, 128);
    CHECK(zm1.order == 0);
    CHECK(zm1.exact());
    CHECK(zm1.rational() == make_rat(-1, 12));

    LeadingTaylor zm2 = dedekind_zeta_leading(Q, -2, 128);
    CHECK(zm2.order == 1);

    LeadingTaylor qi1 = dedekind_zeta_leading(Qi, 1, 128);
    CHECK(qi1.order == -1);
    ball quarter_pi = div(pi_oracle(256), ball::from_si(4, 256), 256);
    CHECK(qi1.to_ball(128).overlaps(quarter_pi));
}

TEST_CASE("order agreement across [-6, 6] on all test fields") {
    for (const char* f : {"q.json", "qi.json", "qsqrt5.json", "qsqrtm23.json"}) {
        NumberFieldRecord F = load(f);
        for (long n = -6; n <= 6; ++n) {
            LeadingTaylor lt = dedekind_zeta_leading(F, n, 96); // throws on order mismatch
            CHECK(lt.order == rho_order(F, n));
        }
    }
}

TEST_CASE("factorization consistency against a truncated Euler product") {
    const long P = 10000;
    std::vector<long> primes;
    for (long p = 2; p < P; ++p) {
        bool ok = true;
        for (long d = 2; d * d <= p && ok; ++d)
            if (p % d == 0) ok = false;
        if (ok) primes.push_back(p);
    }
    for (const char* f : {"q.json", "qi.json", "qsqrt5.json", "qsqrtm23.json"}) {
        NumberFieldRecord F = load(f);
        for (long n = 2; n <= 3; ++n) {
            mpfr_prec_t wp = 160;
            ball prod = ball::from_si(1, wp);
            for (long p : primes) {
                for (const auto& chi : F.characters()) {
                    if (chi.vanishes_at(p)) continue;
                    ball term = sub(ball::from_si(1, wp),
                                    mul(ball::from_si(chi.real_value(p), wp), rat_pow(rat(p), -n, wp), wp), wp);
                    prod = div(prod, term, wp);
                }
            }
            ball engine = dedekind_zeta_value(F, n, wp).to_ball(wp);
            // |log tail| <= 2 deg sum_{p >= P} p^-n <= 4 deg P^{1-n}/(n-1)
            double bound = 4.0 * F.degree() * std::pow(static_cast<double>(P), 1.0 - n) / (n - 1);
            double rel = std::abs(div(engine, prod, wp).mid_d() - 1.0);
            CHECK(rel <= bound);
        }
    }
}

namespace {

// xi_F(s) = |D|^{s/2} Gamma_R^r1 Gamma_C^r2 zeta_F evaluated through leading
// data; the order must vanish away from 0 and 1.
ball xi_value(const NumberFieldRecord& F, long m, mpfr_prec_t prec) {
    lead_data z = dedekind_zeta_leading_data(F, m, prec);
    lead_data gr = gamma_leading_sym(gamma_kind::real, m);
    lead_data gc = gamma_leading_sym(gamma_kind::cplx, m);
    long order = z.order + F.r1() * gr.order + F.r2() * gc.order;
    REQUIRE(order == 0);
    ball v = z.coeff.to_ball(prec);
    v = mul(v, gr.coeff.sym().pow(F.r1()).to_ball(prec), prec);
    v = mul(v, gc.coeff.sym().pow(F.r2()).to_ball(prec), prec);
    // |D|^{m/2}
    ball sq = sqrt_b(ball::from_rat(rat(F.abs_disc()), prec), prec);
    v = mul(v, pow_si(sq, m, prec), prec);
    return v;
}

} // namespace

TEST_CASE("functional-equation residual of the completed zeta") {
    for (const char* f : {"q.json", "qi.json", "qsqrt5.json", "qsqrtm23.json"}) {
        NumberFieldRecord F = load(f);
        for (long m = 2; m <= 6; ++m) {
            ball a = xi_value(F, m, 160);
            ball b = xi_value(F, 1 - m, 160);
            CHECK(sub(a, b, 160).contains_zero());
        }
    }
}

TEST_CASE("quadratic invariants oracle") {
    QuadraticInvariants m4 = quadratic_invariants(-4);
    CHECK(m4.h == 1);
    CHECK(m4.w == 4);
    CHECK(m4.R.contains(rat(1)));

    QuadraticInvariants m23 = quadratic_invariants(-23);
    CHECK(m23.h == 3);
    CHECK(m23.w == 2);

    QuadraticInvariants m3 = quadratic_invariants(-3);
    CHECK(m3.h == 1);
    CHECK(m3.w == 6);

    QuadraticInvariants d5 = quadratic_invariants(5);
    CHECK(d5.h == 1);
    CHECK(d5.w == 2);
    CHECK(d5.unit_t == 1);
    CHECK(d5.unit_u == 1);
    CHECK(d5.unit_norm == -1);
    // R = log((1+sqrt5)/2)
    mpfr_prec_t wp = 160;
    ball golden = mul(add(ball::from_si(1, wp), sqrt_b(ball::from_si(5, wp), wp), wp),
                      ball::from_rat(make_rat(1, 2), wp), wp);
    CHECK(d5.R.overlaps(log_b(golden, wp)));

    QuadraticInvariants d8 = quadratic_invariants(8);
    CHECK(d8.h == 1);
    ball silver = add(ball::from_si(1, wp), sqrt_b(ball::from_si(2, wp), wp), wp);
    CHECK(d8.R.overlaps(log_b(silver, wp)));

    QuadraticInvariants d12 = quadratic_invariants(12);
    CHECK(d12.h == 1);
    CHECK(d12.unit_norm == 1);
    ball u12 = add(ball::from_si(2, wp), sqrt_b(ball::from_si(3, wp), wp), wp);
    CHECK(d12.R.overlaps(log_b(u12, wp)));

    QuadraticInvariants d40 = quadratic_invariants(40); // Q(sqrt10), class number 2
    CHECK(d40.h == 2);
    CHECK(d40.unit_norm == -1);

    QuadraticInvariants d13 = quadratic_invariants(13);
    CHECK(d13.h == 1);
    CHECK(d13.unit_t == 3);
    CHECK(d13.unit_u == 1);

    CHECK_THROWS_AS(quadratic_invariants(20), error); // 4*5 is not fundamental
    CHECK_THROWS_AS(quadratic_invariants(0), error);
}

TEST_CASE("residue formula for quadratic fields") {
    // residue at s=1 equals 2^r1 (2pi)^r2 h R / (w sqrt|D|)
    mpfr_prec_t wp = 160;
    for (const char* f : {"qi.json", "qsqrt5.json", "qsqrtm23.json"}) {
        NumberFieldRecord F = load(f);
        QuadraticInvariants qi = quadratic_invariants(F.disc().get_si(), wp);
        lead_data res = dedekind_zeta_leading_data(F, 1, wp);
        REQUIRE(res.order == -1);
        ball rhs = mul(pow_si(ball::from_si(2, wp), F.r1(), wp),
                       pow_si(mul(ball::from_si(2, wp), ball::pi(wp), wp), F.r2(), wp), wp);
        rhs = mul(rhs, mul(ball::from_rat(rat(qi.h), wp), qi.R, wp), wp);
        rhs = div(rhs, mul(ball::from_rat(rat(qi.w), wp), sqrt_b(ball::from_rat(rat(F.abs_disc()), wp), wp), wp), wp);
        CHECK(res.coeff.to_ball(wp).overlaps(rhs));
    }
}

TEST_CASE("data-fed records use the attached zeta source") {
    NumberFieldRecord real = load("q.json");
    NumberFieldRecord fed("Q(fed)", 1, 1, 0, mpz_class(1));
    CHECK_THROWS_AS(dedekind_zeta_leading(fed, 2, 96), error);
    fed.attach_zeta_source(
        [&real](long n, mpfr_prec_t prec) { return dedekind_zeta_leading_data(real, n, prec); });
    LeadingTaylor lt = dedekind_zeta_leading(fed, -1, 96);
    CHECK(lt.exact());
    CHECK(lt.rational() == make_rat(-1, 12));
}

TEST_CASE("torsion orders w_n from the character group") {
    NumberFieldRecord Q = load("q.json");
    NumberFieldRecord Qi = load("qi.json");
    NumberFieldRecord Q5 = load("qsqrt5.json");
    CHECK(torsion_w_n(Q, 1) == 2);
    CHECK(torsion_w_n(Q, 2) == 24);
    CHECK(torsion_w_n(Q, 3) == 2);
    CHECK(torsion_w_n(Q, 4) == 240);
    CHECK(torsion_w_n(Qi, 1) == 4);
    CHECK(torsion_w_n(Q5, 1) == 2);
    CHECK_THROWS_AS(torsion_w_n(Q, 0), error);
}
