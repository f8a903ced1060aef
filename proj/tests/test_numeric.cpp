#include <doctest.h>

#include <random>

#include "zetaver/bernoulli.hpp"
#include "zetaver/gamma_leading.hpp"
#include "zetaver/hurwitz.hpp"

using namespace zv;

namespace {

// independent pi for oracle values
ball pi_oracle(mpfr_prec_t prec) { return ball::pi(prec); }

bool ball_contains_mid(const ball& outer, const ball& inner) {
    return outer.contains(ball::from_mpfr(inner.mid(), inner.prec()));
}

} // namespace

TEST_CASE("bernoulli numbers from the recurrence") {
    CHECK(bernoulli(0) == rat(1));
    CHECK(bernoulli(1) == make_rat(-1, 2));
    CHECK(bernoulli(2) == make_rat(1, 6));
    CHECK(bernoulli(4) == make_rat(-1, 30));
    CHECK(bernoulli(12) == make_rat(-691, 2730));
    for (unsigned long k = 3; k <= 21; k += 2) CHECK(bernoulli(k) == 0);
}

TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulli_poly(1, make_rat(1, 4)) == make_rat(-1, 4));
    CHECK(bernoulli_poly(2, make_rat(1, 2)) == make_rat(-1, 12)); // 1/4 - 1/2 + 1/6
    CHECK(bernoulli_poly(1, rat(1)) == make_rat(1, 2));
}

TEST_CASE("hurwitz zeta at s=2 matches pi^2/6 from the pi oracle") {
    ball z = hurwitz_zeta(2, rat(1), 128);
    ball pi2_6 = div(mul(pi_oracle(256), pi_oracle(256), 256), ball::from_si(6, 256), 256);
    CHECK(z.overlaps(pi2_6));
    CHECK(z.log2_radius() <= -(128 - hurwitz_guard_bits));
}

TEST_CASE("hurwitz zeta at nonpositive integers against the Bernoulli-polynomial oracle") {
    // zeta_H(1-k, a) = -B_k(a)/k
    CHECK(hurwitz_zeta(-1, rat(1), 128).contains(make_rat(-1, 12)));
    CHECK(hurwitz_zeta(0, make_rat(1, 2), 128).contains(rat(0)));
    // B_k(1) = B_k for k >= 2; at k = 1 the polynomial value +1/2 is the
    // one matching zeta(0) = -1/2 (the number convention has B_1 = -1/2)
    for (unsigned long k = 1; k <= 20; ++k) {
        rat expect = -bernoulli_poly(k, rat(1)) / rat(k);
        CHECK(hurwitz_zeta(1 - static_cast<long>(k), rat(1), 96).contains(expect));
        if (k >= 2) CHECK(bernoulli_poly(k, rat(1)) == bernoulli(k));
    }
    for (unsigned long k = 2; k <= 8; ++k) {
        rat a = make_rat(2, 7);
        rat expect = -bernoulli_poly(k, a) / rat(k);
        CHECK(hurwitz_zeta(1 - static_cast<long>(k), a, 96).contains(expect));
    }
}

TEST_CASE("hurwitz zeta argument checks") {
    CHECK_THROWS_AS(hurwitz_zeta(1, rat(1), 128), error);
    CHECK_THROWS_AS(hurwitz_zeta(2, rat(2), 128), error);
    CHECK_THROWS_AS(hurwitz_zeta(2, rat(0), 128), error);
    CHECK_THROWS_AS(hurwitz_zeta(2, rat(1), 16), error);
}

TEST_CASE("ball enclosure is consistent under precision increase") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5), aden(2, 9);
    for (int trial = 0; trial < 25; ++trial) {
        long sn = num(rng), sd = den(rng);
        if (sd == 0) sd = 1;
        rat s = make_rat(sn, sd);
        if (s == 1) continue;
        long ad = aden(rng);
        rat a = make_rat(1 + (trial % ad), ad);
        if (a > 1) a = rat(1);
        ball lo = hurwitz_zeta(s, a, 96);
        ball hi = hurwitz_zeta(s, a, 192);
        CHECK(lo.overlaps(hi));
        CHECK(ball_contains_mid(lo, hi));
        CHECK(hi.log2_radius() <= lo.log2_radius());
    }
}

TEST_CASE("regularized value at s=1 is Euler's constant for a=1") {
    // zeta_H^reg(1, 1) = -psi(1) = gamma
    ball g = hurwitz_zeta_reg1(rat(1), 128);
    mpfr_t eg;
    mpfr_init2(eg, 192);
    mpfr_const_euler(eg, MPFR_RNDN);
    ball oracle = ball::from_mpfr(eg, 192);
    mpfr_clear(eg);
    CHECK(g.overlaps(oracle));
}

TEST_CASE("gamma leading data at integers") {
    // poles of Gamma at -k with residue (-1)^k/k!
    for (long k = 0; k <= 6; ++k) {
        LeadingTaylor lt = gamma_leading(gamma_kind::plain, -k, 128);
        CHECK(lt.order == -1);
        rat expect = rat(1) / rat(factorial(k));
        if (k % 2) expect = -expect;
        CHECK(lt.exact());
        CHECK(lt.rational() == expect);
    }
    CHECK(gamma_leading(gamma_kind::real, 0, 128).order == -1);
    LeadingTaylor gr1 = gamma_leading(gamma_kind::real, 1, 128);
    CHECK(gr1.order == 0);
    CHECK(gr1.exact());
    CHECK(gr1.rational() == rat(1));
    // pole locations: Gamma_R at even n <= 0, Gamma_C at all n <= 0
    for (long n = -6; n <= 6; ++n) {
        long expect_r = (n <= 0 && n % 2 == 0) ? -1 : 0;
        long expect_c = (n <= 0) ? -1 : 0;
        CHECK(gamma_leading_sym(gamma_kind::real, n).order == expect_r);
        CHECK(gamma_leading_sym(gamma_kind::cplx, n).order == expect_c);
        CHECK(gamma_leading_sym(gamma_kind::plain, n).order == ((n <= 0) ? -1 : 0));
    }
}

TEST_CASE("gamma recurrence") {
    // Gamma(n+1) = n Gamma(n) for n >= 1, exactly
    for (long n = 1; n <= 8; ++n) {
        rat a = gamma_leading(gamma_kind::plain, n, 64).rational();
        rat b = gamma_leading(gamma_kind::plain, n + 1, 64).rational();
        CHECK(a * rat(n) == b);
    }
    // pole recurrence: residue(n) * n = residue(n+1) for n <= -1
    for (long n = -8; n <= -1; ++n) {
        rat a = gamma_leading(gamma_kind::plain, n, 64).rational();
        rat b = gamma_leading(gamma_kind::plain, n + 1, 64).rational();
        CHECK(a * rat(n) == b);
    }
}

TEST_CASE("gamma leading against mpfr's gamma as a numeric oracle") {
    // Gamma_R(1) = pi^{-1/2} Gamma(1/2) = 1 and Gamma_C(1) = 1/pi
    mpfr_t half, g;
    mpfr_init2(half, 192);
    mpfr_init2(g, 192);
    mpfr_set_d(half, 0.5, MPFR_RNDN);
    mpfr_gamma(g, half, MPFR_RNDN);
    ball gh = ball::from_mpfr(g, 192); // sqrt(pi)
    mpfr_clear(half);
    mpfr_clear(g);
    ball val = div(gh, sqrt_b(pi_oracle(192), 192), 192);
    CHECK(val.contains(rat(1)));
    ball gc1 = gamma_leading(gamma_kind::cplx, 1, 160).to_ball(160);
    ball inv_pi = div(ball::from_si(1, 192), pi_oracle(192), 192);
    CHECK(gc1.overlaps(inv_pi));
}

TEST_CASE("leading taylor rejects unverified orders") {
    ball z(64); // exact zero
    CHECK_THROWS_AS(LeadingTaylor(0, 0, z), error);
    CHECK_THROWS_AS(LeadingTaylor(0, 0, rat(0)), error);
}
