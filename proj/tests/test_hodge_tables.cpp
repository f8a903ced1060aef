#include <doctest.h>

#include <random>

#include "zetaver/hodge.hpp"
#include "zetaver/ingest.hpp"
#include "zetaver/tables.hpp"

using namespace zv;

namespace {

HodgeStructure spec_q_h0() { return number_ring_hodge(1, 0); }

HodgeStructure elliptic_h1() {
    return HodgeStructure(1, {{{0, 1}, 1}, {{1, 0}, 1}}, std::nullopt);
}

HodgeStructure weight2_split(long plus, long minus) {
    return HodgeStructure(2, {{{1, 1}, plus + minus}}, std::make_pair(plus, minus));
}

NumberFieldRecord load(const char* name) {
    return ingest_field(std::string(ZETAVER_DATA_DIR) + "/" + name);
}

std::mt19937 rng(7);

HodgeStructure random_structure(long max_weight, long max_dim) {
    std::uniform_int_distribution<long> wd(0, max_weight), vd(0, max_dim);
    long w = wd(rng);
    std::map<std::pair<long, long>, long> h;
    for (long p = 0; 2 * p < w; ++p) {
        long v = vd(rng);
        if (v > 0) {
            h[{p, w - p}] = v;
            h[{w - p, p}] = v;
        }
    }
    std::optional<std::pair<long, long>> mid;
    if (w % 2 == 0) {
        long m = vd(rng);
        std::uniform_int_distribution<long> sd(0, m);
        long plus = sd(rng);
        if (m > 0) h[{w / 2, w / 2}] = m;
        mid = std::make_pair(plus, m - plus);
    }
    return HodgeStructure(w, std::move(h), std::move(mid));
}

} // namespace

TEST_CASE("hodge structure validation") {
    CHECK_THROWS_AS(HodgeStructure(1, {{{0, 1}, 1}}, std::nullopt), error);        // missing symmetric entry
    CHECK_THROWS_AS(HodgeStructure(1, {{{0, 1}, 1}, {{1, 0}, 1}}, std::make_pair(1L, 0L)), error); // odd + split
    CHECK_THROWS_AS(HodgeStructure(0, {{{0, 0}, 2}}, std::make_pair(0L, 1L)), error); // split sum wrong
}

TEST_CASE("gamma factors of the standard structures") {
    GammaFactor f0 = gamma_factor(spec_q_h0());
    REQUIRE(f0.factors.size() == 1);
    CHECK(f0.factors[0].kind == gamma_kind::real);
    CHECK(f0.factors[0].shift == 0);
    CHECK(f0.factors[0].exponent == 1);

    GammaFactor f1 = gamma_factor(elliptic_h1());
    REQUIRE(f1.factors.size() == 1);
    CHECK(f1.factors[0].kind == gamma_kind::cplx);
    CHECK(f1.factors[0].shift == 0);

    GammaFactor f2 = gamma_factor(weight2_split(0, 1));
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].kind == gamma_kind::real);
    CHECK(f2.factors[0].shift == 0); // -i/2 + 1 = 0

    GammaFactor f2p = gamma_factor(weight2_split(1, 0));
    REQUIRE(f2p.factors.size() == 1);
    CHECK(f2p.factors[0].shift == -1); // Gamma_R(s - 1)

    // number-ring package of signature (r1, r2) has Gamma degree r1 + 2 r2
    GammaFactor fq = gamma_factor(number_ring_hodge(2, 3));
    CHECK(fq.total_degree() == 8);
}

TEST_CASE("archimedean factor orders") {
    CHECK(linfty_order(spec_q_h0(), 0) == -1);
    CHECK(linfty_order(spec_q_h0(), 1) == 0);
    CHECK(linfty_order(elliptic_h1(), 1) == 0);
    CHECK(linfty_order(elliptic_h1(), 0) == -1); // Gamma_C(s) pole at 0
    // complex-place package: Gamma_R(s) Gamma_R(s+1) = Gamma_C(s) exactly
    HodgeStructure cplx = HodgeStructure(0, {{{0, 0}, 2}}, std::make_pair(1L, 1L));
    for (long n = -5; n <= 5; ++n)
        CHECK(linfty_order(cplx, n) == gamma_leading_sym(gamma_kind::cplx, n).order);
    lead_data a = linfty_leading_sym(cplx, 1);
    lead_data b = gamma_leading_sym(gamma_kind::cplx, 1);
    CHECK(a.coeff.sym().coeff == b.coeff.sym().coeff);
    CHECK(a.coeff.sym().pi_pow == b.coeff.sym().pi_pow);
}

TEST_CASE("two-route order agreement on random structures") {
    for (int t = 0; t < 200; ++t) {
        HodgeStructure H = random_structure(6, 5);
        for (long n = -4; n <= 6; ++n)
            CHECK_NOTHROW(linfty_order(H, n)); // the closed form is cross-checked inside
    }
}

TEST_CASE("deligne dimensions of the number-ring structure") {
    auto d0 = deligne_dims(spec_q_h0(), 0);
    REQUIRE(d0.count(0));
    CHECK(d0.at(0) == 1);
    CHECK(d0.size() == 1);

    auto d1 = deligne_dims(spec_q_h0(), 1);
    REQUIRE(d1.count(1));
    CHECK(d1.at(1) == 1);
    CHECK(d1.size() == 1);
}

TEST_CASE("deligne dimensions of the elliptic motive at n=1") {
    // the weight-1 piece contributes nothing at n=1; the full H^1_D(E, R(1))
    // comes from the weight-0 piece and has dimension 1
    HodgeStructure h0(0, {{{0, 0}, 1}}, std::make_pair(1L, 0L));
    HodgeStructure h2(2, {{{1, 1}, 1}}, std::make_pair(1L, 0L));
    auto dw0 = deligne_dims(h0, 1);
    auto dw1 = deligne_dims(elliptic_h1(), 1);
    auto dw2 = deligne_dims(h2, 1);
    long h1_total = (dw0.count(1) ? dw0.at(1) : 0) + (dw1.count(1) ? dw1.at(1) : 0) +
                    (dw2.count(1) ? dw2.at(1) : 0);
    CHECK(h1_total == 1);
    CHECK(dw1.empty());
}

TEST_CASE("deligne duality dimensions for ambient dimension up to 3") {
    // dim H^m_D(weight w, n) = dim H^{2d-1-m}_D(dual weight, d-n)
    for (long d = 1; d <= 3; ++d) {
        long dim_c = d - 1;
        for (int t = 0; t < 120; ++t) {
            HodgeStructure H = random_structure(2 * dim_c, 4);
            HodgeStructure Hd = H.dual(dim_c);
            for (long n = -3; n <= d + 3; ++n) {
                auto A = deligne_dims(H, n);
                auto B = deligne_dims(Hd, d - n);
                for (long m = H.weight() - 1; m <= H.weight() + 2; ++m) {
                    long a = A.count(m) ? A.at(m) : 0;
                    long b = B.count(2 * d - 1 - m) ? B.at(2 * d - 1 - m) : 0;
                    CHECK(a == b);
                }
            }
        }
    }
}

TEST_CASE("completed zeta orders for Q") {
    NumberFieldRecord Q = load("q.json");
    CHECK(completed_zeta_leading(Q, 0, 96).order == -1);
    CHECK(completed_zeta_leading(Q, 1, 96).order == -1);
    CHECK(completed_zeta_leading(Q, -1, 96).order == 0); // rho = 0, Gamma_R(-1) regular
    // order additivity across a window, all fields
    for (const char* f : {"q.json", "qi.json", "qsqrt5.json", "qsqrtm23.json"}) {
        NumberFieldRecord F = load(f);
        HodgeStructure H = number_ring_hodge(F.r1(), F.r2());
        for (long n = -6; n <= 6; ++n) {
            lead_data c = completed_zeta_leading_data(F, n, 96);
            CHECK(c.order == rho_order(F, n) + linfty_order(H, n));
        }
    }
}

TEST_CASE("completed functional equation with the conductor power") {
    // |D|^{n/2} xi(n) = +- |D|^{(1-n)/2} xi(1-n) in leading data
    for (const char* f : {"q.json", "qi.json", "qsqrt5.json", "qsqrtm23.json"}) {
        NumberFieldRecord F = load(f);
        mpfr_prec_t wp = 160;
        ball sq = sqrt_b(ball::from_rat(rat(F.abs_disc()), wp), wp);
        for (long n = 2; n <= 5; ++n) {
            lead_data a = completed_zeta_leading_data(F, n, wp);
            lead_data b = completed_zeta_leading_data(F, 1 - n, wp);
            ball lhs = mul(abs_b(a.coeff.to_ball(wp)), pow_si(sq, n, wp), wp);
            ball rhs = mul(abs_b(b.coeff.to_ball(wp)), pow_si(sq, 1 - n, wp), wp);
            CHECK(lhs.overlaps(rhs));
        }
    }
}

TEST_CASE("table examples") {
    TableContext q{1, 0, std::nullopt};
    TableContext q5{2, 0, std::nullopt};

    CohomologyTable w1 = build_table(theory::weil, q, 1);
    CHECK(w1.at(2).torsion.size() == 1);
    CHECK(w1.at(2).torsion[0].kind == torsion_symbol::class_group);
    CHECK(w1.at(3).rank == 1);

    CohomologyTable w0 = build_table(theory::weil, q5, 0);
    CHECK(w0.at(0).rank == 1);
    CHECK(w0.at(2).rank == 1); // r1 + r2 - 1

    // rank H^{1,n} = r2 + r1 delta_{1,n}: zero for Q at n=2, two for
    // Q(sqrt5) at n=3
    CohomologyTable w2 = build_table(theory::weil, q, 2);
    CHECK(w2.at(1).rank == 0);
    CohomologyTable w3 = build_table(theory::weil, q5, 3);
    CHECK(w3.at(1).rank == 2);

    // negative twist: degree-1 block forced by duality for even n <= -2
    CohomologyTable wm2 = build_table(theory::weil, q, -2);
    REQUIRE(wm2.at(1).torsion.size() == 1);
    CHECK(wm2.at(1).torsion[0].kind == torsion_symbol::z2);
    CHECK(wm2.at(1).torsion[0].multiplicity == 1);
    CohomologyTable wm1 = build_table(theory::weil, q, -1);
    CHECK(wm1.at(1).is_zero());
}

TEST_CASE("numeric resolution from K-theory data") {
    KTheoryData K;
    K.entries[1] = {mpz_class(3), mpz_class(2), ball::from_si(1, 96)};
    K.entries[2] = {mpz_class(2), mpz_class(24), ball::from_si(1, 96)};
    TableContext ctx{0, 1, K};
    CohomologyTable w2 = build_table(theory::weil, ctx, 2);
    REQUIRE(w2.at(2).named_order.has_value());
    CHECK(*w2.at(2).named_order == 2);
    REQUIRE(w2.at(1).named_order.has_value());
    CHECK(*w2.at(1).named_order == 24);
    CohomologyTable w1 = build_table(theory::weil, ctx, 1);
    CHECK(*w1.at(2).named_order == 3);
    // partially-known data resolves only the known factors
    TableContext partial{0, 1, KTheoryData{}};
    CohomologyTable wp = build_table(theory::weil, partial, 2);
    CHECK(!wp.at(2).named_order.has_value());
}

TEST_CASE("vanishing order prediction examples") {
    NumberFieldRecord Q = load("q.json");
    NumberFieldRecord Qi = load("qi.json");
    CHECK(vanishing_order_prediction(Q, 0) == 0);
    CHECK(vanishing_order_prediction(Qi, -3) == 1);
    CHECK(vanishing_order_prediction(Q, 1) == -1);
}

TEST_CASE("euler characteristic order identity over random signatures") {
    std::uniform_int_distribution<long> rd(0, 10);
    for (int t = 0; t < 60; ++t) {
        long r1 = rd(rng) % 11;
        long r2 = (rd(rng) % 6);
        if (r1 + 2 * r2 > 10) continue;
        if (r1 + 2 * r2 == 0) r1 = 1;
        TableContext ctx{r1, r2, std::nullopt};
        for (long n = -8; n <= 8; ++n)
            CHECK(vanishing_order_prediction(ctx, n) == rho_order(r1, r2, n));
    }
}

TEST_CASE("epsilon symmetry away from the boundary degrees") {
    for (long n = -6; n <= 6; ++n)
        for (long i = -8; i <= 8; ++i) {
            if (i >= 0 && i <= 3) continue; // realized slots pair i <-> 4-i there
            CHECK(epsilon_tors(i, n) == epsilon_tors(3 - i, 1 - n));
        }
}

TEST_CASE("duality of the compactified tables") {
    for (long r1 = 0; r1 <= 10; ++r1)
        for (long r2 = 0; 2 * r2 + r1 <= 10; ++r2) {
            if (r1 + 2 * r2 == 0) continue;
            TableContext ctx{r1, r2, std::nullopt};
            for (long n = -6; n <= 6; ++n) {
                DualityReport rep = duality_check(ctx, n, -4, 8);
                CHECK(rep.pass);
            }
        }
}
