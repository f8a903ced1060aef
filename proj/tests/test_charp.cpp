#include <doctest.h>

#include "zetaver/ingest.hpp"
#include "zetaver/point_count.hpp"
#include "zetaver/weil.hpp"

using namespace zv;

namespace {

WeilPolySet p1_over(long p) {
    WeilPolySet W;
    W.label = "P1";
    W.q = p;
    W.dim_c = 1;
    W.polys[0] = ipoly::one_minus(mpz_class(1));
    W.polys[2] = ipoly::one_minus(mpz_class(p));
    return W;
}

WeilPolySet e_f5() {
    WeilPolySet W;
    W.label = "E/F5";
    W.q = 5;
    W.dim_c = 1;
    W.polys[0] = ipoly::one_minus(mpz_class(1));
    W.polys[1] = ipoly({mpz_class(1), mpz_class(-2), mpz_class(5)});
    W.polys[2] = ipoly::one_minus(mpz_class(5));
    return W;
}

WeilPolySet point_fq(long q) {
    WeilPolySet W;
    W.label = "point";
    W.q = q;
    W.dim_c = 0;
    W.polys[0] = ipoly::one_minus(mpz_class(1));
    return W;
}

// surface-like data with a non-semisimple Frobenius block at q^1 in H^2
WeilPolySet jordan_surface(long q) {
    WeilPolySet W;
    W.label = "surface";
    W.q = q;
    W.dim_c = 2;
    W.polys[0] = ipoly::one_minus(mpz_class(1));
    W.polys[2] = mul(ipoly::one_minus(mpz_class(q)), ipoly::one_minus(mpz_class(q)));
    W.polys[4] = ipoly::one_minus(mpz_class(q * q));
    W.jordan[{2, 1}] = {2};
    return W;
}

} // namespace

TEST_CASE("integer polynomial helpers") {
    ipoly p({mpz_class(1), mpz_class(-3), mpz_class(2)}); // (1-t)(1-2t)
    auto q = divide_one_minus(p, mpz_class(2));
    REQUIRE(q.has_value());
    CHECK(*q == ipoly({mpz_class(1), mpz_class(-1)}));
    CHECK(!divide_one_minus(p, mpz_class(5)).has_value());
    ipoly r = p;
    CHECK(strip_one_minus(r, mpz_class(1)) == 1);
    ipoly g = gcd_primitive(mul(p, ipoly::one_minus(mpz_class(7))), p);
    CHECK(g.deg() == 2);
    auto s = reciprocal_root_power_sums(ipoly({mpz_class(1), mpz_class(-5), mpz_class(6)}), 4);
    // roots 2 and 3
    CHECK(s[1] == 5);
    CHECK(s[2] == 13);
    CHECK(s[3] == 35);
}

TEST_CASE("zeta functions from Weil data") {
    RationalFunction zp1 = zeta_from_weil_polys(p1_over(5));
    CHECK(zp1.num == ipoly::one());
    CHECK(zp1.den == ipoly({mpz_class(1), mpz_class(-6), mpz_class(5)}));

    RationalFunction ze = zeta_from_weil_polys(e_f5());
    CHECK(ze.num == ipoly({mpz_class(1), mpz_class(-2), mpz_class(5)}));
    CHECK(ze.den == ipoly({mpz_class(1), mpz_class(-6), mpz_class(5)}));

    RationalFunction zpt = zeta_from_weil_polys(point_fq(7));
    CHECK(zpt.num == ipoly::one());
    CHECK(zpt.den == ipoly({mpz_class(1), mpz_class(-1)}));
}

TEST_CASE("validation rejects bad Weil data") {
    WeilPolySet W = e_f5();
    W.polys[1] = ipoly({mpz_class(1), mpz_class(-6), mpz_class(5)}); // |a| > 2 sqrt q
    CHECK_THROWS_AS(W.validate(), error);
    WeilPolySet W2 = e_f5();
    W2.polys[0] = ipoly({mpz_class(1), mpz_class(-2)});
    CHECK_THROWS_AS(W2.validate(), error);
    WeilPolySet W3 = e_f5();
    W3.jordan[{1, 1}] = {2}; // q is not an eigenvalue of H^1
    CHECK_THROWS_AS(W3.validate(), error);
}

TEST_CASE("order and leading value at integer twists") {
    for (long p : {2L, 3L, 5L, 7L}) {
        OrderLeading ol = order_leading_at(p1_over(p), 1);
        CHECK(ol.order == -1);
        CHECK(ol.leading == make_rat(p, p - 1));
    }
    OrderLeading e1 = order_leading_at(e_f5(), 1);
    CHECK(e1.order == -1);
    CHECK(e1.leading == rat(1));

    // at n=0 the zeta function of any variety has a simple pole from P_0;
    // the leading value for E/F5 is P_1(1)/(1-5) = -1
    OrderLeading e0 = order_leading_at(e_f5(), 0);
    CHECK(e0.order == -1);
    CHECK(e0.leading == rat(-1));
    CHECK(e0.multiplicities == std::vector<long>{1, 0, 0});
}

TEST_CASE("Det* trivialization") {
    DetStarResult p1 = detstar_trivialization(p1_over(5), 1);
    CHECK(p1.value == make_rat(5, 4));
    CHECK(p1.all_semisimple);
    CHECK(p1.equals_leading);

    DetStarResult e = detstar_trivialization(e_f5(), 1);
    CHECK(e.value == rat(1));
    CHECK(e.equals_leading);

    DetStarResult j = detstar_trivialization(jordan_surface(3), 1);
    CHECK(!j.all_semisimple);
    CHECK(j.semisimple[2] == false);
    CHECK(j.semisimple[0] == true);

    // Det*/limit agreement across twists on semisimple inputs
    for (long n = -2; n <= 2; ++n) {
        CHECK(detstar_trivialization(p1_over(3), n).equals_leading);
        CHECK(detstar_trivialization(e_f5(), n).equals_leading);
        CHECK(detstar_trivialization(point_fq(4), n).equals_leading);
    }
}

TEST_CASE("milne chi") {
    HodgeNumbersFp elliptic;
    elliptic.hij = {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 1}};
    CHECK(milne_chi(elliptic, 1) == 0);
    CHECK(milne_chi(elliptic, 0) == 0);
    CHECK(milne_chi(elliptic, 2) == 0); // 2(h^0(O)-h^1(O)) + (h^1(Omega)-h^0(Omega)) = 0

    HodgeNumbersFp p1;
    p1.hij = {{{0, 0}, 1}, {{1, 1}, 1}};
    CHECK(milne_chi(p1, 1) == 1);
    CHECK(milne_chi(p1, 0) == 0);
    CHECK(milne_chi(p1, -2) == 0);
}

TEST_CASE("rank/order bookkeeping") {
    RankOrderReport p1 = weil_etale_rank_order(p1_over(5), 1);
    CHECK(p1.ranks == std::vector<long>{0, 0, 1, 1});
    CHECK(p1.weighted_sum == -1);
    CHECK(p1.pass);

    RankOrderReport e0 = weil_etale_rank_order(e_f5(), 0);
    CHECK(e0.ranks == std::vector<long>{1, 1, 0, 0});
    CHECK(e0.weighted_sum == -1);

    RankOrderReport pt = weil_etale_rank_order(point_fq(9), 0);
    CHECK(pt.ranks == std::vector<long>{1, 1});
    CHECK(pt.ord_from_rational_function == -1);
}

TEST_CASE("zeta functional equation as exact polynomial identity") {
    for (long p : {2L, 3L, 5L, 7L}) CHECK(zeta_functional_equation_sign(p1_over(p)) == 1);
    CHECK(zeta_functional_equation_sign(e_f5()) == 1);
    CHECK(zeta_functional_equation_sign(jordan_surface(3)) == 1);
}

TEST_CASE("point counts") {
    CurveSpec e = parse_curve("y^2 = x^3 + x");
    PointCountResult pc = point_count_curve(e, 5);
    CHECK(pc.count == 4);
    REQUIRE(pc.p1.has_value());
    CHECK(*pc.p1 == ipoly({mpz_class(1), mpz_class(-2), mpz_class(5)}));

    CurveSpec e2 = parse_curve("y2=x3-x");
    PointCountResult pc3 = point_count_curve(e2, 3);
    CHECK(pc3.count == 4);
    CHECK(*pc3.p1 == ipoly({mpz_class(1), mpz_class(0), mpz_class(3)}));

    CHECK_THROWS_AS(point_count_curve(parse_curve("y2=x3+1"), 2), error);   // char-2 guard
    CHECK_THROWS_AS(point_count_curve(parse_curve("y2=x3"), 5), error);     // singular
    CHECK_THROWS_AS(point_count_curve(parse_curve("y2=x3+x"), 6), error);   // q not prime
}

TEST_CASE("rank/order identity on curves from the oracle") {
    for (long q : {3L, 5L, 7L, 11L, 13L, 97L}) {
        CurveSpec c = parse_curve("y^2 = x^3 + x");
        WeilPolySet W = curve_weil_data(c, q, "E");
        for (long n = -2; n <= 3; ++n) CHECK(weil_etale_rank_order(W, n).pass);
        CHECK(zeta_functional_equation_sign(W) == 1);
    }
    // a genus-2 model (disc(x^5+x+1) = 3*7^2*23, so 11 is a good prime)
    CurveSpec g2 = parse_curve("y^2 = x^5 + x + 1");
    WeilPolySet W2 = curve_weil_data(g2, 11, "C2");
    CHECK(W2.polys[1].deg() == 4);
    for (long n = -2; n <= 3; ++n) CHECK(weil_etale_rank_order(W2, n).pass);
}

TEST_CASE("perturbed trace disagrees with the enumeration oracle") {
    WeilPolySet truth = curve_weil_data(parse_curve("y^2 = x^3 + x"), 5, "E");
    for (long da : {-1L, 1L}) {
        ipoly fake({mpz_class(1), mpz_class(-(2 + da)), mpz_class(5)});
        CHECK(!(fake == truth.polys[1]));
    }
}
