#ifndef ZETAVER_WEIL_HPP
#define ZETAVER_WEIL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zetaver/leading.hpp"

namespace zv {

// Integer polynomial, coefficients ascending, trailing zeros trimmed.
struct ipoly {
    std::vector<mpz_class> c;

    ipoly() = default;
    explicit ipoly(std::vector<mpz_class> coeffs);
    static ipoly one() { return ipoly({mpz_class(1)}); }
    static ipoly one_minus(const mpz_class& lambda); // 1 - lambda t

    long deg() const { return static_cast<long>(c.size()) - 1; } // deg(0) = -1
    bool is_zero() const { return c.empty(); }
    const mpz_class& coeff(long i) const;
    rat eval(const rat& t) const;
    std::string str() const;

    bool operator==(const ipoly& o) const { return c == o.c; }
};

ipoly mul(const ipoly& a, const ipoly& b);
// exact division by (1 - lambda t); returns nullopt if it does not divide
std::optional<ipoly> divide_one_minus(const ipoly& p, const mpz_class& lambda);
// multiplicity of (1 - lambda t) in p, together with the cofactor
long strip_one_minus(ipoly& p, const mpz_class& lambda);
// gcd over Q, returned primitive with positive leading coefficient
ipoly gcd_primitive(ipoly a, ipoly b);
// power sums of the reciprocal roots via Newton's identities (p(0) must be 1)
std::vector<mpz_class> reciprocal_root_power_sums(const ipoly& p, long count);

// Frobenius data of a smooth projective variety over F_q: per cohomological
// degree i in [0, 2 dim_c], the integer polynomial P_i(t) with P_i(0) = 1
// whose reciprocal roots are the Frobenius eigenvalues.
struct WeilPolySet {
    std::string label;
    mpz_class q;    // prime power
    long dim_c = 0; // dimension of the variety (d - 1 in arithmetic terms)
    std::map<long, ipoly> polys;
    // Jordan blocks at eigenvalue q^e: (degree i, e) -> block sizes
    std::map<std::pair<long, long>, std::vector<long>> jordan;

    const ipoly& P(long i) const;
    long top_degree() const { return 2 * dim_c; }

    // Checks the structural invariants: P_0 = 1 - t, P_{2 dim} = 1 - q^dim t,
    // Poincare duality alpha -> q^dim/alpha as an exact polynomial identity,
    // and the Riemann-hypothesis screen |alpha| = q^{i/2} (exact for factors
    // of degree <= 2, power-sum bounds beyond).
    void validate() const;
};

// coherent Hodge numbers h^j(X, Omega^i)
struct HodgeNumbersFp {
    std::map<std::pair<long, long>, long> hij; // (i, j) -> dim
    long h(long i, long j) const;
};

struct RationalFunction {
    ipoly num, den;
    std::string str() const;
};

// Z(X, t) = prod P_i(t)^((-1)^{i+1}) in lowest terms.
RationalFunction zeta_from_weil_polys(const WeilPolySet& W);

// ord and leading value of Z at t = q^{-n}, in the variable (1 - q^n t):
// order = sum (-1)^{i+1} m_i(n) (negative = pole), leading value exact
// rational.  m_i(n) = multiplicity of q^n among reciprocal roots of P_i.
struct OrderLeading {
    long order = 0;
    rat leading;
    std::vector<long> multiplicities; // m_i(n), i = 0..2 dim
};
OrderLeading order_leading_at(const WeilPolySet& W, long n);

// Det* trivialization: per degree, det of 1 - phi q^{-n} on the complement
// of its kernel in the eigenvalue model; semisimple-at-zero iff no Jordan
// block of size >= 2 sits at eigenvalue q^n.
struct DetStarResult {
    rat value;
    std::vector<bool> semisimple; // per degree 0..2 dim
    bool all_semisimple = true;
    bool equals_leading = false;  // asserted only when all semisimple
};
DetStarResult detstar_trivialization(const WeilPolySet& W, long n);

// chi(X, O, n) = sum_{i<=n, j} (-1)^{i+j} (n-i) h^j(Omega^i)
long milne_chi(const HodgeNumbersFp& H, long n);

// Weil-etale ranks rank H^i_W(Z(n)) = m_i(n) + m_{i-1}(n) and the identity
// sum (-1)^i i rank = ord_{t=q^{-n}} Z, computed on both sides.
struct RankOrderReport {
    std::vector<long> ranks; // degrees 0..2 dim + 1
    long weighted_sum = 0;
    long ord_from_multiplicities = 0;
    long ord_from_rational_function = 0;
    bool pass = false;
};
RankOrderReport weil_etale_rank_order(const WeilPolySet& W, long n);

// functional equation Z(X, 1/(q^dim t)) = +- q^(dim*chi/2) t^chi Z(X, t),
// chi = sum (-1)^i deg P_i, verified by exact polynomial algebra; returns
// the sign, or fails.
int zeta_functional_equation_sign(const WeilPolySet& W);

} // namespace zv

#endif
