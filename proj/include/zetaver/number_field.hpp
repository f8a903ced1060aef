#ifndef ZETAVER_NUMBER_FIELD_HPP
#define ZETAVER_NUMBER_FIELD_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zetaver/dirichlet.hpp"
#include "zetaver/leading.hpp"

namespace zv {

// K-theoretic invariants per twist: h_n = |H^2|, w_n = |H^1_tor|,
// R_n = regulator covolume.  (h_1, w_1, R_1) = (class number, torsion unit
// order, Dirichlet regulator).
struct KTheoryData {
    struct Entry {
        mpz_class h;
        mpz_class w;
        ball R;
    };
    std::map<long, Entry> entries;

    bool has(long n) const { return entries.count(n) != 0; }
    const Entry& at(long n) const { return entries.at(n); }
};

class NumberFieldRecord {
public:
    NumberFieldRecord(std::string label, long degree, long r1, long r2, mpz_class disc,
                      std::vector<DirichletCharacter> abelian_data = {},
                      std::optional<KTheoryData> invariants = std::nullopt);

    const std::string& label() const { return label_; }
    long degree() const { return degree_; }
    long r1() const { return r1_; }
    long r2() const { return r2_; }
    const mpz_class& disc() const { return disc_; }
    mpz_class abs_disc() const { return abs(disc_); }
    bool has_abelian_data() const { return !chars_.empty(); }
    const std::vector<DirichletCharacter>& characters() const { return chars_; }
    const std::optional<KTheoryData>& invariants() const { return invariants_; }
    void set_invariants(std::optional<KTheoryData> k) { invariants_ = std::move(k); }

    // external leading-Taylor source for non-abelian, data-fed records
    using zeta_source = std::function<lead_data(long n, mpfr_prec_t prec)>;
    void attach_zeta_source(zeta_source src) { external_ = std::move(src); }
    bool has_zeta_source() const { return static_cast<bool>(external_); }
    const zeta_source& zeta_src() const { return external_; }

private:
    std::string label_;
    long degree_, r1_, r2_;
    mpz_class disc_;
    std::vector<DirichletCharacter> chars_;
    std::optional<KTheoryData> invariants_;
    zeta_source external_;
};

// Vanishing order of zeta_F at s = n (closed form):
// r2 (n < 0 odd), r1 + r2 (n < 0 even), r1 + r2 - 1 (n = 0), -1 (n = 1), 0 (n > 1).
long rho_order(long r1, long r2, long n);
inline long rho_order(const NumberFieldRecord& F, long n) { return rho_order(F.r1(), F.r2(), n); }

// delta_{i,n} = 1 iff n = i mod 2
inline long delta_parity(long i, long n) { return ((n - i) % 2 == 0) ? 1 : 0; }
// epsilon_{i,n} = delta_{i,n} on 1 <= i <= n or n < i < 0, else 0
inline long epsilon_tors(long i, long n) {
    bool in_range = (1 <= i && i <= n) || (n < i && i < 0);
    return in_range ? delta_parity(i, n) : 0;
}

// zeta_F(n) as exact-or-ball for n >= 2 (product of L-values over the
// character group, conjugate pairs multiplied together).
lead_value dedekind_zeta_value(const NumberFieldRecord& F, long n, mpfr_prec_t prec);

// Residue of zeta_F at s = 1: product of L(1, chi) over nontrivial chi.
lead_value dedekind_residue(const NumberFieldRecord& F, mpfr_prec_t prec);

// Internal leading data of zeta_F at any integer n.  For n <= 0 this routes
// through the completed functional equation with exact Gamma leading data,
// so orders are exact and, over Q, the values themselves stay rational.
lead_data dedekind_zeta_leading_data(const NumberFieldRecord& F, long n, mpfr_prec_t prec);

// Public operation: also checks the analytic order against rho_order.
LeadingTaylor dedekind_zeta_leading(const NumberFieldRecord& F, long n, mpfr_prec_t prec);

// w_n: largest m such that Gal(F(mu_m)/F) has exponent dividing n,
// prime by prime from the character group.  Requires abelian data, n >= 1.
mpz_class torsion_w_n(const NumberFieldRecord& F, long n);

} // namespace zv

#endif
