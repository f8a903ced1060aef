#ifndef ZETAVER_HODGE_HPP
#define ZETAVER_HODGE_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zetaver/gamma_leading.hpp"
#include "zetaver/number_field.hpp"

namespace zv {

// Pure weight-i piece of the Betti cohomology of the complex fibre:
// Hodge numbers h^{p,q} (p + q = i) and, for even weight, the splitting of
// the middle piece into de-Rham-conjugation eigenspaces
// h^{p,+/-} = dim (H^{p,p})^{F_inf = +/- (-1)^p}.
class HodgeStructure {
public:
    HodgeStructure(long weight, std::map<std::pair<long, long>, long> hpq,
                   std::optional<std::pair<long, long>> middle_split);

    long weight() const { return weight_; }
    long h(long p, long q) const;
    long middle_plus() const { return middle_ ? middle_->first : 0; }
    long middle_minus() const { return middle_ ? middle_->second : 0; }
    long total_dim() const;
    const std::map<std::pair<long, long>, long>& table() const { return hpq_; }

    // Poincare-dual structure inside an ambient variety of dimension
    // dim_c = d - 1: weight 2 dim_c - i, h'^{p,q} = h^{dim_c - p, dim_c - q},
    // eigenspace labels preserved.
    HodgeStructure dual(long dim_c) const;

private:
    long weight_;
    std::map<std::pair<long, long>, long> hpq_;
    std::optional<std::pair<long, long>> middle_;
};

// One archimedean Gamma factor: kind(s + shift)^exponent.
struct GammaFactorEntry {
    gamma_kind kind;
    long shift;
    long exponent;
};

struct GammaFactor {
    std::vector<GammaFactorEntry> factors;
    long total_degree() const; // Gamma_R counts 1, Gamma_C counts 2, per exponent
};

// L_inf(h^i, s) = prod_{p<q} Gamma_C(s-p)^{h^{p,q}}
//              * Gamma_R(s - i/2)^{h^{i/2,+}} Gamma_R(s - i/2 + 1)^{h^{i/2,-}}
GammaFactor gamma_factor(const HodgeStructure& H);

// ord_{s=n} L_inf(h^i, s), computed both from the closed form
// -( sum_{n<=p<q} h^{p,q} + [n <= i/2] h^{i/2, (-1)^(n-i/2)} )
// and factor by factor from gamma_leading; they must agree.
long linfty_order(const HodgeStructure& H, long n);

// Exact leading data of L_inf(h^i, s) at s = n (rational * pi powers).
lead_data linfty_leading_sym(const HodgeStructure& H, long n);

// dim_R H^m_D(X_/R, R(n)) contributions of the single weight-i structure:
// degree i+1 (when i+1 <= 2n-1) from the cokernel sequence, degree i (when
// i >= 2n) from the kernel sequence.  Degrees with zero dimension are omitted.
std::map<long, long> deligne_dims(const HodgeStructure& H, long n);

// The canonical archimedean package of Spec O_F: a single weight-0
// structure with h^{0,0} = r1 + 2 r2 and middle split (r1 + r2, r2),
// equivalently r1 real-type plus r2 complex-type pieces.
HodgeStructure number_ring_hodge(long r1, long r2);

// Completed zeta leading data: zeta(Xbar, s) = zeta_F(s) * L_inf(h^0, s).
// Order must equal rho_n + ord L_inf.
LeadingTaylor completed_zeta_leading(const NumberFieldRecord& F, long n, mpfr_prec_t prec);
lead_data completed_zeta_leading_data(const NumberFieldRecord& F, long n, mpfr_prec_t prec);

} // namespace zv

#endif
