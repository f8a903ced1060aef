#include "zetaver/hodge.hpp"

namespace zv {

HodgeStructure::HodgeStructure(long weight, std::map<std::pair<long, long>, long> hpq,
                               std::optional<std::pair<long, long>> middle_split)
    : weight_(weight), hpq_(std::move(hpq)), middle_(std::move(middle_split)) {
    if (weight_ < 0) fail(errc::schema, "negative Hodge weight");
    for (auto& [pq, v] : hpq_) {
        if (v < 0) fail(errc::schema, "negative Hodge number");
        if (pq.first + pq.second != weight_) fail(errc::schema, "h^{p,q} entry off the weight diagonal");
        auto sym = hpq_.find({pq.second, pq.first});
        if (sym == hpq_.end() || sym->second != v) fail(errc::schema, "Hodge symmetry h^{p,q} = h^{q,p} violated");
    }
    if (weight_ % 2 == 0) {
        if (!middle_) fail(errc::schema, "even weight requires a middle split");
        if (middle_->first < 0 || middle_->second < 0) fail(errc::schema, "negative middle split");
        if (middle_->first + middle_->second != h(weight_ / 2, weight_ / 2))
            fail(errc::schema, "middle split does not sum to h^{i/2,i/2}");
    } else if (middle_) {
        fail(errc::schema, "odd weight must not carry a middle split");
    }
}

long HodgeStructure::h(long p, long q) const {
    auto it = hpq_.find({p, q});
    return it == hpq_.end() ? 0 : it->second;
}

long HodgeStructure::total_dim() const {
    long t = 0;
    for (auto& [pq, v] : hpq_) t += v;
    return t;
}

HodgeStructure HodgeStructure::dual(long dim_c) const {
    std::map<std::pair<long, long>, long> d;
    for (auto& [pq, v] : hpq_) d[{dim_c - pq.first, dim_c - pq.second}] = v;
    std::optional<std::pair<long, long>> ms;
    if (middle_) ms = middle_; // +/- labels pair with themselves under cup product
    return HodgeStructure(2 * dim_c - weight_, std::move(d), std::move(ms));
}

long GammaFactor::total_degree() const {
    long t = 0;
    for (auto& f : factors) t += f.exponent * (f.kind == gamma_kind::cplx ? 2 : 1);
    return t;
}

GammaFactor gamma_factor(const HodgeStructure& H) {
    GammaFactor g;
    long i = H.weight();
    for (auto& [pq, v] : H.table()) {
        if (v == 0) continue;
        if (pq.first < pq.second)
            g.factors.push_back({gamma_kind::cplx, -pq.first, v});
    }
    if (i % 2 == 0) {
        long m = i / 2;
        if (H.middle_plus() > 0) g.factors.push_back({gamma_kind::real, -m, H.middle_plus()});
        if (H.middle_minus() > 0) g.factors.push_back({gamma_kind::real, -m + 1, H.middle_minus()});
    }
    if (g.total_degree() != H.total_dim())
        fail(errc::internal, "Gamma factor degree mismatch");
    return g;
}

namespace {

// dim (H^i(C)/F^n)^{G_R} = sum_{p<n} h^{p,q}
long quotient_dim(const HodgeStructure& H, long n) {
    long t = 0;
    for (auto& [pq, v] : H.table())
        if (pq.first < n) t += v;
    return t;
}

// dim H^i(R(n))^{G_R} = sum_{p<q} h^{p,q} + h^{i/2, (-1)^(n-i/2)}
long invariant_dim(const HodgeStructure& H, long n) {
    long t = 0;
    for (auto& [pq, v] : H.table())
        if (pq.first < pq.second) t += v;
    if (H.weight() % 2 == 0) {
        long sign = ((n - H.weight() / 2) % 2 == 0) ? 1 : -1;
        t += (sign > 0) ? H.middle_plus() : H.middle_minus();
    }
    return t;
}

} // namespace

long linfty_order(const HodgeStructure& H, long n) {
    long i = H.weight();
    // closed form
    long s = 0;
    for (auto& [pq, v] : H.table())
        if (n <= pq.first && pq.first < pq.second) s += v;
    if (i % 2 == 0 && 2 * n <= i) {
        long sign = ((n - i / 2) % 2 == 0) ? 1 : -1;
        s += (sign > 0) ? H.middle_plus() : H.middle_minus();
    }
    long closed = -s;
    // factor by factor
    long via_factors = 0;
    for (auto& f : gamma_factor(H).factors)
        via_factors += f.exponent * gamma_leading_sym(f.kind, n + f.shift).order;
    if (closed != via_factors)
        fail(errc::dimension_mismatch, "L_inf order: closed form != Gamma-factor sum");
    return closed;
}

lead_data linfty_leading_sym(const HodgeStructure& H, long n) {
    lead_data d;
    d.order = 0;
    sym_real c(rat(1));
    for (auto& f : gamma_factor(H).factors) {
        lead_data g = gamma_leading_sym(f.kind, n + f.shift);
        d.order += f.exponent * g.order;
        c = c * g.coeff.sym().pow(f.exponent);
    }
    d.coeff = lead_value(c);
    return d;
}

std::map<long, long> deligne_dims(const HodgeStructure& H, long n) {
    std::map<long, long> out;
    long i = H.weight();
    long q = quotient_dim(H, n);
    long v = invariant_dim(H, n);
    if (i + 1 <= 2 * n - 1) {
        long dim = q - v; // coker(H^i(R(n)) -> H^i(C)/F^n), the map is injective here
        if (dim < 0) fail(errc::negative_dimension, "inconsistent Hodge input (cokernel)");
        if (dim > 0) out[i + 1] = dim;
    }
    if (i >= 2 * n) {
        long dim = v - q; // ker, the map is surjective here
        if (dim < 0) fail(errc::negative_dimension, "inconsistent Hodge input (kernel)");
        if (dim > 0) out[i] = dim;
    }
    return out;
}

HodgeStructure number_ring_hodge(long r1, long r2) {
    std::map<std::pair<long, long>, long> h;
    h[{0, 0}] = r1 + 2 * r2;
    return HodgeStructure(0, std::move(h), std::make_pair(r1 + r2, r2));
}

lead_data completed_zeta_leading_data(const NumberFieldRecord& F, long n, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    HodgeStructure H = number_ring_hodge(F.r1(), F.r2());
    lead_data zf = dedekind_zeta_leading_data(F, n, prec);
    lead_data li = linfty_leading_sym(H, n);
    if (li.order != linfty_order(H, n)) fail(errc::internal, "L_inf leading/order mismatch");
    lead_data d;
    d.order = zf.order + li.order;
    d.coeff = lv_mul(zf.coeff, li.coeff, wp);
    long expect = rho_order(F, n) + linfty_order(H, n);
    if (d.order != expect) fail(errc::order_mismatch, "completed zeta order != rho_n + ord L_inf");
    return d;
}

LeadingTaylor completed_zeta_leading(const NumberFieldRecord& F, long n, mpfr_prec_t prec) {
    return completed_zeta_leading_data(F, n, prec).to_public(n, prec);
}

} // namespace zv
