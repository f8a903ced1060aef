#ifndef ZETAVER_LEADING_HPP
#define ZETAVER_LEADING_HPP

#include <optional>
#include <string>
#include <variant>

#include "zetaver/ball.hpp"
#include "zetaver/errors.hpp"
#include "zetaver/rational.hpp"

namespace zv {

// Exact value of the form coeff * pi^pi_pow.  Gamma-factor leading data at
// integer points always lands in this class, which is what keeps the
// functional-equation bookkeeping exact.
struct sym_real {
    rat coeff;
    long pi_pow = 0;

    sym_real() : coeff(0) {}
    explicit sym_real(rat c, long p = 0) : coeff(std::move(c)), pi_pow(p) {}

    bool is_zero() const { return coeff == 0; }
    bool is_rational() const { return pi_pow == 0 || coeff == 0; }

    sym_real operator*(const sym_real& o) const { return sym_real(coeff * o.coeff, pi_pow + o.pi_pow); }
    sym_real operator-() const { return sym_real(-coeff, pi_pow); }
    sym_real inverse() const {
        if (coeff == 0) fail(errc::division_by_zero, "inverse of zero symbolic value");
        return sym_real(rat(1) / coeff, -pi_pow);
    }
    sym_real pow(long e) const { return sym_real(pow_q(coeff, e), pi_pow * e); }

    ball to_ball(mpfr_prec_t prec) const {
        ball c = ball::from_rat(coeff, prec);
        if (pi_pow == 0) return c;
        return mul(c, pow_si(ball::pi(prec), pi_pow, prec), prec);
    }
    std::string str() const {
        if (pi_pow == 0) return coeff.get_str();
        return coeff.get_str() + " * pi^" + std::to_string(pi_pow);
    }
};

// Value that is exact when possible and a ball otherwise; products degrade
// to balls only when one side already has.
struct lead_value {
    std::variant<sym_real, ball> v;

    lead_value() : v(sym_real(rat(1))) {}
    lead_value(sym_real s) : v(std::move(s)) {}
    lead_value(ball b) : v(std::move(b)) {}

    bool exact() const { return std::holds_alternative<sym_real>(v); }
    const sym_real& sym() const { return std::get<sym_real>(v); }
    ball to_ball(mpfr_prec_t prec) const {
        if (exact()) return sym().to_ball(prec);
        return std::get<ball>(v);
    }
    bool definitely_nonzero() const {
        if (exact()) return !sym().is_zero();
        return !std::get<ball>(v).contains_zero();
    }
    std::string str() const { return exact() ? sym().str() : std::get<ball>(v).str(); }
};

inline lead_value lv_mul(const lead_value& a, const lead_value& b, mpfr_prec_t prec) {
    if (a.exact() && b.exact()) return lead_value(a.sym() * b.sym());
    return lead_value(mul(a.to_ball(prec), b.to_ball(prec), prec));
}

inline lead_value lv_div(const lead_value& a, const lead_value& b, mpfr_prec_t prec) {
    if (a.exact() && b.exact()) return lead_value(a.sym() * b.sym().inverse());
    return lead_value(div(a.to_ball(prec), b.to_ball(prec), prec));
}

inline lead_value lv_neg_if(const lead_value& a, bool negate) {
    if (!negate) return a;
    if (a.exact()) return lead_value(-a.sym());
    return lead_value(neg(std::get<ball>(a.v)));
}

// Leading Taylor data of a meromorphic function at an integer point:
// f(s) = coefficient * (s - point)^order * (1 + O(s - point)).
// Negative order means a pole.  The constructor refuses coefficients whose
// enclosure contains zero, since then the order claim is unverified.
struct LeadingTaylor {
    long point = 0;
    long order = 0;
    std::variant<rat, ball> coefficient;

    LeadingTaylor(long pt, long ord, rat c) : point(pt), order(ord), coefficient(std::move(c)) {
        if (std::get<rat>(coefficient) == 0)
            fail(errc::unverified_order, "leading coefficient is zero");
    }
    LeadingTaylor(long pt, long ord, ball c) : point(pt), order(ord), coefficient(std::move(c)) {
        if (std::get<ball>(coefficient).contains_zero())
            fail(errc::unverified_order, "leading coefficient ball contains zero");
    }

    bool exact() const { return std::holds_alternative<rat>(coefficient); }
    const rat& rational() const { return std::get<rat>(coefficient); }
    ball to_ball(mpfr_prec_t prec) const {
        if (exact()) return ball::from_rat(rational(), prec);
        return std::get<ball>(coefficient);
    }
    std::string coeff_str() const {
        return exact() ? rational().get_str() : std::get<ball>(coefficient).str();
    }
};

// Internal leading data that can stay symbolic (pi powers) through the
// functional-equation algebra.
struct lead_data {
    long order = 0;
    lead_value coeff;

    LeadingTaylor to_public(long point, mpfr_prec_t prec) const {
        if (coeff.exact() && coeff.sym().is_rational())
            return LeadingTaylor(point, order, coeff.sym().coeff);
        return LeadingTaylor(point, order, coeff.to_ball(prec));
    }
};

// Leading data of s |-> f(1-s) at s = n, given that of f at 1-n:
// the order is unchanged and the coefficient picks up (-1)^order.
inline lead_data reflect(const lead_data& d) {
    lead_data r = d;
    r.coeff = lv_neg_if(r.coeff, (d.order % 2) != 0);
    return r;
}

} // namespace zv

#endif
