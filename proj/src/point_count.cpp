#include "zetaver/point_count.hpp"

#include <algorithm>
#include <cctype>

namespace zv {

namespace {

bool is_prime_l(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long pow_mod(long b, long e, long m) {
    long r = 1 % m;
    b = mod_pos(b, m);
    while (e > 0) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

// quadratic character of F_q (q odd prime): 0, +1, -1
int legendre(long a, long q) {
    a = mod_pos(a, q);
    if (a == 0) return 0;
    long e = pow_mod(a, (q - 1) / 2, q);
    return e == 1 ? 1 : -1;
}

long eval_mod(const std::vector<long>& f, long x, long q) {
    long acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = mod_pos(acc * x + *it, q);
    return acc;
}

// gcd(f, f') = const over F_q detects squarefree-ness of the model
bool squarefree_mod(const std::vector<long>& f, long q) {
    std::vector<long> a, b;
    for (long c : f) a.push_back(mod_pos(c, q));
    for (std::size_t i = 1; i < f.size(); ++i) b.push_back(mod_pos(static_cast<long>(i) * f[i], q));
    auto trim = [](std::vector<long>& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
    trim(a);
    trim(b);
    if (a.empty()) return false;
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            long lead = a.back();
            long inv = pow_mod(b.back(), q - 2, q);
            long fct = (lead * inv) % q;
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[off + i] = mod_pos(a[off + i] - fct * b[i], q);
            trim(a);
        }
        std::swap(a, b);
    }
    return a.size() == 1; // nonzero constant
}

// F_{q^2} = F_q[u]/(u^2 - g) with g a nonresidue; the square test uses the
// norm: chi_{q^2}(z) = chi_q(N(z)), N(x0 + x1 u) = x0^2 - g x1^2.
struct Fq2 {
    long q, g;
    explicit Fq2(long q_) : q(q_) {
        g = 2;
        while (legendre(g, q) != -1) ++g;
    }
    int chi(long x0, long x1) const {
        long nrm = mod_pos(x0 * x0 - g * x1 * x1, q);
        return legendre(nrm, q);
    }
};

} // namespace

long CurveSpec::genus() const {
    long d = static_cast<long>(f.size()) - 1;
    return (d - 1) / 2;
}

CurveSpec parse_curve(const std::string& text) {
    // accept forms like "y^2 = x^3 + 2x - 1", "y2=x3+x"
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    auto eq = s.find('=');
    if (eq == std::string::npos) fail(errc::schema, "curve equation needs '='");
    std::string lhs = s.substr(0, eq), rhs = s.substr(eq + 1);
    if (lhs != "y^2" && lhs != "y2") fail(errc::schema, "left side must be y^2");
    std::vector<long> coeffs;
    auto bump = [&](long degree, long value) {
        if (degree < 0 || degree > 6) fail(errc::schema, "curve degree out of range");
        if (static_cast<long>(coeffs.size()) <= degree) coeffs.resize(degree + 1, 0);
        coeffs[degree] += value;
    };
    std::size_t i = 0;
    while (i < rhs.size()) {
        long sign = 1;
        if (rhs[i] == '+') { ++i; }
        else if (rhs[i] == '-') { sign = -1; ++i; }
        long coef = 1;
        bool have_digits = false;
        long num = 0;
        while (i < rhs.size() && std::isdigit(static_cast<unsigned char>(rhs[i]))) {
            num = num * 10 + (rhs[i] - '0');
            have_digits = true;
            ++i;
        }
        if (have_digits) coef = num;
        if (i < rhs.size() && rhs[i] == '*') ++i;
        long degree = 0;
        if (i < rhs.size() && rhs[i] == 'x') {
            ++i;
            degree = 1;
            if (i < rhs.size() && rhs[i] == '^') ++i;
            if (i < rhs.size() && std::isdigit(static_cast<unsigned char>(rhs[i]))) {
                degree = 0;
                while (i < rhs.size() && std::isdigit(static_cast<unsigned char>(rhs[i])))
                    degree = degree * 10 + (rhs[i++] - '0');
            }
        } else if (!have_digits) {
            fail(errc::schema, "cannot parse curve term");
        }
        bump(degree, sign * coef);
    }
    CurveSpec c;
    c.f = std::move(coeffs);
    long d = static_cast<long>(c.f.size()) - 1;
    if (d < 3 || d > 6) fail(errc::schema, "supported curves have deg f in [3, 6]");
    return c;
}

PointCountResult point_count_curve(const CurveSpec& curve, long q) {
    if (!is_prime_l(q) || q > 10000) fail(errc::domain, "q must be a prime <= 10^4");
    if (q == 2) fail(errc::domain, "char-2 Weierstrass models are not supported (y^2 = f is singular)");
    if (!squarefree_mod(curve.f, q)) fail(errc::invariant_violation, "singular curve (f not squarefree mod q)");
    long d = static_cast<long>(curve.f.size()) - 1;
    PointCountResult out;
    out.q = q;
    long affine = 0;
    for (long x = 0; x < q; ++x) affine += 1 + legendre(eval_mod(curve.f, x, q), q);
    long at_inf;
    if (d % 2 == 1) at_inf = 1;
    else at_inf = (legendre(curve.f.back(), q) == 1) ? 2 : 0;
    out.count = affine + at_inf;
    long g = curve.genus();
    if (g == 0) {
        out.p1 = ipoly::one();
        return out;
    }
    if (g == 1) {
        long a = q + 1 - out.count;
        out.p1 = ipoly({mpz_class(1), mpz_class(-a), mpz_class(q)});
        return out;
    }
    if (g == 2) {
        if (q > 1000) return out; // P_1 undetermined beyond the enumeration guard
        Fq2 F(q);
        // count over F_{q^2}: x = x0 + x1 u, f(x) evaluated in F_{q^2}
        long affine2 = 0;
        for (long x0 = 0; x0 < q; ++x0)
            for (long x1 = 0; x1 < q; ++x1) {
                // evaluate f at (x0, x1)
                long v0 = 0, v1 = 0;
                for (auto it = curve.f.rbegin(); it != curve.f.rend(); ++it) {
                    long w0 = mod_pos(v0 * x0 + F.g * (v1 * x1 % q), q);
                    long w1 = mod_pos(v0 * x1 + v1 * x0, q);
                    v0 = mod_pos(w0 + *it, q);
                    v1 = w1;
                }
                if (v0 == 0 && v1 == 0) affine2 += 1;
                else affine2 += 1 + F.chi(v0, v1);
            }
        long at_inf2;
        if (d % 2 == 1) at_inf2 = 1;
        else at_inf2 = (F.chi(mod_pos(curve.f.back(), q), 0) == 1) ? 2 : 0;
        out.count_q2 = affine2 + at_inf2;
        long qq = q * q;
        long s1 = q + 1 - out.count;        // sum of eigenvalues
        long s2 = qq + 1 - *out.count_q2;   // sum of squares
        long e1 = s1;
        long e2 = (s1 * s1 - s2) / 2;
        // P_1 = 1 - e1 t + e2 t^2 - q e1 t^3 + q^2 t^4
        out.p1 = ipoly({mpz_class(1), mpz_class(-e1), mpz_class(e2), mpz_class(-q * e1), mpz_class(qq)});
        return out;
    }
    return out;
}

WeilPolySet curve_weil_data(const CurveSpec& curve, long q, const std::string& label) {
    PointCountResult pc = point_count_curve(curve, q);
    if (!pc.p1) fail(errc::domain, "P_1 undetermined for this curve/size");
    WeilPolySet W;
    W.label = label;
    W.q = q;
    W.dim_c = 1;
    W.polys[0] = ipoly::one_minus(mpz_class(1));
    W.polys[1] = *pc.p1;
    W.polys[2] = ipoly::one_minus(mpz_class(q));
    W.validate();
    return W;
}

} // namespace zv
