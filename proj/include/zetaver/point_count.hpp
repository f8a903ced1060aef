#ifndef ZETAVER_POINT_COUNT_HPP
#define ZETAVER_POINT_COUNT_HPP

#include <optional>
#include <string>
#include <vector>

#include "zetaver/weil.hpp"

namespace zv {

// Affine model y^2 = f(x) with integer coefficients, deg f in [3, 6];
// the smooth projective model adds 1 point at infinity for odd deg f and
// 2 or 0 (leading coefficient square or not) for even deg f.
struct CurveSpec {
    std::vector<long> f; // coefficients of f, ascending
    long genus() const;  // (deg f - 1) / 2 rounded down
};

// Parses "y^2 = x^3 + a x + b" style equations, also the compact form
// "y2=x3+x".  Coefficients are integers.
CurveSpec parse_curve(const std::string& text);

struct PointCountResult {
    long q = 0;
    long count = 0;                 // #X(F_q) on the smooth model
    std::optional<ipoly> p1;        // P_1 when genus <= 2 determined
    std::optional<long> count_q2;   // #X(F_{q^2}) when it was needed
};

// Exact point enumeration over F_q (q an odd prime <= 10^4; char-2 input is
// rejected, as are singular models).  For genus 1 the trace comes from the
// count; for genus 2 an additional enumeration over F_{q^2} pins P_1
// (guarded to q <= 1000).
PointCountResult point_count_curve(const CurveSpec& curve, long q);

// Weil data of the smooth projective curve: P_0 = 1 - t, P_1, P_2 = 1 - qt.
WeilPolySet curve_weil_data(const CurveSpec& curve, long q, const std::string& label);

} // namespace zv

#endif
