#ifndef ZETAVER_ERRORS_HPP
#define ZETAVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zv {

// Every failure the engine can signal, so callers can branch on kind
// instead of parsing messages.
enum class errc {
    pole,               // evaluation at a pole of the function
    domain,             // argument outside the documented domain
    unverified_order,   // candidate leading coefficient ball contains 0
    order_mismatch,     // analytic order disagrees with the closed form
    dimension_mismatch, // two routes to the same dimension disagree
    negative_dimension, // inconsistent Hodge input
    duality_violation,  // rank/torsion symmetry failed
    invariant_violation,// a structural invariant of the input failed
    schema,             // malformed input record
    division_by_zero,   // ball divisor contains zero
    overflow_guard,     // input beyond the configured desk-scale bound
    internal,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }
private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

} // namespace zv

#endif
