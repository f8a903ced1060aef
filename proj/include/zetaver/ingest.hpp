#ifndef ZETAVER_INGEST_HPP
#define ZETAVER_INGEST_HPP

#include <string>

#include "zetaver/number_field.hpp"
#include "zetaver/weil.hpp"

namespace zv {

// Field record schema:
// { "label": str, "degree": int, "r1": int, "r2": int, "disc": int,
//   "characters": [ { "modulus": int, "order": int,
//                     "values": [[a, k], ...] } ],   // chi(a) = e(k/order)
//   "invariants": { "n": {"h": int, "w": int, "R": number|string}, ... } }
// Validation: signature/degree, conductor-discriminant, multiplicativity,
// primitivity, closure under inversion, parity count.
NumberFieldRecord ingest_field(const std::string& path);
NumberFieldRecord ingest_field_json(const std::string& json_text);

// Variety record schema:
// { "label": str, "q": int, "dim": int,
//   "polys": { "i": [coeffs ascending], ... },
//   "jordan": [ {"i": int, "e": int, "blocks": [int]} ],   // optional
//   "hodge": { "i,j": dim, ... } }                          // optional
struct VarietyRecord {
    WeilPolySet W;
    std::optional<HodgeNumbersFp> hodge;
};
VarietyRecord ingest_variety(const std::string& path);
VarietyRecord ingest_variety_json(const std::string& json_text);

std::string read_file(const std::string& path);

} // namespace zv

#endif
