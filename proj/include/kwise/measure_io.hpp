#ifndef KWISE_MEASURE_IO_HPP
#define KWISE_MEASURE_IO_HPP

#include <string>
#include <variant>

#include "kwise/measure.hpp"

namespace kwise {

using Measure = std::variant<OrbitMeasure, AtomicMeasure>;

// Measure document format, one JSON object per file:
//   {"kind":"orbit","n":6,"weights":{"0":"1/12","3":"5/6","6":"1/12"}}
//   {"kind":"atomic","n":2,"atoms":{"+-":"1/2","-+":"1/2"}}
// Rationals are serialized in lowest terms, zero masses are omitted, keys
// are emitted in canonical order (numeric weights, lexicographic patterns),
// so serialization is byte-stable under round trips.
std::string serialize_measure(const Measure& m);

// Strict parser: rejects unknown fields, non-canonical or negative
// rationals, explicit zero masses, out-of-range weights and mass sums
// different from 1. Throws Error(kParse) / Error(kGuard).
Measure parse_measure(const std::string& text);

unsigned measure_n(const Measure& m);

}  // namespace kwise

#endif
