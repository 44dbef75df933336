#ifndef KWISE_MOMENT_HPP
#define KWISE_MOMENT_HPP

#include "kwise/bigfloat.hpp"
#include "kwise/measure.hpp"
#include "kwise/rational.hpp"

namespace kwise {

// Exact p-th absolute moment E|sum_i a_i eps_i|^p, integer p >= 2.
//
// Atomic measures sum over their atoms. Orbit measures with an all-equal
// coefficient vector reduce to sum_w q_w |a_1|^p |2w-n|^p without touching
// individual points, which is what keeps large-n constants computable; with
// general coefficients the supported orbits are enumerated point by point
// (guarded by kMaxAtomicN).
Rational moment(const AtomicMeasure& m, const Coefficients& a, unsigned p);
Rational moment(const OrbitMeasure& m, const Coefficients& a, unsigned p);

// Approximate p-th absolute moment for real p >= 2, correctly rounded
// 128-bit arithmetic throughout (documented as at least 80 effective bits).
BigFloat moment_approx(const AtomicMeasure& m, const Coefficients& a, double p);
BigFloat moment_approx(const OrbitMeasure& m, const Coefficients& a, double p);

}  // namespace kwise

#endif
