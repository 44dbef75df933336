#include "kwise/moment.hpp"

#include <cmath>

#include "kwise/enumeration.hpp"
#include "kwise/error.hpp"

namespace kwise {

namespace {

void check_order_exact(unsigned p) {
  if (p < 2) fail(ErrorCode::kInvalidArgument, "moment order p must be at least 2");
}

void check_order_real(double p) {
  if (!(p >= 2.0)) fail(ErrorCode::kInvalidArgument, "moment order p must be at least 2");
}

void check_dims(unsigned n, const Coefficients& a) {
  if (a.size() != n)
    fail(ErrorCode::kInvalidArgument, "coefficient length does not match measure dimension");
}

Rational weighted_sum(const Coefficients& a, std::uint32_t point) {
  Rational s;
  for (unsigned i = 0; i < a.size(); ++i) {
    if ((point >> i) & 1u)
      s += a[i];
    else
      s -= a[i];
  }
  return s;
}

}  // namespace

Rational moment(const AtomicMeasure& m, const Coefficients& a, unsigned p) {
  check_order_exact(p);
  check_dims(m.n(), a);
  Rational acc;
  for (const auto& [point, mass] : m.atoms())
    acc += mass * weighted_sum(a, point).abs().pow(p);
  return acc;
}

Rational moment(const OrbitMeasure& m, const Coefficients& a, unsigned p) {
  check_order_exact(p);
  check_dims(m.n(), a);
  const unsigned n = m.n();
  if (a.all_equal()) {
    Rational scale = a[0].abs().pow(p);
    Rational acc;
    for (unsigned w = 0; w <= n; ++w) {
      if (m.weight(w).is_zero()) continue;
      acc += m.weight(w) * Rational(2L * w - static_cast<long>(n)).abs().pow(p);
    }
    return scale * acc;
  }
  if (n > kMaxAtomicN)
    fail(ErrorCode::kGuard,
         "orbit moment with non-equal coefficients enumerates points; n <= " +
             std::to_string(kMaxAtomicN) + " required");
  Rational acc;
  for (unsigned w = 0; w <= n; ++w) {
    if (m.weight(w).is_zero()) continue;
    Rational orbit_acc;
    for_each_weight_mask(n, w, [&](std::uint32_t point) {
      orbit_acc += weighted_sum(a, point).abs().pow(p);
    });
    acc += m.weight(w) / Rational::binomial(n, w) * orbit_acc;
  }
  return acc;
}

namespace {

BigFloat abs_pow(const Rational& base, double p) {
  return BigFloat::pow(base.abs(), p);
}

}  // namespace

BigFloat moment_approx(const AtomicMeasure& m, const Coefficients& a, double p) {
  check_order_real(p);
  check_dims(m.n(), a);
  BigFloat acc;
  for (const auto& [point, mass] : m.atoms())
    acc += BigFloat(mass) * abs_pow(weighted_sum(a, point), p);
  return acc;
}

BigFloat moment_approx(const OrbitMeasure& m, const Coefficients& a, double p) {
  check_order_real(p);
  check_dims(m.n(), a);
  const unsigned n = m.n();
  if (a.all_equal()) {
    BigFloat acc;
    for (unsigned w = 0; w <= n; ++w) {
      if (m.weight(w).is_zero()) continue;
      Rational centered = a[0].abs() * Rational(2L * w - static_cast<long>(n)).abs();
      acc += BigFloat(m.weight(w)) * abs_pow(centered, p);
    }
    return acc;
  }
  if (n > kMaxAtomicN)
    fail(ErrorCode::kGuard,
         "orbit moment with non-equal coefficients enumerates points; n <= " +
             std::to_string(kMaxAtomicN) + " required");
  BigFloat acc;
  for (unsigned w = 0; w <= n; ++w) {
    if (m.weight(w).is_zero()) continue;
    BigFloat orbit_acc;
    for_each_weight_mask(n, w, [&](std::uint32_t point) {
      orbit_acc += abs_pow(weighted_sum(a, point), p);
    });
    acc += BigFloat(m.weight(w) / Rational::binomial(n, w)) * orbit_acc;
  }
  return acc;
}

}  // namespace kwise
