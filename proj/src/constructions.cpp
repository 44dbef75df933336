#include "kwise/constructions.hpp"

#include "kwise/error.hpp"

namespace kwise {

namespace {

void require_even(unsigned n, const char* what) {
  if (n % 2 != 0)
    fail(ErrorCode::kInvalidArgument, std::string(what) + " requires even n, got " + std::to_string(n));
}

}  // namespace

OrbitMeasure antipodal(unsigned n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "antipodal requires n >= 1");
  std::vector<Rational> q(n + 1);
  q[0] = Rational(1, 2);
  q[n] = Rational(1, 2);
  return OrbitMeasure(n, std::move(q));
}

OrbitMeasure balanced(unsigned n) {
  require_even(n, "balanced");
  if (n < 2) fail(ErrorCode::kInvalidArgument, "balanced requires n >= 2");
  std::vector<Rational> q(n + 1);
  q[n / 2] = Rational(1);
  return OrbitMeasure(n, std::move(q));
}

OrbitMeasure extremal_pairwise(unsigned n) {
  require_even(n, "extremal_pairwise");
  if (n < 4)
    fail(ErrorCode::kInvalidArgument,
         "extremal_pairwise requires n >= 4 (n = 2 collapses onto the product measure)");
  std::vector<Rational> q(n + 1);
  q[0] = Rational(1, 2 * static_cast<long>(n));
  q[n] = q[0];
  q[n / 2] = Rational(static_cast<long>(n) - 1, static_cast<long>(n));
  return OrbitMeasure(n, std::move(q));
}

OrbitMeasure independent(unsigned n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "independent requires n >= 1");
  std::vector<Rational> q(n + 1);
  const Rational scale = Rational::pow2(-static_cast<long>(n));
  for (unsigned w = 0; w <= n; ++w) q[w] = Rational::binomial(n, w) * scale;
  return OrbitMeasure(n, std::move(q));
}

Rational extremal_fourfold_correlation(unsigned n) {
  require_even(n, "extremal_fourfold_correlation");
  if (n < 4) fail(ErrorCode::kInvalidArgument, "extremal_fourfold_correlation requires n >= 4");
  return Rational(1, static_cast<long>(n) - 3);
}

}  // namespace kwise
