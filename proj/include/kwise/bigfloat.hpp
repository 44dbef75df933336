#ifndef KWISE_BIGFLOAT_HPP
#define KWISE_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>

#include "kwise/rational.hpp"

namespace kwise {

// 128-bit significand float for everything the rational layer cannot hold:
// p-th roots of moments and real (non-integer) exponents. 128 bits comfortably
// clears the promised 80-bit effective significand.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kPrecision = 128;

  BigFloat() { mpfr_init2(v_, kPrecision); mpfr_set_zero(v_, 1); }
  explicit BigFloat(double d) { mpfr_init2(v_, kPrecision); mpfr_set_d(v_, d, MPFR_RNDN); }
  explicit BigFloat(const Rational& q) {
    mpfr_init2(v_, kPrecision);
    mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, kPrecision); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  // x^(1/k) for x >= 0
  static BigFloat root(const Rational& x, unsigned long k);
  // x^e for x >= 0, real exponent
  static BigFloat pow(const Rational& x, double e);
  static BigFloat pow(const BigFloat& x, const BigFloat& e);

  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Exact value as a dyadic rational (every finite float is one).
  Rational to_rational() const;

  // Fixed count of significant decimal digits, trailing zeros kept, so that
  // reports are diff-able. Falls back to exponent notation far from 1.
  std::string str(int significant_digits = 12) const;

 private:
  mpfr_t v_;
};

}  // namespace kwise

#endif
