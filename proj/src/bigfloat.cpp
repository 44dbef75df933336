#include "kwise/bigfloat.hpp"

#include <cstdlib>
#include <cstring>

#include "kwise/error.hpp"

namespace kwise {

BigFloat BigFloat::root(const Rational& x, unsigned long k) {
  if (x.sign() < 0) fail(ErrorCode::kInvalidArgument, "root of a negative value");
  if (k == 0) fail(ErrorCode::kInvalidArgument, "zeroth root");
  BigFloat r(x);
  mpfr_rootn_ui(r.v_, r.v_, k, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow(const Rational& x, double e) {
  if (x.sign() < 0) fail(ErrorCode::kInvalidArgument, "real power of a negative value");
  BigFloat b(x), r;
  mpfr_t exp;
  mpfr_init2(exp, kPrecision);
  mpfr_set_d(exp, e, MPFR_RNDN);
  mpfr_pow(r.v_, b.v_, exp, MPFR_RNDN);
  mpfr_clear(exp);
  return r;
}

BigFloat BigFloat::pow(const BigFloat& x, const BigFloat& e) {
  if (mpfr_sgn(x.v_) < 0) fail(ErrorCode::kInvalidArgument, "real power of a negative value");
  BigFloat r;
  mpfr_pow(r.v_, x.v_, e.v_, MPFR_RNDN);
  return r;
}

Rational BigFloat::to_rational() const {
  if (!mpfr_number_p(v_)) fail(ErrorCode::kInvalidArgument, "non-finite float");
  if (mpfr_zero_p(v_)) return Rational(0);
  mpz_class mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v_);
  return Rational(mant) * Rational::pow2(e);
}

std::string BigFloat::str(int significant_digits) const {
  if (mpfr_zero_p(v_)) return "0";
  if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");

  mpfr_exp_t e;
  char* raw = mpfr_get_str(nullptr, &e, 10, significant_digits, v_, MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);

  std::string sign;
  if (digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  // digits is the mantissa d1 d2 ... dn with value 0.d1d2...dn * 10^e
  std::string out;
  if (e >= 1 && e <= significant_digits) {
    out = digits.substr(0, e);
    if (e < static_cast<mpfr_exp_t>(digits.size())) out += "." + digits.substr(e);
  } else if (e <= 0 && e > -4) {
    out = "0." + std::string(-e, '0') + digits;
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(e - 1);
  }
  return sign + out;
}

}  // namespace kwise
