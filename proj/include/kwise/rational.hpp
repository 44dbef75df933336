#ifndef KWISE_RATIONAL_HPP
#define KWISE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace kwise {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator). Thin value wrapper over GMP's mpq_class; every probability,
// moment and LP coefficient in this library is one of these.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}                       // NOLINT: implicit by intent
  Rational(long num, long den);
  explicit Rational(const mpz_class& z) : v_(z) {}
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Strict parse of "num" or "num/den": optional leading '-', no leading
  // zeros, positive denominator, lowest terms. Throws Error(kParse).
  static Rational parse(std::string_view text);

  static Rational binomial(unsigned long n, unsigned long k);
  static Rational pow2(long e);  // 2^e, e may be negative

  Rational pow(unsigned long e) const;
  Rational abs() const;
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  // Canonical decimal form, "num" when the denominator is 1, else "num/den".
  std::string str() const;
  double to_double() const { return v_.get_d(); }

  // *this -= a * b with scratch reuse; the simplex pivot loop lives on this.
  void submul(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

// Exact integer binomial coefficient; 0 when k > n.
mpz_class binomial_z(unsigned long n, unsigned long k);

// Sum of a vector, exact.
Rational sum(const std::vector<Rational>& xs);

}  // namespace kwise

#endif
