#include "kwise/rational.hpp"

#include <cctype>
#include <ostream>

#include "kwise/error.hpp"

namespace kwise {

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorCode::kInvalidArgument, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::kInvalidArgument, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

void Rational::submul(const Rational& a, const Rational& b) {
  static thread_local mpq_class scratch;
  mpq_mul(scratch.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
  mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), scratch.get_mpq_t());
}

namespace {

// Canonical integer literal: "0" or [-]?[1-9][0-9]*.
bool is_canonical_int(std::string_view s, bool allow_sign) {
  if (!s.empty() && s[0] == '-') {
    if (!allow_sign) return false;
    s.remove_prefix(1);
  }
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return s == "0" || s[0] != '0';
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view num_part = text;
  std::string_view den_part;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
    if (den_part.find('/') != std::string_view::npos)
      fail(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
  }
  if (!is_canonical_int(num_part, /*allow_sign=*/true) ||
      (!den_part.empty() && !is_canonical_int(den_part, /*allow_sign=*/false)))
    fail(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");

  mpz_class num(std::string(num_part), 10);
  mpz_class den = den_part.empty() ? mpz_class(1) : mpz_class(std::string(den_part), 10);
  if (den == 0) fail(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");

  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1 && num != 0)
    fail(ErrorCode::kParse, "rational not in lowest terms: '" + std::string(text) + "'");
  if (num == 0 && den != 1)
    fail(ErrorCode::kParse, "zero must be written '0': '" + std::string(text) + "'");

  mpq_class q;
  mpz_set(mpq_numref(q.get_mpq_t()), num.get_mpz_t());
  mpz_set(mpq_denref(q.get_mpq_t()), den.get_mpz_t());
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
  return Rational(binomial_z(n, k));
}

Rational Rational::pow2(long e) {
  mpq_class q(1);
  if (e >= 0)
    mpz_mul_2exp(mpq_numref(q.get_mpq_t()), mpq_numref(q.get_mpq_t()),
                 static_cast<unsigned long>(e));
  else
    mpz_mul_2exp(mpq_denref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()),
                 static_cast<unsigned long>(-e));
  return Rational(std::move(q));
}

Rational Rational::pow(unsigned long e) const {
  mpq_class r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(v_.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(v_.get_mpq_t()), e);
  return Rational(std::move(r));  // power of a canonical fraction is canonical
}

Rational Rational::abs() const {
  mpq_class r;
  mpq_abs(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(r));
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_;
}

mpz_class binomial_z(unsigned long n, unsigned long k) {
  mpz_class r;
  if (k > n) return r;  // 0
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational sum(const std::vector<Rational>& xs) {
  Rational s;
  for (const auto& x : xs) s += x;
  return s;
}

}  // namespace kwise
