#include "kwise/measure.hpp"

#include <bit>

#include "kwise/enumeration.hpp"
#include "kwise/error.hpp"

namespace kwise {

SignVector::SignVector(unsigned n, std::uint32_t mask) : n_(n), mask_(mask) {
  if (n < 1 || n > kMaxAtomicN)
    fail(ErrorCode::kGuard, "sign vector length must be in 1.." + std::to_string(kMaxAtomicN));
  if (n < 32 && (mask >> n) != 0)
    fail(ErrorCode::kInvalidArgument, "sign vector mask has bits beyond n");
}

SignVector SignVector::parse(unsigned n, const std::string& text) {
  if (text.size() != n)
    fail(ErrorCode::kParse, "sign pattern '" + text + "' does not have length " + std::to_string(n));
  std::uint32_t mask = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (text[i] == '+')
      mask |= 1u << i;
    else if (text[i] != '-')
      fail(ErrorCode::kParse, "sign pattern may contain only '+' and '-': '" + text + "'");
  }
  return SignVector(n, mask);
}

std::string SignVector::str() const {
  std::string s(n_, '-');
  for (unsigned i = 0; i < n_; ++i)
    if ((mask_ >> i) & 1u) s[i] = '+';
  return s;
}

unsigned hamming_weight(const SignVector& v) { return std::popcount(v.mask()); }

Coefficients::Coefficients(unsigned n, std::vector<Rational> a) : n_(n), a_(std::move(a)) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "coefficient vector must be nonempty");
  if (a_.size() != n)
    fail(ErrorCode::kInvalidArgument, "coefficient count does not match n");
  bool any = false;
  for (const auto& x : a_) any = any || !x.is_zero();
  if (!any) fail(ErrorCode::kInvalidArgument, "coefficient vector must not be all zero");
}

Coefficients Coefficients::ones(unsigned n) {
  return Coefficients(n, std::vector<Rational>(n, Rational(1)));
}

Coefficients Coefficients::constant(unsigned n, const Rational& value) {
  return Coefficients(n, std::vector<Rational>(n, value));
}

bool Coefficients::all_equal() const {
  for (const auto& x : a_)
    if (x != a_[0]) return false;
  return true;
}

Rational Coefficients::norm2_squared() const {
  Rational s;
  for (const auto& x : a_) s += x * x;
  return s;
}

Rational Coefficients::norm4_fourth() const {
  Rational s;
  for (const auto& x : a_) s += x.pow(4);
  return s;
}

OrbitMeasure::OrbitMeasure(unsigned n, std::vector<Rational> weights)
    : n_(n), weights_(std::move(weights)) {
  if (n < 1 || n > kMaxOrbitN)
    fail(ErrorCode::kGuard, "orbit measure dimension must be in 1.." + std::to_string(kMaxOrbitN));
  if (weights_.size() != n + 1)
    fail(ErrorCode::kInvalidArgument, "orbit measure needs n+1 weights");
  Rational total;
  for (const auto& q : weights_) {
    if (q.sign() < 0) fail(ErrorCode::kInvalidArgument, "negative orbit weight");
    total += q;
  }
  if (total != Rational(1))
    fail(ErrorCode::kInvalidArgument, "orbit weights sum to " + total.str() + ", expected 1");
}

std::vector<unsigned> OrbitMeasure::support() const {
  std::vector<unsigned> s;
  for (unsigned w = 0; w <= n_; ++w)
    if (!weights_[w].is_zero()) s.push_back(w);
  return s;
}

mpz_class OrbitMeasure::support_point_count() const {
  mpz_class total = 0;
  for (unsigned w : support()) total += binomial_z(n_, w);
  return total;
}

AtomicMeasure::AtomicMeasure(unsigned n, std::map<std::uint32_t, Rational> atoms)
    : n_(n), atoms_(std::move(atoms)) {
  if (n < 1 || n > kMaxAtomicN)
    fail(ErrorCode::kGuard, "atomic measure dimension must be in 1.." + std::to_string(kMaxAtomicN));
  Rational total;
  for (const auto& [mask, mass] : atoms_) {
    if (n < 32 && (mask >> n) != 0)
      fail(ErrorCode::kInvalidArgument, "atom mask has bits beyond n");
    if (mass.sign() <= 0)
      fail(ErrorCode::kInvalidArgument, "atom masses must be strictly positive");
    total += mass;
  }
  if (total != Rational(1))
    fail(ErrorCode::kInvalidArgument, "atom masses sum to " + total.str() + ", expected 1");
}

Rational AtomicMeasure::mass(std::uint32_t mask) const {
  auto it = atoms_.find(mask);
  return it == atoms_.end() ? Rational(0) : it->second;
}

AtomicMeasure orbit_to_atomic(const OrbitMeasure& m) {
  if (m.n() > kMaxAtomicN)
    fail(ErrorCode::kGuard, "orbit_to_atomic limited to n <= " + std::to_string(kMaxAtomicN));
  std::map<std::uint32_t, Rational> atoms;
  for (unsigned w = 0; w <= m.n(); ++w) {
    if (m.weight(w).is_zero()) continue;
    Rational per_point = m.weight(w) / Rational::binomial(m.n(), w);
    for_each_weight_mask(m.n(), w, [&](std::uint32_t mask) { atoms.emplace(mask, per_point); });
  }
  return AtomicMeasure(m.n(), std::move(atoms));
}

OrbitMeasure symmetrize(const AtomicMeasure& m) {
  std::vector<Rational> weights(m.n() + 1);
  for (const auto& [mask, mass] : m.atoms())
    weights[std::popcount(mask)] += mass;
  return OrbitMeasure(m.n(), std::move(weights));
}

}  // namespace kwise
