#ifndef KWISE_MEASURE_HPP
#define KWISE_MEASURE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kwise/rational.hpp"

namespace kwise {

// Atomic (per point) operations enumerate up to 2^n points; orbit operations
// are polynomial in n and allow much larger dimensions.
inline constexpr unsigned kMaxAtomicN = 24;
inline constexpr unsigned kMaxOrbitN = 10000;

// One point of the sign hypercube {-1,+1}^n, n <= kMaxAtomicN.
// Bit i of the mask set means entry i is +1.
class SignVector {
 public:
  SignVector(unsigned n, std::uint32_t mask);

  // "++-+" style, one character per entry, leftmost is entry 1.
  static SignVector parse(unsigned n, const std::string& text);

  unsigned size() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  int sign(unsigned i) const { return (mask_ >> i) & 1u ? 1 : -1; }  // i in 0..n-1
  std::string str() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector&, const SignVector&) = default;

 private:
  unsigned n_;
  std::uint32_t mask_;
};

// Number of +1 entries.
unsigned hamming_weight(const SignVector& v);

// Weight vector a in Q^n paired with the moment order; rejects the all-zero
// vector so normalized constants stay well defined.
class Coefficients {
 public:
  Coefficients(unsigned n, std::vector<Rational> a);

  static Coefficients ones(unsigned n);
  static Coefficients constant(unsigned n, const Rational& value);

  unsigned size() const { return n_; }
  const Rational& operator[](unsigned i) const { return a_[i]; }
  const std::vector<Rational>& values() const { return a_; }

  bool all_equal() const;
  Rational norm2_squared() const;  // sum of a_i^2
  Rational norm4_fourth() const;   // sum of a_i^4

 private:
  unsigned n_;
  std::vector<Rational> a_;
};

// Exchangeable probability measure on {-1,+1}^n stored as one mass per
// Hamming-weight orbit: weight(w) is the total mass of the C(n,w) points
// with exactly w entries equal to +1.
class OrbitMeasure {
 public:
  OrbitMeasure(unsigned n, std::vector<Rational> weights);

  unsigned n() const { return n_; }
  const Rational& weight(unsigned w) const { return weights_[w]; }
  const std::vector<Rational>& weights() const { return weights_; }
  std::vector<unsigned> support() const;  // weights with nonzero mass
  mpz_class support_point_count() const;  // sum of C(n,w) over the support

  friend bool operator==(const OrbitMeasure&, const OrbitMeasure&) = default;

 private:
  unsigned n_;
  std::vector<Rational> weights_;  // size n+1, nonnegative, sums to 1
};

// General probability measure on {-1,+1}^n as a sparse atom map. Atoms carry
// strictly positive mass and the masses sum to 1.
class AtomicMeasure {
 public:
  AtomicMeasure(unsigned n, std::map<std::uint32_t, Rational> atoms);

  unsigned n() const { return n_; }
  const std::map<std::uint32_t, Rational>& atoms() const { return atoms_; }
  std::size_t support_size() const { return atoms_.size(); }
  Rational mass(std::uint32_t mask) const;

  friend bool operator==(const AtomicMeasure&, const AtomicMeasure&) = default;

 private:
  unsigned n_;
  std::map<std::uint32_t, Rational> atoms_;
};

// Spread each orbit's mass uniformly over its C(n,w) points.
// Guarded: requires n <= kMaxAtomicN.
AtomicMeasure orbit_to_atomic(const OrbitMeasure& m);

// Collect atom mass by Hamming weight. The result is the permutation
// average of m; it preserves k-wise independence and every statistic that is
// a function of the weight alone, E|sum eps_i|^p in particular. Moments of
// general weighted sums are not preserved.
OrbitMeasure symmetrize(const AtomicMeasure& m);

}  // namespace kwise

#endif
