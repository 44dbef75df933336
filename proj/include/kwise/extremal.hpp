#ifndef KWISE_EXTREMAL_HPP
#define KWISE_EXTREMAL_HPP

#include <variant>
#include <vector>

#include "kwise/bigfloat.hpp"
#include "kwise/measure.hpp"
#include "kwise/rational.hpp"
#include "kwise/simplex.hpp"

namespace kwise {

enum class LPMode { kOrbit, kFull };

// The moment LP over orbit weights q_0..q_n:
//   maximize sum_w q_w |2w-n|^p
//   subject to sum_w q_w = 1 and, for j = 1..k,
//              sum_w q_w * orbit_correlation(n, w, j) = 0.
// Feasible points are exactly the exchangeable k-wise independent measures,
// so the optimum is the p-th moment constant (to the p-th power) at equal
// coefficients.
LPProblem build_orbit_lp(unsigned n, unsigned p, unsigned k);

// Same LP with a real (non-integer) exponent: each objective coefficient
// |2w-n|^p is the exact rational value of its 128-bit rounding, and results
// carry an approximate label downstream.
LPProblem build_orbit_lp_real(unsigned n, double p, unsigned k);

// The moment LP over all 2^n point masses, no exchangeability restriction:
//   maximize sum_x P(x) |sum_i a_i x_i|^p
//   subject to sum_x P(x) = 1 and, for every nonempty subset S with |S| <= k,
//              sum_x P(x) prod_{i in S} x_i = 0.
// Row budget: n <= 14 and 1 + sum_{j<=k} C(n,j) <= 4096.
LPProblem build_full_lp(unsigned n, unsigned p, unsigned k, const Coefficients& a);

// One solved grid cell. moment_value is the exact LP optimum (the p-th power
// of the constant times ||a||_2^p); constant is its p-th root divided by
// ||a||_2, carried at 128-bit precision.
struct ConstantCell {
  unsigned n;
  double p;             // as requested; equals p_int when exact_p
  unsigned p_int;
  bool exact_p;
  unsigned k;
  LPMode mode;
  Rational moment_value;
  BigFloat constant;
  std::variant<OrbitMeasure, AtomicMeasure> optimizer;
  bool is_vertex;
  bool multiple_optima;
  bool optimizer_is_extremal;  // optimizer coincides with extremal_pairwise(n)
  bool approximate;            // real-p objective was rounded before solving
};

// Build and solve the cell. Orbit mode requires an all-equal coefficient
// vector (the orbit objective only sees |sum eps_i|); the moment scales with
// |a_1|^p and the normalized constant is scale invariant. LP infeasibility
// is a hard error: the independent measure is always feasible, so it can
// only signal a builder bug.
ConstantCell khintchine_cell(unsigned n, unsigned p, unsigned k, LPMode mode,
                             const Coefficients& a);
ConstantCell khintchine_cell_real(unsigned n, double p, unsigned k, const Coefficients& a);

// Closed-form dual certificate for the pairwise (k = 2) orbit LP at equal
// coefficients: u(1,1) = u(-1,-1) = n^p / C(n,2) and
// u(1,-1) = u(-1,1) = -(n-2)/n * u(1,1). Requires n even >= 4, p >= 2.
struct DualCertificate {
  unsigned n;
  unsigned p;
  Rational u11, u1m, um1, umm;
};

DualCertificate pairwise_dual_certificate(unsigned n, unsigned p);

// Pointwise verification of a certificate: on the weight-w orbit the pair
// sum collapses to C(w,2) u11 + C(n-w,2) umm + w(n-w) u1m, which must
// dominate |2w-n|^p. certified_value is the dual objective under any
// pairwise independent measure, C(n,2) (u11 + u1m) / 2; matches_primal
// compares it against the freshly solved k = 2 orbit LP optimum.
struct CertificateReport {
  bool feasible;
  std::vector<unsigned> equality_weights;
  std::vector<Rational> slack;  // pair sum minus |2w-n|^p, indexed by weight
  Rational certified_value;
  Rational primal_value;
  bool matches_primal;
};

CertificateReport verify_certificate(const DualCertificate& cert);

// Exact split of a pairwise independent exchangeable 4th moment:
//   E|sum a_i eps_i|^4 = (3 ||a||_2^4 - 2 ||a||_4^4) + c * sum_{i,j,k,l distinct} a_i a_j a_k a_l
// with c the common 4-fold mixed moment. The first term is the independent
// value, the cross sum runs over ordered tuples (24 e_4(a)).
struct QuarticDecomposition {
  Rational independent_part;
  Rational c;
  Rational cross_sum;
  Rational total;
};

QuarticDecomposition quartic_decompose(const OrbitMeasure& m, const Coefficients& a);

// For unit a with nonnegative entries: the 4-fold cross sum against its
// symmetric-mean bound 24 C(n,4) / n^2. Equality exactly at a_i = 1/sqrt(n).
struct MaclaurinGap {
  Rational cross_sum;
  Rational bound;
};

MaclaurinGap maclaurin_gap(const Coefficients& a);

// The p = 4 exchangeable comparison: for pairwise independent exchangeable m
// and unit a, E|sum a_i eps_i|^4 never exceeds the larger of the
// equal-coefficient moment of m and the independent moment of a.
bool quartic_bound_holds(const OrbitMeasure& m, const Coefficients& a);

}  // namespace kwise

#endif
