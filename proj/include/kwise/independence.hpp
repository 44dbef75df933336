#ifndef KWISE_INDEPENDENCE_HPP
#define KWISE_INDEPENDENCE_HPP

#include <optional>
#include <vector>

#include "kwise/measure.hpp"
#include "kwise/rational.hpp"

namespace kwise {

// E[eps_{i_1} ... eps_{i_j}] for any j distinct coordinates under the uniform
// measure on the weight-w orbit of {-1,+1}^n. With i plus-one entries falling
// inside the chosen subset (hypergeometric count), the product contributes
// (-1)^(j-i), so the value is
//   sum_i (-1)^(j-i) C(j,i) C(n-j, w-i) / C(n,w).
Rational orbit_correlation(unsigned n, unsigned w, unsigned j);

// Exact mixed moment E[prod_{i in subset} eps_i]; indices are 1-based and
// must be distinct. For an orbit measure the value depends only on the
// subset size.
Rational correlation(const AtomicMeasure& m, const std::vector<unsigned>& subset);
Rational correlation(const OrbitMeasure& m, const std::vector<unsigned>& subset);

struct IndependenceWitness {
  std::vector<unsigned> subset;  // 1-based coordinates
  Rational value;                // the nonvanishing mixed moment
};

struct IndependenceReport {
  bool ok = false;
  std::optional<IndependenceWitness> witness;
};

// k-wise independence via vanishing mixed moments: ok iff every nonempty
// subset of at most k coordinates has zero correlation. On failure the
// witness is the first violating subset in (size, lexicographic) order.
IndependenceReport is_kwise_independent(const AtomicMeasure& m, unsigned k);
IndependenceReport is_kwise_independent(const OrbitMeasure& m, unsigned k);

// Largest k in 1..k_max for which the measure is k-wise independent;
// 0 when even single-coordinate marginals are biased.
unsigned independence_level(const AtomicMeasure& m, unsigned k_max);
unsigned independence_level(const OrbitMeasure& m, unsigned k_max);

}  // namespace kwise

#endif
