#ifndef KWISE_CONSTRUCTIONS_HPP
#define KWISE_CONSTRUCTIONS_HPP

#include "kwise/measure.hpp"
#include "kwise/rational.hpp"

namespace kwise {

// Fair coin on the two constant vectors: q_0 = q_n = 1/2. 1-wise independent
// and saturates the Cauchy-Schwarz bound sqrt(n) for the all-ones direction.
OrbitMeasure antipodal(unsigned n);

// Uniform measure on the points with n/2 entries of each sign: q_{n/2} = 1.
// Requires n even. The signed sum vanishes almost surely.
OrbitMeasure balanced(unsigned n);

// The mixture (1/n) * antipodal + ((n-1)/n) * balanced, i.e.
// q_0 = q_n = 1/(2n) and q_{n/2} = (n-1)/n. Requires n even, n >= 4.
// Pairwise (indeed 3-wise) independent with E|sum eps_i|^p = n^(p-1).
OrbitMeasure extremal_pairwise(unsigned n);

// Product measure of n fair coins: q_w = C(n,w) / 2^n.
OrbitMeasure independent(unsigned n);

// The common 4-fold mixed moment E[eps_i eps_j eps_k eps_l] of
// extremal_pairwise(n): equals 1/(n-3), nonzero, which is what certifies
// that the measure is not 4-wise independent. Requires n even, n >= 4.
Rational extremal_fourfold_correlation(unsigned n);

}  // namespace kwise

#endif
