#ifndef KWISE_ENUMERATION_HPP
#define KWISE_ENUMERATION_HPP

#include <bit>
#include <cstdint>

namespace kwise {

// Visit every n-bit mask of popcount w in increasing order (Gosper's hack).
// Callers keep n <= kMaxAtomicN, so everything fits in 32 bits.
template <typename F>
void for_each_weight_mask(unsigned n, unsigned w, F&& f) {
  if (w == 0) {
    f(std::uint32_t{0});
    return;
  }
  const std::uint32_t limit = 1u << n;
  std::uint32_t x = (1u << w) - 1;
  while (x < limit) {
    f(x);
    std::uint32_t u = x & (~x + 1);
    std::uint32_t v = u + x;
    x = v + (((v ^ x) / u) >> 2);
  }
}

// Parity of the product of the entries selected by `subset` at the point
// `point`: +1 when the -1 entries inside the subset come in even number.
inline int subset_product_sign(std::uint32_t point, std::uint32_t subset) {
  unsigned minus_ones = std::popcount(subset & ~point);
  return (minus_ones & 1u) ? -1 : 1;
}

}  // namespace kwise

#endif
