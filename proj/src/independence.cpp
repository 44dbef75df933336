#include "kwise/independence.hpp"

#include <algorithm>

#include "kwise/enumeration.hpp"
#include "kwise/error.hpp"

namespace kwise {

Rational orbit_correlation(unsigned n, unsigned w, unsigned j) {
  if (w > n || j < 1 || j > n)
    fail(ErrorCode::kInvalidArgument, "orbit_correlation requires 0 <= w <= n and 1 <= j <= n");
  mpz_class acc = 0;
  for (unsigned i = 0; i <= j && i <= w; ++i) {
    mpz_class term = binomial_z(j, i) * binomial_z(n - j, w - i);
    if ((j - i) & 1u)
      acc -= term;
    else
      acc += term;
  }
  return Rational(acc) / Rational::binomial(n, w);
}

namespace {

void check_subset(unsigned n, const std::vector<unsigned>& subset) {
  if (subset.empty()) fail(ErrorCode::kInvalidArgument, "empty index subset");
  std::vector<unsigned> s = subset;
  std::sort(s.begin(), s.end());
  if (s.front() < 1 || s.back() > n)
    fail(ErrorCode::kInvalidArgument, "subset indices must lie in 1..n");
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    fail(ErrorCode::kInvalidArgument, "subset indices must be distinct");
}

std::uint32_t subset_mask(const std::vector<unsigned>& subset) {
  std::uint32_t mask = 0;
  for (unsigned i : subset) mask |= 1u << (i - 1);
  return mask;
}

// Enumerate size-1..k subsets in (size, lexicographic) order until the
// visitor returns false.
template <typename F>
void for_each_subset_upto(unsigned n, unsigned k, F&& visit) {
  std::vector<unsigned> subset;
  for (unsigned size = 1; size <= k; ++size) {
    subset.assign(size, 0);
    for (unsigned i = 0; i < size; ++i) subset[i] = i + 1;
    while (true) {
      if (!visit(subset)) return;
      // next combination of {1..n}
      int pos = static_cast<int>(size) - 1;
      while (pos >= 0 && subset[pos] == n - size + 1 + pos) --pos;
      if (pos < 0) break;
      ++subset[pos];
      for (unsigned i = pos + 1; i < size; ++i) subset[i] = subset[i - 1] + 1;
    }
  }
}

}  // namespace

Rational correlation(const AtomicMeasure& m, const std::vector<unsigned>& subset) {
  check_subset(m.n(), subset);
  const std::uint32_t smask = subset_mask(subset);
  Rational acc;
  for (const auto& [point, mass] : m.atoms()) {
    if (subset_product_sign(point, smask) > 0)
      acc += mass;
    else
      acc -= mass;
  }
  return acc;
}

Rational correlation(const OrbitMeasure& m, const std::vector<unsigned>& subset) {
  check_subset(m.n(), subset);
  const unsigned j = static_cast<unsigned>(subset.size());
  Rational acc;
  for (unsigned w = 0; w <= m.n(); ++w) {
    if (m.weight(w).is_zero()) continue;
    acc += m.weight(w) * orbit_correlation(m.n(), w, j);
  }
  return acc;
}

namespace {

template <typename Measure>
IndependenceReport check_kwise(const Measure& m, unsigned k) {
  if (k < 1 || k > m.n())
    fail(ErrorCode::kInvalidArgument, "k must lie in 1..n");
  IndependenceReport report;
  report.ok = true;
  for_each_subset_upto(m.n(), k, [&](const std::vector<unsigned>& subset) {
    Rational c = correlation(m, subset);
    if (!c.is_zero()) {
      report.ok = false;
      report.witness = IndependenceWitness{subset, std::move(c)};
      return false;
    }
    return true;
  });
  return report;
}

}  // namespace

IndependenceReport is_kwise_independent(const AtomicMeasure& m, unsigned k) {
  return check_kwise(m, k);
}

IndependenceReport is_kwise_independent(const OrbitMeasure& m, unsigned k) {
  // Exchangeability: the order-j moment is the same for every size-j subset,
  // so one subset per size decides. Witness indices are the leading ones.
  if (k < 1 || k > m.n())
    fail(ErrorCode::kInvalidArgument, "k must lie in 1..n");
  IndependenceReport report;
  report.ok = true;
  std::vector<unsigned> subset;
  for (unsigned j = 1; j <= k; ++j) {
    subset.push_back(j);
    Rational c;
    for (unsigned w = 0; w <= m.n(); ++w) {
      if (m.weight(w).is_zero()) continue;
      c += m.weight(w) * orbit_correlation(m.n(), w, j);
    }
    if (!c.is_zero()) {
      report.ok = false;
      report.witness = IndependenceWitness{subset, std::move(c)};
      return report;
    }
  }
  return report;
}

namespace {

template <typename Measure>
unsigned level_scan(const Measure& m, unsigned k_max) {
  unsigned level = 0;
  const unsigned top = std::min(k_max, m.n());
  for (unsigned k = 1; k <= top; ++k) {
    if (!is_kwise_independent(m, k).ok) break;
    level = k;
  }
  return level;
}

}  // namespace

unsigned independence_level(const AtomicMeasure& m, unsigned k_max) { return level_scan(m, k_max); }
unsigned independence_level(const OrbitMeasure& m, unsigned k_max) { return level_scan(m, k_max); }

}  // namespace kwise
