#include "kwise/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "kwise/constructions.hpp"
#include "kwise/enumeration.hpp"
#include "kwise/error.hpp"
#include "kwise/independence.hpp"
#include "kwise/moment.hpp"

namespace kwise {

namespace {

void check_orbit_params(unsigned n, unsigned k) {
  if (n < 1 || n > kMaxOrbitN)
    fail(ErrorCode::kGuard, "orbit LP requires 1 <= n <= " + std::to_string(kMaxOrbitN));
  if (k < 1 || k > n) fail(ErrorCode::kInvalidArgument, "orbit LP requires 1 <= k <= n");
}

LPProblem orbit_lp_skeleton(unsigned n, unsigned k) {
  LPProblem prob;
  prob.rows.emplace_back(n + 1, Rational(1));
  prob.rhs.emplace_back(1);
  for (unsigned j = 1; j <= k; ++j) {
    std::vector<Rational> row(n + 1);
    for (unsigned w = 0; w <= n; ++w) row[w] = orbit_correlation(n, w, j);
    prob.rows.push_back(std::move(row));
    prob.rhs.emplace_back(0);
  }
  return prob;
}

}  // namespace

LPProblem build_orbit_lp(unsigned n, unsigned p, unsigned k) {
  check_orbit_params(n, k);
  if (p < 2) fail(ErrorCode::kInvalidArgument, "orbit LP requires p >= 2");
  LPProblem prob = orbit_lp_skeleton(n, k);
  prob.objective.resize(n + 1);
  for (unsigned w = 0; w <= n; ++w)
    prob.objective[w] = Rational(2L * w - static_cast<long>(n)).abs().pow(p);
  return prob;
}

LPProblem build_orbit_lp_real(unsigned n, double p, unsigned k) {
  check_orbit_params(n, k);
  if (!(p >= 2.0)) fail(ErrorCode::kInvalidArgument, "orbit LP requires p >= 2");
  LPProblem prob = orbit_lp_skeleton(n, k);
  prob.objective.resize(n + 1);
  for (unsigned w = 0; w <= n; ++w) {
    Rational centered = Rational(2L * w - static_cast<long>(n)).abs();
    prob.objective[w] = BigFloat::pow(centered, p).to_rational();
  }
  return prob;
}

LPProblem build_full_lp(unsigned n, unsigned p, unsigned k, const Coefficients& a) {
  if (n < 1 || n > 14) fail(ErrorCode::kGuard, "full LP requires 1 <= n <= 14");
  if (k < 1 || k > n) fail(ErrorCode::kInvalidArgument, "full LP requires 1 <= k <= n");
  if (p < 2) fail(ErrorCode::kInvalidArgument, "full LP requires p >= 2");
  if (a.size() != n) fail(ErrorCode::kInvalidArgument, "coefficient length does not match n");

  mpz_class row_budget = 1;
  for (unsigned j = 1; j <= k; ++j) row_budget += binomial_z(n, j);
  if (row_budget > 4096)
    fail(ErrorCode::kGuard, "full LP independence constraints exceed the 4096-row budget");

  const std::uint32_t points = 1u << n;
  LPProblem prob;
  prob.objective.resize(points);
  for (std::uint32_t x = 0; x < points; ++x) {
    Rational s;
    for (unsigned i = 0; i < n; ++i) {
      if ((x >> i) & 1u)
        s += a[i];
      else
        s -= a[i];
    }
    prob.objective[x] = s.abs().pow(p);
  }

  prob.rows.emplace_back(points, Rational(1));
  prob.rhs.emplace_back(1);
  for (unsigned j = 1; j <= k; ++j) {
    for_each_weight_mask(n, j, [&](std::uint32_t subset) {
      std::vector<Rational> row(points);
      for (std::uint32_t x = 0; x < points; ++x)
        row[x] = Rational(subset_product_sign(x, subset));
      prob.rows.push_back(std::move(row));
      prob.rhs.emplace_back(0);
    });
  }
  return prob;
}

namespace {

bool orbit_equals_extremal(const OrbitMeasure& m) {
  if (m.n() < 4 || m.n() % 2 != 0) return false;
  return m == extremal_pairwise(m.n());
}

bool atomic_equals_extremal(const AtomicMeasure& m) {
  if (m.n() < 4 || m.n() % 2 != 0 || m.n() > kMaxAtomicN) return false;
  return m == orbit_to_atomic(extremal_pairwise(m.n()));
}

ConstantCell solve_cell(unsigned n, double p, unsigned p_int, bool exact_p, unsigned k,
                        LPMode mode, const Coefficients& a, LPProblem prob) {
  LPSolution sol = solve_lp(prob);
  if (sol.status == LPStatus::kInfeasible)
    fail(ErrorCode::kInfeasible,
         "moment LP reported infeasible; the independent measure is always feasible, "
         "so the builder produced a bad program");
  if (sol.status == LPStatus::kUnbounded)
    fail(ErrorCode::kInfeasible, "moment LP reported unbounded on a probability simplex");

  Rational moment_value = sol.value;
  if (mode == LPMode::kOrbit) {
    // The LP is built at unit coefficients; an all-equal vector only scales
    // the objective by |a_1|^p.
    if (exact_p)
      moment_value *= a[0].abs().pow(p_int);
    else if (a[0] != Rational(1) && a[0] != Rational(-1))
      moment_value *= BigFloat::pow(a[0].abs(), p).to_rational();
  }

  auto optimizer = [&]() -> std::variant<OrbitMeasure, AtomicMeasure> {
    if (mode == LPMode::kOrbit) return OrbitMeasure(n, sol.primal);
    std::map<std::uint32_t, Rational> atoms;
    for (std::uint32_t x = 0; x < sol.primal.size(); ++x)
      if (!sol.primal[x].is_zero()) atoms.emplace(x, sol.primal[x]);
    return AtomicMeasure(n, std::move(atoms));
  }();
  const bool is_extremal =
      mode == LPMode::kOrbit ? orbit_equals_extremal(std::get<OrbitMeasure>(optimizer))
                             : atomic_equals_extremal(std::get<AtomicMeasure>(optimizer));

  BigFloat root = exact_p ? BigFloat::root(moment_value, p_int)
                          : BigFloat::pow(BigFloat(moment_value),
                                          BigFloat(1.0) / BigFloat(p));
  BigFloat constant = root / BigFloat::root(a.norm2_squared(), 2);

  return ConstantCell{
      .n = n,
      .p = p,
      .p_int = p_int,
      .exact_p = exact_p,
      .k = k,
      .mode = mode,
      .moment_value = std::move(moment_value),
      .constant = std::move(constant),
      .optimizer = std::move(optimizer),
      .is_vertex = sol.is_vertex,
      .multiple_optima = sol.multiple_optima,
      .optimizer_is_extremal = is_extremal,
      .approximate = !exact_p,
  };
}

}  // namespace

ConstantCell khintchine_cell(unsigned n, unsigned p, unsigned k, LPMode mode,
                             const Coefficients& a) {
  if (a.size() != n) fail(ErrorCode::kInvalidArgument, "coefficient length does not match n");
  if (mode == LPMode::kOrbit) {
    if (!a.all_equal())
      fail(ErrorCode::kInvalidArgument,
           "orbit mode requires all-equal coefficients; use full mode for general a");
    return solve_cell(n, p, p, true, k, mode, a, build_orbit_lp(n, p, k));
  }
  return solve_cell(n, p, p, true, k, mode, a, build_full_lp(n, p, k, a));
}

ConstantCell khintchine_cell_real(unsigned n, double p, unsigned k, const Coefficients& a) {
  if (a.size() != n) fail(ErrorCode::kInvalidArgument, "coefficient length does not match n");
  if (!a.all_equal())
    fail(ErrorCode::kInvalidArgument, "orbit mode requires all-equal coefficients");
  double int_part;
  if (std::modf(p, &int_part) == 0.0 && p >= 2.0 && p <= 64.0)
    return khintchine_cell(n, static_cast<unsigned>(p), k, LPMode::kOrbit, a);
  return solve_cell(n, p, 0, false, k, LPMode::kOrbit, a, build_orbit_lp_real(n, p, k));
}

DualCertificate pairwise_dual_certificate(unsigned n, unsigned p) {
  if (n < 4 || n % 2 != 0)
    fail(ErrorCode::kInvalidArgument, "dual certificate requires even n >= 4");
  if (p < 2) fail(ErrorCode::kInvalidArgument, "dual certificate requires p >= 2");
  Rational same = Rational(static_cast<long>(n)).pow(p) / Rational::binomial(n, 2);
  Rational mixed = -Rational(static_cast<long>(n) - 2, static_cast<long>(n)) * same;
  return DualCertificate{n, p, same, mixed, mixed, same};
}

CertificateReport verify_certificate(const DualCertificate& cert) {
  const unsigned n = cert.n;
  const unsigned p = cert.p;
  if (n < 2 || p < 2) fail(ErrorCode::kInvalidArgument, "certificate requires n >= 2, p >= 2");
  if (cert.u11 != cert.umm || cert.u1m != cert.um1)
    fail(ErrorCode::kInvalidArgument, "certificate must be symmetric: u11 = umm, u1m = um1");

  CertificateReport report;
  report.feasible = true;
  report.slack.reserve(n + 1);
  for (unsigned w = 0; w <= n; ++w) {
    Rational pair_sum = Rational::binomial(w, 2) * cert.u11 +
                        Rational::binomial(n - w, 2) * cert.umm +
                        Rational(static_cast<long>(w) * (n - w)) * cert.u1m;
    Rational lhs = Rational(2L * w - static_cast<long>(n)).abs().pow(p);
    Rational slack = pair_sum - lhs;
    if (slack.sign() < 0) report.feasible = false;
    if (slack.is_zero()) report.equality_weights.push_back(w);
    report.slack.push_back(std::move(slack));
  }
  report.certified_value = Rational::binomial(n, 2) * (cert.u11 + cert.u1m) / Rational(2);
  report.primal_value = solve_lp(build_orbit_lp(n, p, 2)).value;
  report.matches_primal = report.certified_value == report.primal_value;
  return report;
}

namespace {

// 24 e_4(a): the sum over ordered 4-tuples of distinct indices.
Rational cross_sum_of(const Coefficients& a) {
  std::vector<Rational> e(5);
  e[0] = Rational(1);
  for (unsigned i = 0; i < a.size(); ++i)
    for (unsigned k = 4; k >= 1; --k) e[k] += a[i] * e[k - 1];
  return Rational(24) * e[4];
}

Rational independent_quartic(const Coefficients& a) {
  Rational n2 = a.norm2_squared();
  return Rational(3) * n2 * n2 - Rational(2) * a.norm4_fourth();
}

void require_pairwise(const OrbitMeasure& m) {
  auto report = is_kwise_independent(m, std::min(2u, m.n()));
  if (m.n() < 2 || !report.ok) {
    std::string msg = "measure is not pairwise independent";
    if (report.witness) {
      msg += ": subset {";
      for (std::size_t i = 0; i < report.witness->subset.size(); ++i)
        msg += (i ? "," : "") + std::to_string(report.witness->subset[i]);
      msg += "} has correlation " + report.witness->value.str();
    }
    fail(ErrorCode::kInvalidArgument, msg);
  }
}

}  // namespace

QuarticDecomposition quartic_decompose(const OrbitMeasure& m, const Coefficients& a) {
  if (m.n() < 4)
    fail(ErrorCode::kInvalidArgument, "quartic decomposition requires n >= 4");
  if (a.size() != m.n())
    fail(ErrorCode::kInvalidArgument, "coefficient length does not match measure dimension");
  require_pairwise(m);

  QuarticDecomposition d;
  d.independent_part = independent_quartic(a);
  d.c = correlation(m, {1, 2, 3, 4});
  d.cross_sum = cross_sum_of(a);
  d.total = d.independent_part + d.c * d.cross_sum;
  return d;
}

MaclaurinGap maclaurin_gap(const Coefficients& a) {
  const unsigned n = a.size();
  for (unsigned i = 0; i < n; ++i)
    if (a[i].sign() < 0)
      fail(ErrorCode::kInvalidArgument, "maclaurin gap requires nonnegative coefficients");
  if (a.norm2_squared() != Rational(1))
    fail(ErrorCode::kInvalidArgument, "maclaurin gap requires an exactly unit vector");
  MaclaurinGap g;
  g.cross_sum = cross_sum_of(a);
  g.bound = Rational(24) * Rational::binomial(n, 4) /
            Rational(static_cast<long>(n) * static_cast<long>(n));
  return g;
}

bool quartic_bound_holds(const OrbitMeasure& m, const Coefficients& a) {
  if (m.n() < 4)
    fail(ErrorCode::kInvalidArgument, "quartic bound check requires n >= 4");
  if (a.size() != m.n())
    fail(ErrorCode::kInvalidArgument, "coefficient length does not match measure dimension");
  if (a.norm2_squared() != Rational(1))
    fail(ErrorCode::kInvalidArgument, "quartic bound check requires an exactly unit vector");
  require_pairwise(m);

  const unsigned n = m.n();
  // Equal-coefficient branch at a_i = 1/sqrt(n): (1/n^2) sum_w q_w |2w-n|^4.
  Rational equal_branch;
  for (unsigned w = 0; w <= n; ++w) {
    if (m.weight(w).is_zero()) continue;
    equal_branch += m.weight(w) * Rational(2L * w - static_cast<long>(n)).abs().pow(4);
  }
  equal_branch /= Rational(static_cast<long>(n) * static_cast<long>(n));

  Rational lhs = moment(m, a, 4);
  Rational rhs = std::max(equal_branch, independent_quartic(a));
  return lhs <= rhs;
}

}  // namespace kwise
