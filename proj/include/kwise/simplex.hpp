#ifndef KWISE_SIMPLEX_HPP
#define KWISE_SIMPLEX_HPP

#include <cstddef>
#include <vector>

#include "kwise/rational.hpp"

namespace kwise {

// Equality-form linear program over exact rationals:
//   maximize objective . x   subject to   rows . x = rhs,  x >= 0.
struct LPProblem {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;

  std::size_t num_vars() const { return objective.size(); }
  std::size_t num_rows() const { return rows.size(); }
  void validate() const;  // throws Error(kInvalidArgument) on shape mismatch
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

struct LPSolution {
  LPStatus status = LPStatus::kInfeasible;

  // Populated when optimal. primal is a basic feasible solution, so the
  // reported optimizer is always a vertex of the feasible set.
  Rational value;
  std::vector<Rational> primal;
  std::vector<std::size_t> basis;  // ascending column indices, one per kept row
  bool is_vertex = false;
  // Zero reduced cost on some nonbasic column: the optimum may be attained
  // on a face, not only at the reported vertex.
  bool multiple_optima = false;

  // One multiplier per original constraint row; redundant rows carry 0.
  // At an optimum, duals . rhs == value (strong duality, exact).
  std::vector<Rational> duals;

  // Rows found linearly dependent during preprocessing and dropped.
  std::vector<std::size_t> removed_rows;

  // Unbounded certificate: rows . ray = 0, ray >= 0, objective . ray > 0.
  std::vector<Rational> ray;
};

// Two-phase primal simplex with Bland's rule, exact rational pivoting.
// Deterministic: identical inputs produce identical bases. Infeasible and
// unbounded are reported in the status, never thrown.
LPSolution solve_lp(const LPProblem& prob);

}  // namespace kwise

#endif
