#include "kwise/simplex.hpp"

#include <cassert>

#include "kwise/error.hpp"

namespace kwise {

void LPProblem::validate() const {
  if (objective.empty()) fail(ErrorCode::kInvalidArgument, "LP needs at least one variable");
  if (rows.size() != rhs.size())
    fail(ErrorCode::kInvalidArgument, "LP row/rhs count mismatch");
  for (const auto& row : rows)
    if (row.size() != objective.size())
      fail(ErrorCode::kInvalidArgument, "LP row length does not match variable count");
}

namespace {

// Classifies rows by rational Gaussian elimination: returns the original
// indices of a maximal independent row set, appends dependent-but-consistent
// rows to `removed`, and reports an inconsistent dependent row (0 = c, c != 0)
// by setting `inconsistent`.
std::vector<std::size_t> independent_rows(const LPProblem& prob,
                                          std::vector<std::size_t>& removed,
                                          bool& inconsistent) {
  const std::size_t R = prob.num_rows();
  const std::size_t V = prob.num_vars();
  std::vector<std::vector<Rational>> work(R);
  for (std::size_t i = 0; i < R; ++i) {
    work[i] = prob.rows[i];
    work[i].push_back(prob.rhs[i]);
  }
  std::vector<bool> pivoted(R, false);
  std::vector<std::size_t> kept;
  inconsistent = false;

  for (std::size_t col = 0; col < V && kept.size() < R; ++col) {
    std::size_t pivot_row = R;
    for (std::size_t i = 0; i < R; ++i) {
      if (!pivoted[i] && !work[i][col].is_zero()) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row == R) continue;
    pivoted[pivot_row] = true;
    kept.push_back(pivot_row);

    // normalize pivot row, gather its nonzero tail
    auto& prow = work[pivot_row];
    const Rational piv = prow[col];
    std::vector<std::size_t> nz;
    for (std::size_t j = col; j <= V; ++j) {
      if (prow[j].is_zero()) continue;
      prow[j] /= piv;
      nz.push_back(j);
    }
    for (std::size_t i = 0; i < R; ++i) {
      if (pivoted[i] || work[i][col].is_zero()) continue;
      const Rational f = work[i][col];
      for (std::size_t j : nz) work[i][j].submul(f, prow[j]);
    }
  }

  for (std::size_t i = 0; i < R; ++i) {
    if (pivoted[i]) continue;
    if (!work[i][V].is_zero()) {
      inconsistent = true;
      return kept;
    }
    removed.push_back(i);
  }
  return kept;
}

// Dense tableau over the kept rows. Columns: V structural, then one
// artificial per kept row, then the rhs. Artificial columns stay in the
// tableau through phase 2 so the duals can be read off their reduced costs.
class Tableau {
 public:
  Tableau(const LPProblem& prob, const std::vector<std::size_t>& kept)
      : V_(prob.num_vars()), R_(kept.size()), rows_(R_), basic_(R_), row_sign_(R_, 1) {
    for (std::size_t i = 0; i < R_; ++i) {
      const std::size_t src = kept[i];
      rows_[i].assign(V_ + R_ + 1, Rational(0));
      const bool flip = prob.rhs[src].sign() < 0;
      if (flip) row_sign_[i] = -1;
      for (std::size_t j = 0; j < V_; ++j)
        rows_[i][j] = flip ? -prob.rows[src][j] : prob.rows[src][j];
      rows_[i][V_ + i] = Rational(1);
      rows_[i][V_ + R_] = flip ? -prob.rhs[src] : prob.rhs[src];
      basic_[i] = V_ + i;
    }
  }

  std::size_t num_structural() const { return V_; }
  std::size_t num_rows() const { return R_; }
  std::size_t basic(std::size_t i) const { return basic_[i]; }
  int row_sign(std::size_t i) const { return row_sign_[i]; }
  const Rational& rhs(std::size_t i) const { return rows_[i][V_ + R_]; }
  const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const Rational& reduced_cost(std::size_t j) const { return d_[j]; }
  const Rational& objective_value() const { return objval_; }

  // d_j = c_j - c_B . B^{-1} A_j over all columns, objval = c_B . x_B.
  // `cost` covers structural columns; artificial columns cost `art_cost`.
  void load_objective(const std::vector<Rational>& cost, const Rational& art_cost) {
    d_.assign(V_ + R_, Rational(0));
    objval_ = Rational(0);
    for (std::size_t j = 0; j < V_; ++j) d_[j] = cost[j];
    for (std::size_t j = 0; j < R_; ++j) d_[V_ + j] = art_cost;
    for (std::size_t i = 0; i < R_; ++i) {
      const std::size_t b = basic_[i];
      const Rational cb = b < V_ ? cost[b] : art_cost;
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < V_ + R_; ++j) d_[j].submul(cb, rows_[i][j]);
      objval_ += cb * rhs(i);
    }
  }

  // Records the tie-break key columns for the lexicographic ratio test.
  // At a phase start the basis columns form an identity block, so every row
  // is lexicographically positive over (rhs, key columns); the ratio test
  // preserves that, which is what rules out cycling. The key block holds
  // the running basis inverse, so no two rows can ever tie completely.
  void begin_phase() {
    lex_cols_.assign(basic_.begin(), basic_.end());
  }

  // True when row a beats row b as the leaving row for the entering column:
  // compares (rhs, key columns) scaled by the positive pivot entries,
  // division free.
  bool lex_less(std::size_t a, std::size_t b, std::size_t enter) const {
    const Rational& ta = rows_[a][enter];
    const Rational& tb = rows_[b][enter];
    int cmp = mpq_cmp((rhs(a) * tb).raw().get_mpq_t(), (rhs(b) * ta).raw().get_mpq_t());
    if (cmp != 0) return cmp < 0;
    for (std::size_t col : lex_cols_) {
      cmp = mpq_cmp((rows_[a][col] * tb).raw().get_mpq_t(),
                    (rows_[b][col] * ta).raw().get_mpq_t());
      if (cmp != 0) return cmp < 0;
    }
    return false;  // unreachable: key rows are rows of a nonsingular matrix
  }

  // Entering rule: Dantzig, most positive reduced cost with lowest index on
  // ties. Leaving rule: lexicographic minimum ratio. Deterministic, and the
  // lexicographic test terminates the walk even on the heavily degenerate
  // phase-1 corners these LPs produce.
  //
  // Returns kOptimal when no entering column exists, kUnbounded when the
  // entering column has no positive entry (entering_out is set).
  LPStatus iterate(std::size_t& entering_out) {
    while (true) {
      std::size_t enter = V_ + R_;
      const Rational* best = nullptr;
      for (std::size_t j = 0; j < V_; ++j) {
        if (d_[j].sign() > 0 && (best == nullptr || d_[j] > *best)) {
          best = &d_[j];
          enter = j;
        }
      }
      if (enter == V_ + R_) return LPStatus::kOptimal;

      std::size_t leave = R_;
      for (std::size_t i = 0; i < R_; ++i) {
        if (rows_[i][enter].sign() <= 0) continue;
        if (leave == R_ || lex_less(i, leave, enter)) leave = i;
      }
      if (leave == R_) {
        entering_out = enter;
        return LPStatus::kUnbounded;
      }
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows_[r];
    const Rational piv = prow[c];
    std::vector<std::size_t> nz;
    nz.reserve(prow.size());
    for (std::size_t j = 0; j < prow.size(); ++j) {
      if (prow[j].is_zero()) continue;
      prow[j] /= piv;
      nz.push_back(j);
    }
    for (std::size_t i = 0; i < R_; ++i) {
      if (i == r || rows_[i][c].is_zero()) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j : nz) rows_[i][j].submul(f, prow[j]);
    }
    if (!d_[c].is_zero()) {
      const Rational f = d_[c];
      for (std::size_t j : nz) {
        if (j < V_ + R_)
          d_[j].submul(f, prow[j]);
        else
          objval_ += f * prow[j];
      }
    }
    basic_[r] = c;
  }

  // After a zero-cost phase 1: replace every basic artificial by some
  // structural column. Rows are independent, so a pivot entry exists; the
  // pivot is degenerate (rhs 0) and keeps feasibility.
  void evict_artificials() {
    for (std::size_t i = 0; i < R_; ++i) {
      if (basic_[i] < V_) continue;
      std::size_t enter = V_;
      for (std::size_t j = 0; j < V_; ++j) {
        if (!rows_[i][j].is_zero()) {
          enter = j;
          break;
        }
      }
      assert(enter < V_ && "dependent row survived preprocessing");
      pivot(i, enter);
    }
  }

 private:
  std::size_t V_, R_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> d_;
  Rational objval_;
  std::vector<std::size_t> basic_;
  std::vector<int> row_sign_;
  std::vector<std::size_t> lex_cols_;
};

LPSolution trivial_no_rows(const LPProblem& prob, std::vector<std::size_t> removed) {
  // Feasible set is {x >= 0}: the origin is the only vertex.
  LPSolution sol;
  sol.removed_rows = std::move(removed);
  sol.duals.assign(prob.num_rows(), Rational(0));
  for (std::size_t j = 0; j < prob.num_vars(); ++j) {
    if (prob.objective[j].sign() > 0) {
      sol.status = LPStatus::kUnbounded;
      sol.ray.assign(prob.num_vars(), Rational(0));
      sol.ray[j] = Rational(1);
      return sol;
    }
  }
  sol.status = LPStatus::kOptimal;
  sol.primal.assign(prob.num_vars(), Rational(0));
  sol.is_vertex = true;
  for (std::size_t j = 0; j < prob.num_vars(); ++j)
    if (prob.objective[j].is_zero()) sol.multiple_optima = true;
  return sol;
}

}  // namespace

LPSolution solve_lp(const LPProblem& prob) {
  prob.validate();
  const std::size_t V = prob.num_vars();

  LPSolution sol;
  bool inconsistent = false;
  std::vector<std::size_t> kept = independent_rows(prob, sol.removed_rows, inconsistent);
  if (inconsistent) {
    sol.status = LPStatus::kInfeasible;
    sol.removed_rows.clear();
    return sol;
  }
  if (kept.empty()) return trivial_no_rows(prob, std::move(sol.removed_rows));

  Tableau t(prob, kept);
  const std::size_t R = t.num_rows();

  // Phase 1: maximize minus the artificial mass, starting from the
  // all-artificial basis.
  t.load_objective(std::vector<Rational>(V, Rational(0)), Rational(-1));
  t.begin_phase();
  std::size_t entering = 0;
  LPStatus phase1 = t.iterate(entering);
  assert(phase1 == LPStatus::kOptimal && "phase 1 objective is bounded above by zero");
  (void)phase1;
  if (!t.objective_value().is_zero()) {
    sol.status = LPStatus::kInfeasible;
    return sol;
  }
  t.evict_artificials();

  // Phase 2 on the real objective.
  t.load_objective(prob.objective, Rational(0));
  t.begin_phase();
  LPStatus phase2 = t.iterate(entering);

  if (phase2 == LPStatus::kUnbounded) {
    sol.status = LPStatus::kUnbounded;
    sol.ray.assign(V, Rational(0));
    sol.ray[entering] = Rational(1);
    for (std::size_t i = 0; i < R; ++i)
      if (t.basic(i) < V) sol.ray[t.basic(i)] = -t.at(i, entering);
    return sol;
  }

  sol.status = LPStatus::kOptimal;
  sol.is_vertex = true;
  sol.value = t.objective_value();
  sol.primal.assign(V, Rational(0));
  for (std::size_t i = 0; i < R; ++i)
    if (t.basic(i) < V) sol.primal[t.basic(i)] = t.rhs(i);

  sol.basis.reserve(R);
  for (std::size_t i = 0; i < R; ++i) sol.basis.push_back(t.basic(i));
  std::sort(sol.basis.begin(), sol.basis.end());

  std::vector<bool> in_basis(V, false);
  for (std::size_t b : sol.basis)
    if (b < V) in_basis[b] = true;
  for (std::size_t j = 0; j < V; ++j) {
    if (!in_basis[j] && t.reduced_cost(j).is_zero()) {
      sol.multiple_optima = true;
      break;
    }
  }

  // Dual of kept row i is minus the reduced cost of its artificial column,
  // undoing the sign normalization; dropped rows get zero.
  sol.duals.assign(prob.num_rows(), Rational(0));
  for (std::size_t i = 0; i < R; ++i) {
    Rational y = -t.reduced_cost(V + i);
    sol.duals[kept[i]] = t.row_sign(i) < 0 ? -y : y;
  }
  return sol;
}

}  // namespace kwise
