#include "lomuf/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace lomuf {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kReducedCostTol = 1e-9;
constexpr double kFeasTol = 1e-7;

using Tableau =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace

LpSolution LinearProgram::solve() const {
  const int m = num_rows();
  const int n = num_vars_;

  // Normalize rows so every right-hand side is non-negative; <= rows with a
  // negative rhs become >= rows.
  std::vector<double> b = rhs_;
  enum RowKind { kLe, kGe, kEq };
  std::vector<RowKind> kind(m);
  std::vector<double> rowsign(m, 1.0);
  for (int r = 0; r < m; ++r) {
    if (b[r] < 0) {
      b[r] = -b[r];
      rowsign[r] = -1.0;
      kind[r] = is_eq_[r] ? kEq : kGe;
    } else {
      kind[r] = is_eq_[r] ? kEq : kLe;
    }
  }

  // Column layout: structural | slack/surplus | artificial | rhs.
  std::vector<int> aux_col(m, -1), art_col(m, -1);
  int next = n;
  for (int r = 0; r < m; ++r)
    if (kind[r] != kEq) aux_col[r] = next++;
  for (int r = 0; r < m; ++r)
    if (kind[r] != kLe) art_col[r] = next++;
  const int ncols = next;
  const int rhs_col = ncols;

  Tableau T = Tableau::Zero(m + 1, ncols + 1);
  for (const Entry& en : entries_)
    T(en.row, en.var) += rowsign[en.row] * en.coeff;
  for (int r = 0; r < m; ++r) {
    if (aux_col[r] >= 0) T(r, aux_col[r]) = kind[r] == kLe ? 1.0 : -1.0;
    if (art_col[r] >= 0) T(r, art_col[r]) = 1.0;
    T(r, rhs_col) = b[r];
  }

  std::vector<int> basis(m);
  std::vector<bool> banned(ncols, false);
  bool has_art = false;
  for (int r = 0; r < m; ++r) {
    basis[r] = art_col[r] >= 0 ? art_col[r] : aux_col[r];
    if (art_col[r] >= 0) has_art = true;
  }

  auto pivot = [&](int pr, int pc) {
    double pv = T(pr, pc);
    T.row(pr) /= pv;
    T(pr, pc) = 1.0;
    for (int i = 0; i <= m; ++i) {
      if (i == pr) continue;
      double f = T(i, pc);
      if (f != 0.0) {
        T.row(i) -= f * T.row(pr);
        T(i, pc) = 0.0;
      }
    }
    basis[pr] = pc;
  };

  // Runs the simplex loop against the current objective row (row m).
  // Returns false when the entering column is unbounded below.
  long long iterations = 0;
  const long long bland_after = 500 + 5LL * (m + ncols);
  const long long max_iterations = 40 * bland_after + 20000;
  auto iterate = [&]() -> bool {
    bool bland = false;
    while (true) {
      if (++iterations > max_iterations)
        throw std::logic_error("simplex iteration limit exceeded");
      if (iterations > bland_after) bland = true;
      int enter = -1;
      double best = kReducedCostTol;
      for (int j = 0; j < ncols; ++j) {
        if (banned[j]) continue;
        double rc = T(m, j);
        if (rc > best) {
          enter = j;
          best = rc;
          if (bland) break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best_ratio = 0.0;
      for (int r = 0; r < m; ++r) {
        double a = T(r, enter);
        if (a <= kPivotEps) continue;
        double ratio = std::max(T(r, rhs_col), 0.0) / a;
        if (leave < 0 || ratio < best_ratio - 1e-12 ||
            (ratio <= best_ratio + 1e-12 && basis[r] < basis[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  };

  if (has_art) {
    // Phase 1: maximize -(sum of artificials). All-zero equality rows start
    // feasible, so often no iterations are needed at all.
    for (int r = 0; r < m; ++r)
      if (art_col[r] >= 0) T.row(m) += T.row(r);
    for (int r = 0; r < m; ++r)
      if (art_col[r] >= 0) T(m, art_col[r]) = 0.0;
    if (T(m, rhs_col) > kFeasTol) {
      if (!iterate())
        throw std::logic_error("phase-1 objective unbounded");
      if (T(m, rhs_col) > kFeasTol) {
        LpSolution sol;
        sol.status = LpStatus::kInfeasible;
        return sol;
      }
    }
    // Drive surviving artificials out of the basis. A row whose non-artificial
    // entries are all zero is redundant and stays inert: its rhs is zero and
    // no entering column can touch it.
    std::vector<bool> is_art(ncols, false);
    for (int r = 0; r < m; ++r)
      if (art_col[r] >= 0) is_art[art_col[r]] = true;
    for (int r = 0; r < m; ++r) {
      if (art_col[r] < 0 || basis[r] != art_col[r]) continue;
      for (int j = 0; j < ncols; ++j) {
        if (is_art[j]) continue;
        if (std::abs(T(r, j)) > kFeasTol) {
          pivot(r, j);
          break;
        }
      }
    }
    // Rows still owned by an artificial are redundant; blank them so noise
    // never drags them into a ratio test.
    for (int r = 0; r < m; ++r) {
      if (art_col[r] >= 0 && basis[r] == art_col[r]) {
        T.row(r).setZero();
        T(r, art_col[r]) = 1.0;
      }
    }
    for (int j = 0; j < ncols; ++j)
      if (is_art[j]) banned[j] = true;
  }

  // Phase 2.
  T.row(m).setZero();
  for (int j = 0; j < n; ++j) T(m, j) = obj_[j];
  for (int r = 0; r < m; ++r) {
    int bj = basis[r];
    if (bj < n && obj_[bj] != 0.0) T.row(m) -= obj_[bj] * T.row(r);
  }
  if (!iterate()) {
    LpSolution sol;
    sol.status = LpStatus::kUnbounded;
    return sol;
  }

  LpSolution sol;
  sol.status = LpStatus::kOptimal;
  sol.x = Eigen::VectorXd::Zero(n);
  for (int r = 0; r < m; ++r)
    if (basis[r] < n) sol.x[basis[r]] = std::max(T(r, rhs_col), 0.0);
  sol.objective = 0.0;
  for (int j = 0; j < n; ++j) sol.objective += obj_[j] * sol.x[j];
  return sol;
}

}  // namespace lomuf
