#pragma once

#include <Eigen/Core>
#include <vector>

namespace lomuf {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kOptimal;
  double objective = 0.0;
  Eigen::VectorXd x;
};

/// maximize c'x subject to rows of the form a'x <= b or a'x = b, x >= 0.
///
/// Solved by a dense two-phase primal simplex over an Eigen tableau.
/// Deterministic: Dantzig entering rule with lowest-index tie-breaks,
/// switching to Bland's rule after prolonged stalling so termination is
/// guaranteed.
class LinearProgram {
 public:
  explicit LinearProgram(int num_vars) : num_vars_(num_vars), obj_(num_vars) {}

  void set_objective(int var, double coeff) { obj_.at(var) = coeff; }
  int add_le(double rhs) { return add_row(false, rhs); }
  int add_eq(double rhs) { return add_row(true, rhs); }
  void set_coeff(int row, int var, double coeff) {
    entries_.push_back({row, var, coeff});
  }

  int num_vars() const { return num_vars_; }
  int num_rows() const { return static_cast<int>(rhs_.size()); }

  LpSolution solve() const;

 private:
  struct Entry {
    int row;
    int var;
    double coeff;
  };

  int add_row(bool eq, double rhs) {
    rhs_.push_back(rhs);
    is_eq_.push_back(eq);
    return num_rows() - 1;
  }

  int num_vars_;
  std::vector<double> obj_;
  std::vector<double> rhs_;
  std::vector<bool> is_eq_;
  std::vector<Entry> entries_;
};

}  // namespace lomuf
