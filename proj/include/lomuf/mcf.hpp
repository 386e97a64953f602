#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "lomuf/flow.hpp"
#include "lomuf/graph.hpp"

namespace lomuf {

/// Concurrent flow value: a non-negative real or the distinguished value
/// UNBOUNDED (every demand vector all-zero). UNBOUNDED compares greater
/// than every finite value.
class Lambda {
 public:
  Lambda() = default;
  static Lambda unbounded() {
    Lambda l;
    l.unbounded_ = true;
    return l;
  }
  static Lambda finite(double v) {
    Lambda l;
    l.value_ = v;
    return l;
  }

  bool is_unbounded() const { return unbounded_; }
  double value() const {
    if (unbounded_) throw std::logic_error("lambda is unbounded");
    return value_;
  }
  /// Finite value, or +inf when unbounded. Handy for comparisons.
  double value_or_inf() const {
    return unbounded_ ? std::numeric_limits<double>::infinity() : value_;
  }

  friend bool operator==(const Lambda& a, const Lambda& b) {
    return a.unbounded_ == b.unbounded_ &&
           (a.unbounded_ || a.value_ == b.value_);
  }
  friend bool operator<(const Lambda& a, const Lambda& b) {
    return !a.unbounded_ && (b.unbounded_ || a.value_ < b.value_);
  }
  friend bool operator>(const Lambda& a, const Lambda& b) { return b < a; }

 private:
  bool unbounded_ = false;
  double value_ = 0.0;
};

struct ConcurrentResult {
  Lambda lambda;
  MultiFlow witness;  // empty when unbounded
};

struct TotalResult {
  std::vector<double> lambdas;  // one per commodity
  double objective = 0.0;       // sum of lambda_i * |supply_i|_1
  MultiFlow witness;
};

/// Maximum lambda such that all demands scaled by lambda are simultaneously
/// routable within capacities, with a witness multiflow.
ConcurrentResult solve_concurrent(const CapacitatedGraph& g,
                                  const std::vector<DemandVector>& demands);

/// Maximize the total flow value sum_i lambda_i * |s_i|_1 with independent
/// per-commodity scale factors.
TotalResult solve_total(const CapacitatedGraph& g,
                        const std::vector<SupplyVector>& supplies,
                        const std::vector<std::string>& targets);

/// True iff the demand family is routable at scale 1 (lambda >= 1 - 1e-6;
/// UNBOUNDED counts as feasible).
bool check_feasible(const CapacitatedGraph& g,
                    const std::vector<DemandVector>& demands);

}  // namespace lomuf
