#pragma once

#include <Eigen/Core>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lomuf/graph.hpp"

namespace lomuf {

inline constexpr double kSatisfyTol = 1e-6;   // satisfaction / congestion
inline constexpr double kIdentityTol = 1e-9;  // exact-identity checks

/// Non-positive per-vertex amounts one commodity must send. Absent = 0.
struct SupplyVector {
  std::map<std::string, double> supply;

  double at(const std::string& v) const {
    auto it = supply.find(v);
    return it == supply.end() ? 0.0 : it->second;
  }
  bool all_zero() const;
  /// Sum of |s(v)| over all vertices.
  double total_magnitude() const;
  /// Vertices with strictly negative supply, lexicographically sorted.
  std::vector<std::string> sources() const;
  void validate(const CapacitatedGraph& g) const;

  bool operator==(const SupplyVector& o) const { return supply == o.supply; }
};

/// Per-vertex net requirements summing to zero (sources < 0, targets > 0).
struct DemandVector {
  std::map<std::string, double> demand;

  double at(const std::string& v) const {
    auto it = demand.find(v);
    return it == demand.end() ? 0.0 : it->second;
  }
  bool all_zero() const;
  void validate(const CapacitatedGraph& g) const;
  /// Dense view indexed by vertex index.
  Eigen::VectorXd dense(const CapacitatedGraph& g) const;
};

DemandVector scale(const DemandVector& d, double factor);

/// Install target v on supply s: the target absorbs the whole supply.
DemandVector target_demand(const CapacitatedGraph& g, const SupplyVector& s,
                           const std::string& v);

/// Per-edge values. Undirected entries are signed relative to the reference
/// orientation; directed entries are >= 0.
struct Flow {
  Eigen::VectorXd value;  // size = num_edges

  static Flow zero(const CapacitatedGraph& g) {
    return Flow{Eigen::VectorXd::Zero(g.num_edges())};
  }
};

struct MultiFlow {
  std::vector<Flow> flows;
};

/// Net incoming flow at vertex index v.
double net_at(const CapacitatedGraph& g, const Flow& f, int v);

/// Cut(U) split into (incoming, outgoing) edge indices by orientation.
/// U must be a nonempty proper subset of V.
std::pair<std::vector<int>, std::vector<int>> cut_edges(
    const CapacitatedGraph& g, const std::set<std::string>& U);

/// Sum of f over edges entering U minus sum over edges leaving U.
double cut_balance(const CapacitatedGraph& g, const Flow& f,
                   const std::set<std::string>& U);

/// Checker mode: cut_balance must equal the net demand carried by U.
bool check_cut_balance(const CapacitatedGraph& g, const Flow& f,
                       const DemandVector& d, const std::set<std::string>& U,
                       double tol = kSatisfyTol);

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Every flow must satisfy its demand at every vertex and joint congestion
/// must respect capacities, both within tol.
ValidationReport validate_multiflow(const CapacitatedGraph& g,
                                    const std::vector<DemandVector>& demands,
                                    const MultiFlow& mf,
                                    double tol = kSatisfyTol);

/// Remove same-direction cycles from f; the result satisfies the same
/// demands and is edgewise dominated by f.
Flow cancel_circulations(const CapacitatedGraph& g, const Flow& f);

/// Canonical decomposition of a single-target flow into per-source flows
/// with edgewise value and magnitude additivity. d must have exactly one
/// positive entry and f must satisfy d.
std::vector<std::pair<std::string, Flow>> decompose_single_target(
    const CapacitatedGraph& g, const Flow& f, const DemandVector& d);

}  // namespace lomuf
