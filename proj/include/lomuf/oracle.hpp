#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lomuf/graph.hpp"
#include "lomuf/mcf.hpp"

namespace lomuf {

/// Enumeration limits. Oracles refuse over-budget instances outright rather
/// than sampling; ground truth must never silently approximate.
struct OracleBudget {
  std::int64_t max_lp_calls = 100000;
  std::int64_t max_paths = 10000;
};

struct OracleResult {
  std::vector<std::string> targets;
  Lambda lambda;
  MultiFlow witness;
};

struct TotalOracleResult {
  std::vector<std::string> targets;
  double objective = 0.0;
  std::vector<double> lambdas;
  MultiFlow witness;
};

struct MaxfResult {
  int zeta = 0;
  // One entry per commodity; nullopt marks an unplaced commodity.
  std::vector<std::optional<std::string>> targets;
  Lambda subset_lambda;  // concurrent lambda of the winning subset
  MultiFlow witness;     // zero flows for unplaced commodities
};

/// Exhaustive LoMuF/Di-LoMuF solver: every target tuple (restricted to
/// `candidates` when given) is evaluated with solve_concurrent and the
/// lexicographically-first maximizer returned. `prune` enables provably
/// result-preserving skips (equal-supply symmetry, sound upper bounds); it
/// exists so tests can compare against the plain enumeration.
OracleResult oracle_lomuf(
    const CapacitatedGraph& g, const std::vector<SupplyVector>& supplies,
    const std::optional<std::vector<std::string>>& candidates = {},
    const OracleBudget& budget = {}, bool prune = true);

TotalOracleResult oracle_total(const CapacitatedGraph& g,
                               const std::vector<SupplyVector>& supplies,
                               const OracleBudget& budget = {},
                               bool prune = true);

/// Largest commodity subset simultaneously satisfiable at scale 1, over the
/// best target assignment.
MaxfResult oracle_maxf(const CapacitatedGraph& g,
                       const std::vector<SupplyVector>& supplies,
                       const OracleBudget& budget = {});

/// First (commodity, vertex) in index-then-vertex order whose singleton
/// placement is feasible; nullopt iff no single commodity can be satisfied.
std::optional<std::pair<int, std::string>> greedy_maxf(
    const CapacitatedGraph& g, const std::vector<SupplyVector>& supplies);

/// Unsplittable oracle (undirected): per target tuple, one simple path per
/// (commodity, source); lambda = min_e cap(e)/load(e) with load summing the
/// source magnitudes of paths through e, maximized over path assignments.
OracleResult oracle_unsplittable(
    const CapacitatedGraph& g, const std::vector<SupplyVector>& supplies,
    const std::optional<std::vector<std::string>>& candidates = {},
    const OracleBudget& budget = {});

/// 3-dimensional matching instance: X, Y, Z pairwise disjoint equal-size
/// sets and triples {x,y,z}.
struct ThreeDM {
  std::vector<std::string> x, y, z;
  std::vector<std::array<std::string, 3>> triples;
};

bool brute_perfect_matching(const ThreeDM& inst);

/// Can S be split into m parts of equal sum? (Parts of any size.)
bool brute_equipartition(const std::vector<long long>& s, int m);

struct SimpleGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

int brute_mis(const SimpleGraph& g);

}  // namespace lomuf
