#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lomuf/graph.hpp"
#include "lomuf/mcf.hpp"

namespace lomuf {

struct LocatorStats {
  int theta = 0;     // max source count over supplies
  double eta = 1.0;  // concentration: max_i |s_i|_1 / max_v |s_i(v)|
};

struct TreeLocateResult {
  std::vector<std::string> targets;
  // Commodities with an all-zero supply get the root and this flag.
  std::vector<bool> degenerate;
};

/// Exact tree locator: per commodity, start at the lowest common ancestor of
/// the sources and descend into a child subtree while it holds a strict
/// majority of the supply. The tree is rooted at `root` (default: the
/// lexicographically smallest vertex); the achieved lambda is independent of
/// the root choice.
TreeLocateResult locate_tree(const CapacitatedGraph& g,
                             const std::vector<SupplyVector>& supplies,
                             const std::optional<std::string>& root = {});

/// Per supply, the source of maximum magnitude; ties broken by vertex order.
std::vector<std::string> locate_master_source(
    const std::vector<SupplyVector>& supplies);

LocatorStats locator_stats(const std::vector<SupplyVector>& supplies);

/// Coordinate-ascent heuristic for the restricted-target variant: start each
/// target at the candidate nearest (hop distance) to the unrestricted master
/// source, then sweep commodities, moving each target to the candidate that
/// maximizes lambda while the others stay fixed. No optimality guarantee.
std::vector<std::string> locate_restricted(
    const CapacitatedGraph& g, const std::vector<SupplyVector>& supplies,
    const std::vector<std::string>& candidates, int rounds);

}  // namespace lomuf
