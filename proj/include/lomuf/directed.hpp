#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lomuf/graph.hpp"
#include "lomuf/locate.hpp"
#include "lomuf/mcf.hpp"

namespace lomuf {

/// Diamond-gadget expansion of an undirected graph: every edge <u,v> becomes
/// gadget vertices s_e, t_e and the five arcs (u,s_e), (v,s_e), (s_e,t_e),
/// (t_e,u), (t_e,v), all carrying the edge's capacity.
struct DiamondMap {
  CapacitatedGraph original;
  CapacitatedGraph expanded;
  // Per original edge index: the (s_e, t_e) vertex ids.
  std::vector<std::pair<std::string, std::string>> gadget;
};

DiamondMap diamond_expand(const CapacitatedGraph& g);

struct PullbackResult {
  std::vector<std::string> targets;  // in V(original)
  MultiFlow flows;                   // on the original graph
};

/// Map a solution of the expanded instance back onto the original graph. A
/// target inside the gadget of edge <u,v> moves to u when f'(u,s_e) exceeds
/// f'(v,s_e), to v when it is smaller, and to the lexicographically smaller
/// endpoint on a tie.
PullbackResult diamond_pullback(const DiamondMap& map,
                                const std::vector<std::string>& targets,
                                const MultiFlow& flows);

/// Undirected shadow of a directed graph: one edge per vertex pair joined by
/// at least one arc, capacity = sum of the (at most two) arc capacities.
CapacitatedGraph induced_undirected(const CapacitatedGraph& g);

/// All arcs carry equal capacity and every arc has its reverse twin.
bool is_symmetric(const CapacitatedGraph& g);

struct DirectedLocateResult {
  std::vector<std::string> targets;
  Lambda lambda;    // achieved on the directed graph by `flows`
  MultiFlow flows;  // on the directed graph
};

/// 2-approximation on symmetric di-trees: exact tree targets on the induced
/// graph, undirected witness halved onto the agreeing arcs.
DirectedLocateResult locate_symmetric_ditree(
    const CapacitatedGraph& g, const std::vector<SupplyVector>& supplies);

/// 2*max{eta-1,1}-approximation on symmetric directed graphs via
/// master-source targets on the induced graph.
DirectedLocateResult locate_symmetric_digraph(
    const CapacitatedGraph& g, const std::vector<SupplyVector>& supplies);

}  // namespace lomuf
