#pragma once

#include <cstdint>
#include <vector>

#include "lomuf/io.hpp"
#include "lomuf/oracle.hpp"

namespace lomuf {

/// Reduction fixture from 3-DM: subgraphs H_X/H_Y/H_Z joined via a triple
/// vertex per w in W; edges incident to the primed collector carry |W_e|-1,
/// everything else 1. Meta records whether a perfect matching exists.
Instance gen_3dm_lomuf(const ThreeDM& dm);

/// Directed variant: primed collectors removed, arcs pointing from the
/// collectors through the elements into the triples, all capacities 1.
Instance gen_3dm_dilomuf(const ThreeDM& dm);

/// Symmetric di-path with twin arc capacities m*B and 5m-2 bi-source supply
/// vectors encoding a 3-partition instance.
Instance gen_3partition_dipath(const std::vector<long long>& s, int m);

/// Star of triples with capacity-6 edges and restricted candidates = leaves,
/// encoding 3-covered 3-DM.
Instance gen_3dm_restricted_tree(const ThreeDM& dm);

/// Star with edge capacity B, uni-source supplies at the center, candidates
/// = leaves, encoding 3-partition.
Instance gen_3partition_star(const std::vector<long long>& s, int m);

/// maxf fixture from a simple graph: one commodity per original vertex,
/// sourced at the vertex and at the w-pendant of each incident edge.
Instance gen_mis_maxf(const SimpleGraph& g);

Instance gen_random_tree(int n, int k, int max_sources, int cap_lo,
                         int cap_hi, std::uint64_t seed);

Instance gen_random_graph(int n, double p, int k, int max_sources,
                          int cap_lo, int cap_hi, std::uint64_t seed);

/// Random connected symmetric digraph (twin arcs, one shared capacity);
/// extra_p = 0 yields a symmetric di-tree.
Instance gen_random_symmetric_digraph(int n, double extra_p, int k,
                                      int max_sources, int cap,
                                      std::uint64_t seed);

}  // namespace lomuf
