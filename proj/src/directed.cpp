#include "lomuf/directed.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "lomuf/flow.hpp"

namespace lomuf {

namespace {
constexpr double kZeroEps = 1e-12;
}

DiamondMap diamond_expand(const CapacitatedGraph& g) {
  if (g.directed())
    throw ValidationError("diamond expansion expects an undirected graph");
  std::vector<std::string> vertices = g.vertices();
  std::vector<Edge> arcs;
  std::vector<std::pair<std::string, std::string>> gadget;
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    std::string se = "s~" + ed.u + "~" + ed.v;
    std::string te = "t~" + ed.u + "~" + ed.v;
    if (g.has_vertex(se) || g.has_vertex(te))
      throw ValidationError("gadget vertex name collides with '" + se + "'");
    vertices.push_back(se);
    vertices.push_back(te);
    arcs.push_back({ed.u, se, ed.cap});
    arcs.push_back({ed.v, se, ed.cap});
    arcs.push_back({se, te, ed.cap});
    arcs.push_back({te, ed.u, ed.cap});
    arcs.push_back({te, ed.v, ed.cap});
    gadget.emplace_back(se, te);
  }
  return DiamondMap{g, CapacitatedGraph(true, std::move(vertices),
                                        std::move(arcs)),
                    std::move(gadget)};
}

PullbackResult diamond_pullback(const DiamondMap& map,
                                const std::vector<std::string>& targets,
                                const MultiFlow& flows) {
  const CapacitatedGraph& g = map.original;
  const CapacitatedGraph& gx = map.expanded;
  if (targets.size() != flows.flows.size())
    throw ValidationError("target/flow count mismatch");
  if (static_cast<int>(map.gadget.size()) != g.num_edges())
    throw ValidationError("inconsistent diamond map");
  for (const Flow& f : flows.flows)
    if (f.value.size() != gx.num_edges())
      throw ValidationError("flow does not live on the expanded graph");

  PullbackResult out;
  for (size_t i = 0; i < targets.size(); ++i) {
    if (!gx.has_vertex(targets[i]))
      throw ValidationError("unknown target '" + targets[i] + "'");
    // The entry/exit bookkeeping below is only exact on circulation-free
    // flows; LP witnesses may route cycles through a gadget.
    Flow fx = cancel_circulations(gx, flows.flows[i]);

    // Locate the gadget hosting the target, if any.
    int home = -1;
    for (int e = 0; e < g.num_edges(); ++e)
      if (map.gadget[e].first == targets[i] ||
          map.gadget[e].second == targets[i])
        home = e;

    std::string pulled = targets[i];
    if (home >= 0) {
      const Edge& ed = g.edge(home);
      double fu = fx.value[gx.find_edge(ed.u, map.gadget[home].first)];
      double fv = fx.value[gx.find_edge(ed.v, map.gadget[home].first)];
      if (fu > fv)
        pulled = ed.u;
      else if (fv > fu)
        pulled = ed.v;
      else
        pulled = std::min(ed.u, ed.v);
    }

    Flow f = Flow::zero(g);
    for (int e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(e);
      double fu = fx.value[gx.find_edge(ed.u, map.gadget[e].first)];
      double fv = fx.value[gx.find_edge(ed.v, map.gadget[e].first)];
      double val;
      if (e != home)
        val = fu - fv;
      else
        // The elected endpoint absorbs in place; the far side keeps feeding
        // it across e.
        val = pulled == ed.u ? -fv : fu;
      f.value[e] = std::abs(val) <= kZeroEps ? 0.0 : val;
    }
    out.flows.flows.push_back(std::move(f));
    out.targets.push_back(std::move(pulled));
  }
  return out;
}

CapacitatedGraph induced_undirected(const CapacitatedGraph& g) {
  if (!g.directed())
    throw ValidationError("induced graph expects a directed graph");
  std::vector<Edge> edges;
  std::map<std::pair<int, int>, int> seen;  // normalized pair -> edge index
  for (int a = 0; a < g.num_edges(); ++a) {
    const Edge& arc = g.edge(a);
    int ui = g.vertex_index(arc.u), vi = g.vertex_index(arc.v);
    std::pair<int, int> key = std::minmax(ui, vi);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, static_cast<int>(edges.size()));
      edges.push_back({arc.u, arc.v, arc.cap});
    } else {
      edges[it->second].cap += arc.cap;
    }
  }
  return CapacitatedGraph(false, g.vertices(), std::move(edges));
}

bool is_symmetric(const CapacitatedGraph& g) {
  if (!g.directed()) return false;
  double cap = -1.0;
  for (int a = 0; a < g.num_edges(); ++a) {
    const Edge& arc = g.edge(a);
    if (cap < 0.0)
      cap = arc.cap;
    else if (arc.cap != cap)
      return false;
    if (g.find_edge(arc.v, arc.u) < 0) return false;
  }
  return true;
}

namespace {

DirectedLocateResult lift_halved(const CapacitatedGraph& g,
                                 const CapacitatedGraph& induced,
                                 const std::vector<SupplyVector>& supplies,
                                 const std::vector<std::string>& targets) {
  std::vector<DemandVector> demands;
  for (size_t i = 0; i < supplies.size(); ++i)
    demands.push_back(target_demand(induced, supplies[i], targets[i]));
  ConcurrentResult undirected = solve_concurrent(induced, demands);

  DirectedLocateResult out;
  out.targets = targets;
  if (undirected.lambda.is_unbounded()) {
    out.lambda = Lambda::unbounded();
    for (size_t i = 0; i < supplies.size(); ++i)
      out.flows.flows.push_back(Flow::zero(g));
    return out;
  }
  out.lambda = Lambda::finite(undirected.lambda.value() / 2.0);
  for (const Flow& fu : undirected.witness.flows) {
    Flow fd = Flow::zero(g);
    for (int e = 0; e < induced.num_edges(); ++e) {
      double v = fu.value[e];
      if (std::abs(v) <= kZeroEps) continue;
      const Edge& ed = induced.edge(e);
      int arc = v > 0 ? g.find_edge(ed.u, ed.v) : g.find_edge(ed.v, ed.u);
      fd.value[arc] += std::abs(v) / 2.0;
    }
    out.flows.flows.push_back(std::move(fd));
  }
  return out;
}

}  // namespace

DirectedLocateResult locate_symmetric_ditree(
    const CapacitatedGraph& g, const std::vector<SupplyVector>& supplies) {
  if (!is_symmetric(g))
    throw ValidationError("graph is not symmetric");
  CapacitatedGraph induced = induced_undirected(g);
  if (!is_tree(induced))
    throw ValidationError("induced graph is not a tree");
  TreeLocateResult tl = locate_tree(induced, supplies);
  return lift_halved(g, induced, supplies, tl.targets);
}

DirectedLocateResult locate_symmetric_digraph(
    const CapacitatedGraph& g, const std::vector<SupplyVector>& supplies) {
  if (!is_symmetric(g))
    throw ValidationError("graph is not symmetric");
  CapacitatedGraph induced = induced_undirected(g);
  return lift_halved(g, induced, supplies, locate_master_source(supplies));
}

}  // namespace lomuf
