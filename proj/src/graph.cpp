#include "lomuf/graph.hpp"

#include <algorithm>

namespace lomuf {

CapacitatedGraph::CapacitatedGraph(bool directed,
                                   std::vector<std::string> vertices,
                                   std::vector<Edge> edges)
    : directed_(directed),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)) {
  if (vertices_.empty()) throw ValidationError("graph has no vertices");
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
    auto [it, fresh] = index_.emplace(vertices_[i], i);
    (void)it;
    if (!fresh)
      throw ValidationError("duplicate vertex id '" + vertices_[i] + "'");
  }
  in_.resize(vertices_.size());
  out_.resize(vertices_.size());
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const Edge& ed = edges_[e];
    auto iu = index_.find(ed.u);
    auto iv = index_.find(ed.v);
    if (iu == index_.end() || iv == index_.end())
      throw ValidationError("edge (" + ed.u + "," + ed.v +
                            ") references unknown vertex");
    if (iu->second == iv->second)
      throw ValidationError("self-loop at vertex '" + ed.u + "'");
    if (!(ed.cap >= 0.0))
      throw ValidationError("negative capacity on edge (" + ed.u + "," +
                            ed.v + ")");
    std::pair<int, int> key(iu->second, iv->second);
    if (!directed_ && key.first > key.second)
      std::swap(key.first, key.second);
    if (!seen.insert(key).second)
      throw ValidationError(std::string(directed_ ? "duplicate arc ("
                                                  : "duplicate edge (") +
                            ed.u + "," + ed.v + ")");
    out_[iu->second].push_back(e);
    in_[iv->second].push_back(e);
  }
}

bool CapacitatedGraph::has_vertex(const std::string& id) const {
  return index_.count(id) > 0;
}

int CapacitatedGraph::vertex_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw ValidationError("unknown vertex '" + id + "'");
  return it->second;
}

int CapacitatedGraph::find_edge(const std::string& u,
                                const std::string& v) const {
  if (!has_vertex(u) || !has_vertex(v)) return -1;
  int ui = vertex_index(u), vi = vertex_index(v);
  for (int e : out_[ui])
    if (vertex_index(edges_[e].v) == vi) return e;
  if (!directed_) {
    for (int e : out_[vi])
      if (vertex_index(edges_[e].v) == ui) return e;
  }
  return -1;
}

double CapacitatedGraph::incident_capacity(int v) const {
  double c = 0.0;
  for (int e : in_.at(v)) c += edges_[e].cap;
  for (int e : out_.at(v)) c += edges_[e].cap;
  return c;
}

const std::string& CapacitatedGraph::min_vertex() const {
  return *std::min_element(vertices_.begin(), vertices_.end());
}

std::vector<std::string> CapacitatedGraph::sorted_vertices() const {
  std::vector<std::string> vs = vertices_;
  std::sort(vs.begin(), vs.end());
  return vs;
}

std::vector<int> weak_components(const CapacitatedGraph& g) {
  std::vector<int> comp(g.num_vertices(), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      auto visit = [&](int e, bool head) {
        const Edge& ed = g.edge(e);
        int w = g.vertex_index(head ? ed.u : ed.v);
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      };
      for (int e : g.edges_in(v)) visit(e, true);
      for (int e : g.edges_out(v)) visit(e, false);
    }
    ++next;
  }
  return comp;
}

bool is_connected(const CapacitatedGraph& g) {
  auto comp = weak_components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool is_tree(const CapacitatedGraph& g) {
  return !g.directed() && g.num_edges() == g.num_vertices() - 1 &&
         is_connected(g);
}

}  // namespace lomuf
