#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lomuf {

/// Raised on malformed inputs (bad instances, violated preconditions).
/// The CLI maps it to exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an oracle refuses an over-budget instance. CLI exit code 3.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One edge (undirected, with a reference orientation u->v fixed at
/// construction) or one arc (directed, from u to v).
struct Edge {
  std::string u;
  std::string v;
  double cap = 0.0;
};

/// A capacitated graph. Vertices are opaque string ids; all tie-breaks in
/// the suite use their lexicographic order. Immutable after construction.
class CapacitatedGraph {
 public:
  CapacitatedGraph(bool directed, std::vector<std::string> vertices,
                   std::vector<Edge> edges);

  bool directed() const { return directed_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int idx) const { return edges_.at(idx); }

  bool has_vertex(const std::string& id) const;
  /// Index of a vertex id; throws ValidationError if unknown.
  int vertex_index(const std::string& id) const;

  /// Edge between u and v regardless of orientation (undirected) or the
  /// exact arc (u,v) (directed); -1 if absent.
  int find_edge(const std::string& u, const std::string& v) const;

  /// Edges whose head (reference orientation) is vertex index v.
  const std::vector<int>& edges_in(int v) const { return in_.at(v); }
  /// Edges whose tail is vertex index v.
  const std::vector<int>& edges_out(int v) const { return out_.at(v); }

  /// Total capacity of edges incident to vertex index v.
  double incident_capacity(int v) const;

  /// Lexicographically smallest vertex id.
  const std::string& min_vertex() const;

  /// Vertex ids sorted lexicographically.
  std::vector<std::string> sorted_vertices() const;

 private:
  bool directed_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> in_;   // edges with head v
  std::vector<std::vector<int>> out_;  // edges with tail v
};

/// Weak-component id per vertex index (directions ignored).
std::vector<int> weak_components(const CapacitatedGraph& g);

bool is_connected(const CapacitatedGraph& g);

/// True iff g is undirected, connected and acyclic.
bool is_tree(const CapacitatedGraph& g);

}  // namespace lomuf
