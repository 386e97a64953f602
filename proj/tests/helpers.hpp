#pragma once

#include <Eigen/Dense>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lomuf/flow.hpp"
#include "lomuf/graph.hpp"
#include "lomuf/mcf.hpp"

namespace lomuf::testing {

inline CapacitatedGraph path_graph(const std::vector<std::string>& names,
                                   double cap) {
  std::vector<Edge> edges;
  for (size_t i = 0; i + 1 < names.size(); ++i)
    edges.push_back({names[i], names[i + 1], cap});
  return CapacitatedGraph(false, names, edges);
}

inline SupplyVector sv(
    std::initializer_list<std::pair<const char*, double>> entries) {
  SupplyVector s;
  for (const auto& [v, x] : entries) s.supply[v] = x;
  return s;
}

inline DemandVector dv(
    std::initializer_list<std::pair<const char*, double>> entries) {
  DemandVector d;
  for (const auto& [v, x] : entries) d.demand[v] = x;
  return d;
}

inline Lambda lambda_of_targets(const CapacitatedGraph& g,
                                const std::vector<SupplyVector>& supplies,
                                const std::vector<std::string>& targets) {
  std::vector<DemandVector> demands;
  for (size_t i = 0; i < supplies.size(); ++i)
    demands.push_back(target_demand(g, supplies[i], targets[i]));
  return solve_concurrent(g, demands).lambda;
}

// Independent single-commodity oracle (Gale/Hoffman): enumerate every vertex
// subset U; the demand is routable at scale lambda iff lambda * d(U) never
// exceeds the capacity entering U. Undirected cuts count both directions.
inline Lambda cut_oracle_lambda(const CapacitatedGraph& g,
                                const DemandVector& d) {
  const int n = g.num_vertices();
  Eigen::VectorXd dd = d.dense(g);
  if (dd.cwiseAbs().maxCoeff() == 0.0) return Lambda::unbounded();
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    double du = 0.0;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) du += dd[v];
    if (du <= 1e-12) continue;
    double cap_in = 0.0;
    for (int e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(e);
      bool tail = mask & (1u << g.vertex_index(ed.u));
      bool head = mask & (1u << g.vertex_index(ed.v));
      if (head != tail && (head || !g.directed())) cap_in += ed.cap;
    }
    best = std::min(best, cap_in / du);
  }
  return Lambda::finite(best == std::numeric_limits<double>::infinity() ? 0.0
                                                                        : best);
}

// The unique flow satisfying d on a tree: across each edge, exactly the net
// demand of the head-side component must cross.
inline Flow tree_flow(const CapacitatedGraph& g, const DemandVector& d) {
  Flow f = Flow::zero(g);
  for (int e = 0; e < g.num_edges(); ++e) {
    // Collect the component containing the head once e is removed.
    std::set<int> side;
    std::deque<int> queue{g.vertex_index(g.edge(e).v)};
    side.insert(queue.front());
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      auto visit = [&](int e2, int w) {
        if (e2 == e || side.count(w)) return;
        side.insert(w);
        queue.push_back(w);
      };
      for (int e2 : g.edges_in(v)) visit(e2, g.vertex_index(g.edge(e2).u));
      for (int e2 : g.edges_out(v)) visit(e2, g.vertex_index(g.edge(e2).v));
    }
    double sum = 0.0;
    for (int v : side) sum += d.at(g.vertices()[v]);
    f.value[e] = sum;
  }
  return f;
}

// Brute-force LP oracle: enumerate all bases of the slack-augmented system
// and keep the best feasible vertex. Only for tiny systems.
struct BruteLp {
  // maximize c'x st A x (<=|=) b, x >= 0
  Eigen::MatrixXd A;
  Eigen::VectorXd b, c;
  std::vector<bool> is_eq;

  // Returns {feasible, best objective}.
  std::pair<bool, double> solve() const {
    int m = static_cast<int>(A.rows());
    int n = static_cast<int>(A.cols());
    int nslack = 0;
    for (bool e : is_eq)
      if (!e) ++nslack;
    Eigen::MatrixXd Aug(m, n + nslack);
    Aug.leftCols(n) = A;
    Aug.rightCols(nslack).setZero();
    int s = n;
    for (int r = 0; r < m; ++r)
      if (!is_eq[r]) Aug(r, s++) = 1.0;
    int total = n + nslack;
    bool feasible = false;
    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> cols(m);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == m) {
        Eigen::MatrixXd B(m, m);
        for (int i = 0; i < m; ++i) B.col(i) = Aug.col(cols[i]);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
        if (!lu.isInvertible()) return;
        Eigen::VectorXd xb = lu.solve(b);
        if ((xb.array() < -1e-9).any()) return;
        double obj = 0.0;
        for (int i = 0; i < m; ++i)
          if (cols[i] < n) obj += c[cols[i]] * xb[i];
        feasible = true;
        best = std::max(best, obj);
        return;
      }
      for (int j = start; j < total; ++j) {
        cols[depth] = j;
        rec(j + 1, depth + 1);
      }
    };
    if (m == 0) return {true, 0.0};
    rec(0, 0);
    return {feasible, best};
  }
};

}  // namespace lomuf::testing
