#include "lomuf/locate.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>

#include "lomuf/flow.hpp"

namespace lomuf {

namespace {

struct RootedTree {
  int root;
  std::vector<int> parent;               // -1 at root
  std::vector<int> depth;
  std::vector<std::vector<int>> children;
  std::vector<int> postorder;
};

RootedTree root_tree(const CapacitatedGraph& g, int root) {
  RootedTree t;
  t.root = root;
  int n = g.num_vertices();
  t.parent.assign(n, -2);
  t.depth.assign(n, 0);
  t.children.resize(n);
  std::deque<int> queue{root};
  t.parent[root] = -1;
  std::vector<int> order;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    auto visit = [&](int w) {
      if (t.parent[w] != -2) return;
      t.parent[w] = v;
      t.depth[w] = t.depth[v] + 1;
      t.children[v].push_back(w);
      queue.push_back(w);
    };
    for (int e : g.edges_in(v)) visit(g.vertex_index(g.edge(e).u));
    for (int e : g.edges_out(v)) visit(g.vertex_index(g.edge(e).v));
  }
  t.postorder.assign(order.rbegin(), order.rend());
  return t;
}

int lca(const RootedTree& t, int a, int b) {
  while (t.depth[a] > t.depth[b]) a = t.parent[a];
  while (t.depth[b] > t.depth[a]) b = t.parent[b];
  while (a != b) {
    a = t.parent[a];
    b = t.parent[b];
  }
  return a;
}

std::vector<int> hop_distances(const CapacitatedGraph& g, int start) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::deque<int> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    auto visit = [&](int w) {
      if (dist[w] >= 0) return;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    };
    for (int e : g.edges_in(v)) visit(g.vertex_index(g.edge(e).u));
    for (int e : g.edges_out(v)) visit(g.vertex_index(g.edge(e).v));
  }
  return dist;
}

}  // namespace

TreeLocateResult locate_tree(const CapacitatedGraph& g,
                             const std::vector<SupplyVector>& supplies,
                             const std::optional<std::string>& root) {
  if (!is_tree(g)) throw ValidationError("graph is not a tree");
  if (supplies.empty()) throw ValidationError("empty supply list");
  std::string root_id = root ? *root : g.min_vertex();
  RootedTree t = root_tree(g, g.vertex_index(root_id));

  TreeLocateResult out;
  for (const SupplyVector& s : supplies) {
    s.validate(g);
    if (s.all_zero()) {
      out.targets.push_back(root_id);
      out.degenerate.push_back(true);
      continue;
    }
    // Subtree supply magnitudes.
    std::vector<double> weight(g.num_vertices(), 0.0);
    for (int v : t.postorder) {
      weight[v] = -s.at(g.vertices()[v]);
      for (int c : t.children[v]) weight[v] += weight[c];
    }
    double total = weight[t.root];

    auto srcs = s.sources();
    int v = g.vertex_index(srcs[0]);
    for (size_t i = 1; i < srcs.size(); ++i)
      v = lca(t, v, g.vertex_index(srcs[i]));

    while (true) {
      int next = -1;
      for (int c : t.children[v]) {
        if (total - weight[c] < weight[c]) {
          if (next >= 0)
            throw std::logic_error(
                "two children both hold a strict supply majority");
          next = c;
        }
      }
      if (next < 0) break;
      v = next;
    }
    out.targets.push_back(g.vertices()[v]);
    out.degenerate.push_back(false);
  }
  return out;
}

std::vector<std::string> locate_master_source(
    const std::vector<SupplyVector>& supplies) {
  std::vector<std::string> out;
  for (const SupplyVector& s : supplies) {
    std::string best;
    double mag = 0.0;
    for (const auto& [v, val] : s.supply) {
      if (-val > mag) {  // map order makes ties pick the smallest vertex
        mag = -val;
        best = v;
      }
    }
    if (best.empty())
      throw ValidationError("supply vector has no sources");
    out.push_back(best);
  }
  return out;
}

LocatorStats locator_stats(const std::vector<SupplyVector>& supplies) {
  if (supplies.empty()) throw ValidationError("empty supply list");
  LocatorStats st;
  for (const SupplyVector& s : supplies) {
    int nsrc = static_cast<int>(s.sources().size());
    st.theta = std::max(st.theta, nsrc);
    double total = s.total_magnitude();
    double master = 0.0;
    for (const auto& [v, val] : s.supply) master = std::max(master, -val);
    st.eta = std::max(st.eta, master > 0.0 ? total / master : 1.0);
  }
  return st;
}

std::vector<std::string> locate_restricted(
    const CapacitatedGraph& g, const std::vector<SupplyVector>& supplies,
    const std::vector<std::string>& candidates, int rounds) {
  if (candidates.empty()) throw ValidationError("empty candidate set");
  std::vector<std::string> cands = candidates;
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const auto& c : cands) g.vertex_index(c);

  const int k = static_cast<int>(supplies.size());
  std::vector<std::string> masters = locate_master_source(supplies);
  std::vector<std::string> targets(k);
  for (int i = 0; i < k; ++i) {
    auto dist = hop_distances(g, g.vertex_index(masters[i]));
    int best = std::numeric_limits<int>::max();
    for (const auto& c : cands) {
      int d = dist[g.vertex_index(c)];
      int dd = d < 0 ? std::numeric_limits<int>::max() - 1 : d;
      if (dd < best) {
        best = dd;
        targets[i] = c;
      }
    }
  }

  auto lambda_of = [&](const std::vector<std::string>& tup) {
    std::vector<DemandVector> demands;
    for (int i = 0; i < k; ++i)
      demands.push_back(target_demand(g, supplies[i], tup[i]));
    return solve_concurrent(g, demands).lambda;
  };

  for (int round = 0; round < rounds; ++round) {
    bool changed = false;
    for (int i = 0; i < k; ++i) {
      std::vector<std::string> tup = targets;
      Lambda best;
      std::string pick;
      for (const auto& c : cands) {
        tup[i] = c;
        Lambda l = lambda_of(tup);
        if (pick.empty() || l > best) {
          best = l;
          pick = c;
        }
      }
      if (pick != targets[i]) {
        targets[i] = pick;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return targets;
}

}  // namespace lomuf
