#include "lomuf/flow.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

namespace lomuf {

namespace {
constexpr double kZeroEps = 1e-12;

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}
}  // namespace

bool SupplyVector::all_zero() const {
  for (const auto& [v, s] : supply)
    if (s < 0.0) return false;
  return true;
}

double SupplyVector::total_magnitude() const {
  double t = 0.0;
  for (const auto& [v, s] : supply) t += -s;
  return t;
}

std::vector<std::string> SupplyVector::sources() const {
  std::vector<std::string> out;
  for (const auto& [v, s] : supply)
    if (s < 0.0) out.push_back(v);
  return out;  // map order is lexicographic already
}

void SupplyVector::validate(const CapacitatedGraph& g) const {
  for (const auto& [v, s] : supply) {
    if (!g.has_vertex(v))
      throw ValidationError("supply references unknown vertex '" + v + "'");
    if (s > 0.0)
      throw ValidationError("positive supply " + fmt(s) + " at vertex '" + v +
                            "'");
    if (!std::isfinite(s))
      throw ValidationError("non-finite supply at vertex '" + v + "'");
  }
}

bool DemandVector::all_zero() const {
  for (const auto& [v, d] : demand)
    if (d != 0.0) return false;
  return true;
}

void DemandVector::validate(const CapacitatedGraph& g) const {
  double sum = 0.0;
  for (const auto& [v, d] : demand) {
    if (!g.has_vertex(v))
      throw ValidationError("demand references unknown vertex '" + v + "'");
    if (!std::isfinite(d))
      throw ValidationError("non-finite demand at vertex '" + v + "'");
    sum += d;
  }
  if (std::abs(sum) > kIdentityTol)
    throw ValidationError("demand entries sum to " + fmt(sum) +
                          ", expected 0");
}

Eigen::VectorXd DemandVector::dense(const CapacitatedGraph& g) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(g.num_vertices());
  for (const auto& [v, d] : demand) out[g.vertex_index(v)] = d;
  return out;
}

DemandVector scale(const DemandVector& d, double factor) {
  DemandVector out;
  for (const auto& [v, x] : d.demand)
    if (x * factor != 0.0) out.demand[v] = x * factor;
  return out;
}

DemandVector target_demand(const CapacitatedGraph& g, const SupplyVector& s,
                           const std::string& v) {
  if (!g.has_vertex(v))
    throw ValidationError("unknown target vertex '" + v + "'");
  s.validate(g);
  DemandVector d;
  double partial = 0.0;
  for (const auto& [u, val] : s.supply) {
    if (u == v) continue;
    if (val != 0.0) d.demand[u] = val;
    partial += val;
  }
  // Target entry is the exact negation of the partial sum, so the demand
  // sums to zero by construction.
  if (partial != 0.0) d.demand[v] = -partial;
  return d;
}

double net_at(const CapacitatedGraph& g, const Flow& f, int v) {
  double net = 0.0;
  for (int e : g.edges_in(v)) net += f.value[e];
  for (int e : g.edges_out(v)) net -= f.value[e];
  return net;
}

std::pair<std::vector<int>, std::vector<int>> cut_edges(
    const CapacitatedGraph& g, const std::set<std::string>& U) {
  if (U.empty()) throw ValidationError("cut set U is empty");
  std::set<int> inU;
  for (const auto& v : U) inU.insert(g.vertex_index(v));
  if (static_cast<int>(inU.size()) == g.num_vertices())
    throw ValidationError("cut set U equals the whole vertex set");
  std::vector<int> incoming, outgoing;
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    bool tail = inU.count(g.vertex_index(ed.u)) > 0;
    bool head = inU.count(g.vertex_index(ed.v)) > 0;
    if (tail && !head) outgoing.push_back(e);
    if (head && !tail) incoming.push_back(e);
  }
  return {incoming, outgoing};
}

double cut_balance(const CapacitatedGraph& g, const Flow& f,
                   const std::set<std::string>& U) {
  auto [in, out] = cut_edges(g, U);
  double bal = 0.0;
  for (int e : in) bal += f.value[e];
  for (int e : out) bal -= f.value[e];
  return bal;
}

bool check_cut_balance(const CapacitatedGraph& g, const Flow& f,
                       const DemandVector& d, const std::set<std::string>& U,
                       double tol) {
  double want = 0.0;
  for (const auto& v : U) want += d.at(v);
  return std::abs(cut_balance(g, f, U) - want) <= tol;
}

ValidationReport validate_multiflow(const CapacitatedGraph& g,
                                    const std::vector<DemandVector>& demands,
                                    const MultiFlow& mf, double tol) {
  if (demands.size() != mf.flows.size())
    throw ValidationError("demand/flow count mismatch (" +
                          std::to_string(demands.size()) + " vs " +
                          std::to_string(mf.flows.size()) + ")");
  ValidationReport rep;
  auto flag = [&rep](std::string msg) {
    rep.valid = false;
    rep.violations.push_back(std::move(msg));
  };
  for (size_t i = 0; i < mf.flows.size(); ++i) {
    const Flow& f = mf.flows[i];
    if (f.value.size() != g.num_edges())
      throw ValidationError("flow " + std::to_string(i) +
                            " has wrong edge count");
    if (g.directed()) {
      for (int e = 0; e < g.num_edges(); ++e)
        if (f.value[e] < -tol)
          flag("commodity " + std::to_string(i) + ": negative value on arc (" +
               g.edge(e).u + "," + g.edge(e).v + ")");
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
      double want = demands[i].at(g.vertices()[v]);
      double got = net_at(g, f, v);
      if (std::abs(got - want) > tol)
        flag("commodity " + std::to_string(i) + ": conservation at '" +
             g.vertices()[v] + "': net " + fmt(got) + " vs demand " +
             fmt(want));
    }
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    double cong = 0.0;
    for (const Flow& f : mf.flows) cong += std::abs(f.value[e]);
    if (cong > g.edge(e).cap + tol)
      flag("edge (" + g.edge(e).u + "," + g.edge(e).v + "): congestion " +
           fmt(cong) + " exceeds capacity " + fmt(g.edge(e).cap));
  }
  return rep;
}

namespace {

// Head/tail of edge e in the direction the flow actually moves.
int flow_to(const CapacitatedGraph& g, const Eigen::VectorXd& val, int e) {
  const Edge& ed = g.edge(e);
  return g.vertex_index(val[e] > 0 ? ed.v : ed.u);
}
int flow_from(const CapacitatedGraph& g, const Eigen::VectorXd& val, int e) {
  const Edge& ed = g.edge(e);
  return g.vertex_index(val[e] > 0 ? ed.u : ed.v);
}

// Edges carrying flow out of vertex x, lowest index first.
std::vector<int> flow_out_edges(const CapacitatedGraph& g,
                                const Eigen::VectorXd& val, int x) {
  std::vector<int> es;
  for (int e : g.edges_out(x))
    if (val[e] > kZeroEps) es.push_back(e);
  for (int e : g.edges_in(x))
    if (val[e] < -kZeroEps) es.push_back(e);
  std::sort(es.begin(), es.end());
  return es;
}

}  // namespace

Flow cancel_circulations(const CapacitatedGraph& g, const Flow& f) {
  Eigen::VectorXd val = f.value;
  while (true) {
    std::vector<int> color(g.num_vertices(), 0);  // 0 white 1 gray 2 black
    std::vector<int> via(g.num_vertices(), -1);   // edge used to enter
    std::vector<int> cycle;
    std::function<bool(int)> dfs = [&](int x) -> bool {
      color[x] = 1;
      for (int e : flow_out_edges(g, val, x)) {
        int y = flow_to(g, val, e);
        if (color[y] == 1) {
          cycle.push_back(e);
          for (int w = x; w != y; w = flow_from(g, val, via[w]))
            cycle.push_back(via[w]);
          return true;
        }
        if (color[y] == 0) {
          via[y] = e;
          if (dfs(y)) return true;
        }
      }
      color[x] = 2;
      return false;
    };
    for (int s = 0; s < g.num_vertices() && cycle.empty(); ++s)
      if (color[s] == 0) dfs(s);
    if (cycle.empty()) break;
    double m = std::numeric_limits<double>::infinity();
    for (int e : cycle) m = std::min(m, std::abs(val[e]));
    for (int e : cycle) {
      val[e] -= (val[e] > 0 ? m : -m);
      if (std::abs(val[e]) <= kZeroEps) val[e] = 0.0;
    }
  }
  return Flow{val};
}

std::vector<std::pair<std::string, Flow>> decompose_single_target(
    const CapacitatedGraph& g, const Flow& f, const DemandVector& d) {
  d.validate(g);
  std::string target;
  int positives = 0;
  for (const auto& [v, x] : d.demand)
    if (x > kZeroEps) {
      ++positives;
      target = v;
    }
  if (positives != 1)
    throw ValidationError("demand must have exactly one target, found " +
                          std::to_string(positives));
  for (int v = 0; v < g.num_vertices(); ++v) {
    double want = d.at(g.vertices()[v]);
    if (std::abs(net_at(g, f, v) - want) > kSatisfyTol)
      throw ValidationError("flow does not satisfy the demand at '" +
                            g.vertices()[v] + "'");
  }

  Flow clean = cancel_circulations(g, f);
  Eigen::VectorXd residual = clean.value;
  int t = g.vertex_index(target);

  std::vector<std::pair<std::string, Flow>> parts;
  for (const auto& [src, amount] : d.demand) {
    if (amount >= 0.0) continue;
    double need = -amount;
    Flow fs = Flow::zero(g);
    while (need > kZeroEps) {
      // Walk src -> target along remaining flow.
      std::vector<int> path;
      std::vector<bool> seen(g.num_vertices(), false);
      int x = g.vertex_index(src);
      while (x != t) {
        if (seen[x])
          throw std::logic_error("circulation survived cancellation");
        seen[x] = true;
        auto outs = flow_out_edges(g, residual, x);
        if (outs.empty())
          throw std::logic_error("path stripping stuck before target");
        int e = outs.front();
        path.push_back(e);
        x = flow_to(g, residual, e);
      }
      double amt = need;
      for (int e : path) amt = std::min(amt, std::abs(residual[e]));
      for (int e : path) {
        double dir = residual[e] > 0 ? 1.0 : -1.0;
        residual[e] -= dir * amt;
        fs.value[e] += dir * amt;
        if (std::abs(residual[e]) <= kZeroEps) residual[e] = 0.0;
      }
      need -= amt;
    }
    parts.emplace_back(src, std::move(fs));
  }
  if (residual.cwiseAbs().maxCoeff() > 1e-7)
    throw std::logic_error("decomposition left nonzero residual");
  return parts;
}

}  // namespace lomuf
