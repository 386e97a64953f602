#include "lomuf/mcf.hpp"

#include <cmath>

#include "lomuf/simplex.hpp"

namespace lomuf {

namespace {

constexpr double kZeroEps = 1e-12;

// Per-commodity flow variables: two direction variables per undirected edge
// (forward along the reference orientation, backward), one per arc when
// directed. Returns the variable index of the flow of commodity i on edge e.
struct VarLayout {
  bool directed;
  int num_edges;
  int num_commodities;

  int vars_per_commodity() const {
    return directed ? num_edges : 2 * num_edges;
  }
  int fwd(int i, int e) const {
    return i * vars_per_commodity() + (directed ? e : 2 * e);
  }
  int bwd(int i, int e) const { return i * vars_per_commodity() + 2 * e + 1; }
  int total_flow_vars() const {
    return num_commodities * vars_per_commodity();
  }
};

// Conservation rows (one per commodity and vertex) plus joint capacity rows.
// The lambda column of commodity i is lambda_col(i); for the concurrent
// objective all commodities share one column.
void build_flow_rows(const CapacitatedGraph& g, const VarLayout& lay,
                     const std::vector<Eigen::VectorXd>& dense_demands,
                     const std::vector<int>& lambda_col, LinearProgram* lp) {
  for (int i = 0; i < lay.num_commodities; ++i) {
    for (int v = 0; v < g.num_vertices(); ++v) {
      int row = lp->add_eq(0.0);
      for (int e : g.edges_in(v)) {
        lp->set_coeff(row, lay.fwd(i, e), 1.0);
        if (!g.directed()) lp->set_coeff(row, lay.bwd(i, e), -1.0);
      }
      for (int e : g.edges_out(v)) {
        lp->set_coeff(row, lay.fwd(i, e), -1.0);
        if (!g.directed()) lp->set_coeff(row, lay.bwd(i, e), 1.0);
      }
      if (dense_demands[i][v] != 0.0)
        lp->set_coeff(row, lambda_col[i], -dense_demands[i][v]);
    }
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    int row = lp->add_le(g.edge(e).cap);
    for (int i = 0; i < lay.num_commodities; ++i) {
      lp->set_coeff(row, lay.fwd(i, e), 1.0);
      if (!g.directed()) lp->set_coeff(row, lay.bwd(i, e), 1.0);
    }
  }
}

Flow extract_flow(const CapacitatedGraph& g, const VarLayout& lay,
                  const Eigen::VectorXd& x, int i) {
  Flow f = Flow::zero(g);
  for (int e = 0; e < g.num_edges(); ++e) {
    double v = g.directed() ? x[lay.fwd(i, e)]
                            : x[lay.fwd(i, e)] - x[lay.bwd(i, e)];
    f.value[e] = std::abs(v) <= kZeroEps ? 0.0 : v;
  }
  return f;
}

// True when some weak component carries a nonzero net demand, which pins
// the only feasible scale to zero.
bool component_unbalanced(const CapacitatedGraph& g,
                          const std::vector<int>& comp,
                          const Eigen::VectorXd& dense) {
  int ncomp = 0;
  for (int c : comp) ncomp = std::max(ncomp, c + 1);
  std::vector<double> sum(ncomp, 0.0);
  for (int v = 0; v < g.num_vertices(); ++v) sum[comp[v]] += dense[v];
  for (double s : sum)
    if (std::abs(s) > kIdentityTol) return true;
  return false;
}

MultiFlow zero_witness(const CapacitatedGraph& g, int k) {
  MultiFlow mf;
  for (int i = 0; i < k; ++i) mf.flows.push_back(Flow::zero(g));
  return mf;
}

}  // namespace

ConcurrentResult solve_concurrent(const CapacitatedGraph& g,
                                  const std::vector<DemandVector>& demands) {
  const int k = static_cast<int>(demands.size());
  bool all_zero = true;
  for (const DemandVector& d : demands) {
    d.validate(g);
    if (!d.all_zero()) all_zero = false;
  }
  if (all_zero) return {Lambda::unbounded(), MultiFlow{}};

  std::vector<Eigen::VectorXd> dense;
  dense.reserve(k);
  for (const DemandVector& d : demands) dense.push_back(d.dense(g));

  auto comp = weak_components(g);
  for (const Eigen::VectorXd& dv : dense)
    if (component_unbalanced(g, comp, dv))
      return {Lambda::finite(0.0), zero_witness(g, k)};

  VarLayout lay{g.directed(), g.num_edges(), k};
  int lambda = lay.total_flow_vars();
  LinearProgram lp(lambda + 1);
  lp.set_objective(lambda, 1.0);
  build_flow_rows(g, lay, dense, std::vector<int>(k, lambda), &lp);

  LpSolution sol = lp.solve();
  if (sol.status != LpStatus::kOptimal)
    throw std::logic_error("concurrent-flow LP did not solve to optimality");

  ConcurrentResult res;
  res.lambda = Lambda::finite(std::max(sol.x[lambda], 0.0));
  for (int i = 0; i < k; ++i)
    res.witness.flows.push_back(extract_flow(g, lay, sol.x, i));
  return res;
}

TotalResult solve_total(const CapacitatedGraph& g,
                        const std::vector<SupplyVector>& supplies,
                        const std::vector<std::string>& targets) {
  if (supplies.size() != targets.size())
    throw ValidationError("supply/target count mismatch");
  const int k = static_cast<int>(supplies.size());

  TotalResult res;
  res.lambdas.assign(k, 0.0);
  res.witness = zero_witness(g, k);

  // A commodity whose demand vanishes (target on its only source) is served
  // in place at scale 1; an all-zero supply contributes nothing at scale 0.
  std::vector<int> active;
  std::vector<DemandVector> demands(k);
  std::vector<double> weight(k, 0.0);
  auto comp = weak_components(g);
  for (int i = 0; i < k; ++i) {
    supplies[i].validate(g);
    weight[i] = supplies[i].total_magnitude();
    demands[i] = target_demand(g, supplies[i], targets[i]);
    if (weight[i] <= 0.0) continue;
    if (demands[i].all_zero()) {
      res.lambdas[i] = 1.0;
      continue;
    }
    if (component_unbalanced(g, comp, demands[i].dense(g))) continue;
    active.push_back(i);
  }

  if (!active.empty()) {
    const int ka = static_cast<int>(active.size());
    VarLayout lay{g.directed(), g.num_edges(), ka};
    LinearProgram lp(lay.total_flow_vars() + ka);
    std::vector<Eigen::VectorXd> dense;
    std::vector<int> lambda_col(ka);
    for (int a = 0; a < ka; ++a) {
      lambda_col[a] = lay.total_flow_vars() + a;
      lp.set_objective(lambda_col[a], weight[active[a]]);
      dense.push_back(demands[active[a]].dense(g));
    }
    build_flow_rows(g, lay, dense, lambda_col, &lp);
    LpSolution sol = lp.solve();
    if (sol.status != LpStatus::kOptimal)
      throw std::logic_error("total-flow LP did not solve to optimality");
    for (int a = 0; a < ka; ++a) {
      res.lambdas[active[a]] = std::max(sol.x[lambda_col[a]], 0.0);
      res.witness.flows[active[a]] = extract_flow(g, lay, sol.x, a);
    }
  }

  res.objective = 0.0;
  for (int i = 0; i < k; ++i) res.objective += res.lambdas[i] * weight[i];
  return res;
}

bool check_feasible(const CapacitatedGraph& g,
                    const std::vector<DemandVector>& demands) {
  ConcurrentResult r = solve_concurrent(g, demands);
  return r.lambda.is_unbounded() || r.lambda.value() >= 1.0 - kSatisfyTol;
}

}  // namespace lomuf
