#include "lomuf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "lomuf/flow.hpp"

namespace lomuf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kZeroEps = 1e-12;

std::int64_t saturating_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::int64_t>::max() / base)
      return std::numeric_limits<std::int64_t>::max();
    r *= base;
  }
  return r;
}

void check_tuple_budget(std::int64_t ncand, int k,
                        const OracleBudget& budget) {
  if (budget.max_lp_calls <= 0 || budget.max_paths <= 0)
    throw ValidationError("oracle budget must be positive");
  std::int64_t tuples = saturating_pow(ncand, k);
  if (tuples > budget.max_lp_calls)
    throw BudgetError("target enumeration needs " +
                      (tuples == std::numeric_limits<std::int64_t>::max()
                           ? std::string("too many")
                           : std::to_string(tuples)) +
                      " LP calls, budget is " +
                      std::to_string(budget.max_lp_calls));
}

std::vector<std::string> resolve_candidates(
    const CapacitatedGraph& g,
    const std::optional<std::vector<std::string>>& candidates) {
  std::vector<std::string> cands =
      candidates ? *candidates : g.sorted_vertices();
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  if (cands.empty()) throw ValidationError("empty candidate set");
  for (const auto& c : cands) g.vertex_index(c);
  return cands;
}

// Enumerates target tuples in lexicographic order, restricted to tuples
// that are non-decreasing within each class of equal supply vectors.
// Commodities with equal supplies are interchangeable, so the
// lexicographically-first maximizer is itself so sorted and the restriction
// loses nothing.
struct GroupedTuples {
  int k;
  int ncand;
  std::vector<int> prev_same;  // previous commodity with equal supply, or -1
  std::vector<int> idx;

  GroupedTuples(const std::vector<SupplyVector>& supplies, int ncand_,
                bool group)
      : k(static_cast<int>(supplies.size())), ncand(ncand_) {
    prev_same.assign(k, -1);
    if (group)
      for (int i = 0; i < k; ++i)
        for (int j = i - 1; j >= 0; --j)
          if (supplies[j] == supplies[i]) {
            prev_same[i] = j;
            break;
          }
    idx.assign(k, 0);
  }

  bool next() {
    for (int pos = k - 1; pos >= 0; --pos) {
      if (idx[pos] < ncand - 1) {
        ++idx[pos];
        for (int q = pos + 1; q < k; ++q)
          idx[q] = prev_same[q] >= 0 ? idx[prev_same[q]] : 0;
        return true;
      }
    }
    return false;
  }
};

// Sound upper bounds on the concurrent lambda of a target tuple:
//  - the single-commodity optimum of each commodity at its target, and
//  - per vertex u, cap(Cut({u})) / sum_i |(s_i o v_i)(u)|.
// Either can only overestimate, so skipping tuples that cannot strictly
// beat the incumbent never changes the argmax.
class TupleBound {
 public:
  TupleBound(const CapacitatedGraph& g,
             const std::vector<SupplyVector>& supplies,
             const std::vector<std::string>& cands,
             const std::vector<std::vector<DemandVector>>& demands)
      : k_(static_cast<int>(supplies.size())) {
    lam_single_.resize(k_);
    for (int i = 0; i < k_; ++i) {
      lam_single_[i].resize(cands.size());
      for (size_t c = 0; c < cands.size(); ++c) {
        ConcurrentResult r = solve_concurrent(g, {demands[i][c]});
        lam_single_[i][c] = r.lambda.value_or_inf();
      }
    }
    std::set<std::string> rel;
    for (const SupplyVector& s : supplies)
      for (const auto& [v, val] : s.supply)
        if (val < 0.0) rel.insert(v);
    for (const auto& c : cands) rel.insert(c);
    for (const auto& v : rel) {
      rel_names_.push_back(v);
      cutcap_.push_back(g.incident_capacity(g.vertex_index(v)));
    }
    base_.assign(rel_names_.size(), 0.0);
    smag_.assign(k_, std::vector<double>(rel_names_.size(), 0.0));
    totmag_.assign(k_, 0.0);
    for (int i = 0; i < k_; ++i) {
      totmag_[i] = supplies[i].total_magnitude();
      for (size_t r = 0; r < rel_names_.size(); ++r) {
        smag_[i][r] = -supplies[i].at(rel_names_[r]);
        base_[r] += smag_[i][r];
      }
    }
    cand_rel_.resize(cands.size());
    for (size_t c = 0; c < cands.size(); ++c)
      cand_rel_[c] = static_cast<int>(
          std::lower_bound(rel_names_.begin(), rel_names_.end(), cands[c]) -
          rel_names_.begin());
  }

  double single(int i, int cand) const { return lam_single_[i][cand]; }

  double ub(const std::vector<int>& tuple) const {
    double bound = kInf;
    for (int i = 0; i < k_; ++i)
      bound = std::min(bound, lam_single_[i][tuple[i]]);

    static thread_local std::vector<double> net;
    net.assign(base_.begin(), base_.end());
    for (int i = 0; i < k_; ++i) {
      int r = cand_rel_[tuple[i]];
      net[r] += totmag_[i] - 2.0 * smag_[i][r];
    }
    for (size_t r = 0; r < net.size(); ++r)
      if (net[r] > kZeroEps) bound = std::min(bound, cutcap_[r] / net[r]);
    return bound;
  }

 private:
  int k_;
  std::vector<std::vector<double>> lam_single_;
  std::vector<std::string> rel_names_;
  std::vector<double> cutcap_;
  std::vector<double> base_;
  std::vector<std::vector<double>> smag_;
  std::vector<double> totmag_;
  std::vector<int> cand_rel_;
};

std::vector<std::vector<DemandVector>> demand_table(
    const CapacitatedGraph& g, const std::vector<SupplyVector>& supplies,
    const std::vector<std::string>& cands) {
  std::vector<std::vector<DemandVector>> t(supplies.size());
  for (size_t i = 0; i < supplies.size(); ++i) {
    t[i].reserve(cands.size());
    for (const auto& c : cands)
      t[i].push_back(target_demand(g, supplies[i], c));
  }
  return t;
}

std::vector<std::string> tuple_names(const std::vector<std::string>& cands,
                                     const std::vector<int>& t) {
  std::vector<std::string> out;
  out.reserve(t.size());
  for (int c : t) out.push_back(cands[c]);
  return out;
}

}  // namespace

OracleResult oracle_lomuf(
    const CapacitatedGraph& g, const std::vector<SupplyVector>& supplies,
    const std::optional<std::vector<std::string>>& candidates,
    const OracleBudget& budget, bool prune) {
  const int k = static_cast<int>(supplies.size());
  if (k == 0) return {{}, Lambda::unbounded(), MultiFlow{}};
  for (const SupplyVector& s : supplies) s.validate(g);
  auto cands = resolve_candidates(g, candidates);
  check_tuple_budget(static_cast<std::int64_t>(cands.size()), k, budget);
  auto demands = demand_table(g, supplies, cands);

  std::optional<TupleBound> bound;
  std::int64_t tuples =
      saturating_pow(static_cast<std::int64_t>(cands.size()), k);
  if (prune && k >= 2 && tuples >= 128)
    bound.emplace(g, supplies, cands, demands);

  GroupedTuples en(supplies, static_cast<int>(cands.size()), prune);
  OracleResult best;
  bool have = false;
  do {
    if (have && best.lambda.is_unbounded()) break;
    if (have && bound && !best.lambda.is_unbounded() &&
        bound->ub(en.idx) <= best.lambda.value())
      continue;
    std::vector<DemandVector> dv;
    dv.reserve(k);
    for (int i = 0; i < k; ++i) dv.push_back(demands[i][en.idx[i]]);
    ConcurrentResult r = solve_concurrent(g, dv);
    if (!have || r.lambda > best.lambda) {
      best = {tuple_names(cands, en.idx), r.lambda, std::move(r.witness)};
      have = true;
    }
  } while (en.next());
  return best;
}

TotalOracleResult oracle_total(const CapacitatedGraph& g,
                               const std::vector<SupplyVector>& supplies,
                               const OracleBudget& budget, bool prune) {
  const int k = static_cast<int>(supplies.size());
  if (k == 0) return {{}, 0.0, {}, MultiFlow{}};
  for (const SupplyVector& s : supplies) s.validate(g);
  auto cands = resolve_candidates(g, {});
  check_tuple_budget(static_cast<std::int64_t>(cands.size()), k, budget);
  auto demands = demand_table(g, supplies, cands);

  // Per-commodity contribution cap: alone-in-the-network lambda, or exactly
  // 1 for an in-place (all-zero-demand) target.
  std::optional<TupleBound> bound;
  std::vector<std::vector<double>> cap_contrib;
  std::vector<double> weight(k);
  for (int i = 0; i < k; ++i) weight[i] = supplies[i].total_magnitude();
  std::int64_t tuples =
      saturating_pow(static_cast<std::int64_t>(cands.size()), k);
  if (prune && tuples >= 128) {
    bound.emplace(g, supplies, cands, demands);
    cap_contrib.assign(k, std::vector<double>(cands.size(), 0.0));
    for (int i = 0; i < k; ++i)
      for (size_t c = 0; c < cands.size(); ++c)
        cap_contrib[i][c] = demands[i][c].all_zero()
                                ? 1.0
                                : bound->single(i, static_cast<int>(c));
  }

  GroupedTuples en(supplies, static_cast<int>(cands.size()), prune);
  TotalOracleResult best;
  bool have = false;
  do {
    if (have && bound) {
      double ub = 0.0;
      for (int i = 0; i < k; ++i)
        ub += weight[i] * cap_contrib[i][en.idx[i]];
      if (ub <= best.objective) continue;
    }
    auto names = tuple_names(cands, en.idx);
    TotalResult r = solve_total(g, supplies, names);
    if (!have || r.objective > best.objective) {
      best = {std::move(names), r.objective, std::move(r.lambdas),
              std::move(r.witness)};
      have = true;
    }
  } while (en.next());
  return best;
}

namespace {

// Feasibility search over target tuples for the commodity subset `sub`.
struct SubsetSearch {
  const CapacitatedGraph& g;
  const std::vector<SupplyVector>& supplies;
  const std::vector<std::string>& cands;
  const std::vector<std::vector<DemandVector>>& demands;
  const TupleBound& bound;

  std::optional<std::pair<std::vector<int>, ConcurrentResult>> run(
      const std::vector<int>& sub) const {
    std::vector<SupplyVector> ss;
    for (int i : sub) ss.push_back(supplies[i]);
    GroupedTuples en(ss, static_cast<int>(cands.size()), true);
    do {
      bool skip = false;
      for (size_t a = 0; a < sub.size() && !skip; ++a)
        if (bound.single(sub[a], en.idx[a]) < 1.0 - kSatisfyTol) skip = true;
      if (skip) continue;
      std::vector<DemandVector> dv;
      for (size_t a = 0; a < sub.size(); ++a)
        dv.push_back(demands[sub[a]][en.idx[a]]);
      ConcurrentResult r = solve_concurrent(g, dv);
      if (r.lambda.is_unbounded() || r.lambda.value() >= 1.0 - kSatisfyTol)
        return std::make_pair(en.idx, std::move(r));
    } while (en.next());
    return std::nullopt;
  }
};

}  // namespace

MaxfResult oracle_maxf(const CapacitatedGraph& g,
                       const std::vector<SupplyVector>& supplies,
                       const OracleBudget& budget) {
  const int k = static_cast<int>(supplies.size());
  MaxfResult res;
  res.targets.assign(k, std::nullopt);
  res.subset_lambda = Lambda::unbounded();
  for (int i = 0; i < k; ++i) {
    res.witness.flows.push_back(Flow::zero(g));
    supplies[i].validate(g);
  }
  if (k == 0) return res;

  // Search-space budget: sum over subsets S of |V|^|S| LP calls..
  if (budget.max_lp_calls <= 0)
    throw ValidationError("oracle budget must be positive");
  std::int64_t space =
      saturating_pow(static_cast<std::int64_t>(g.num_vertices()) + 1, k);
  if (space > budget.max_lp_calls)
    throw BudgetError("subset/target enumeration needs " +
                      std::to_string(space) + " LP calls, budget is " +
                      std::to_string(budget.max_lp_calls));

  auto cands = resolve_candidates(g, {});
  auto demands = demand_table(g, supplies, cands);
  TupleBound bound(g, supplies, cands, demands);
  SubsetSearch search{g, supplies, cands, demands, bound};

  std::vector<char> single_ok(k, 0);
  for (int i = 0; i < k; ++i)
    for (size_t c = 0; c < cands.size(); ++c)
      if (bound.single(i, static_cast<int>(c)) >= 1.0 - kSatisfyTol)
        single_ok[i] = 1;

  // Pairwise feasibility, computed lazily: any infeasible pair rules out
  // every superset.
  std::map<std::pair<int, int>, bool> pair_ok;
  auto pair_feasible = [&](int a, int b) {
    auto key = std::minmax(a, b);
    auto it = pair_ok.find(key);
    if (it != pair_ok.end()) return it->second;
    bool ok = search.run({key.first, key.second}).has_value();
    pair_ok.emplace(key, ok);
    return ok;
  };

  for (int size = k; size >= 1; --size) {
    // Lexicographic combinations of {0..k-1} of the given size.
    std::vector<int> sub(size);
    std::iota(sub.begin(), sub.end(), 0);
    while (true) {
      bool viable = true;
      for (int i : sub)
        if (!single_ok[i]) viable = false;
      if (viable && size >= 2)
        for (size_t a = 0; a < sub.size() && viable; ++a)
          for (size_t b = a + 1; b < sub.size() && viable; ++b)
            if (!pair_feasible(sub[a], sub[b])) viable = false;
      if (viable) {
        auto found = search.run(sub);
        if (found) {
          res.zeta = size;
          res.subset_lambda = found->second.lambda;
          // An unbounded subset (all demands zero) carries no witness.
          bool have_flows =
              found->second.witness.flows.size() == sub.size();
          for (size_t a = 0; a < sub.size(); ++a) {
            res.targets[sub[a]] = cands[found->first[a]];
            if (have_flows)
              res.witness.flows[sub[a]] = found->second.witness.flows[a];
          }
          return res;
        }
      }
      // next combination
      int pos = size - 1;
      while (pos >= 0 && sub[pos] == k - size + pos) --pos;
      if (pos < 0) break;
      ++sub[pos];
      for (int q = pos + 1; q < size; ++q) sub[q] = sub[q - 1] + 1;
    }
  }
  return res;  // zeta = 0
}

std::optional<std::pair<int, std::string>> greedy_maxf(
    const CapacitatedGraph& g, const std::vector<SupplyVector>& supplies) {
  auto verts = g.sorted_vertices();
  for (int i = 0; i < static_cast<int>(supplies.size()); ++i) {
    supplies[i].validate(g);
    for (const auto& v : verts) {
      if (check_feasible(g, {target_demand(g, supplies[i], v)}))
        return std::make_pair(i, v);
    }
  }
  return std::nullopt;
}

namespace {

struct PathStep {
  int edge;
  double dir;  // +1 when traversed along the reference orientation
};

// All simple paths between two vertices, edges in index order; refuses via
// BudgetError when more than max_paths exist.
std::vector<std::vector<PathStep>> simple_paths(const CapacitatedGraph& g,
                                                int from, int to,
                                                std::int64_t max_paths) {
  std::vector<std::vector<PathStep>> out;
  std::vector<PathStep> cur;
  std::vector<bool> used(g.num_vertices(), false);
  std::function<void(int)> dfs = [&](int x) {
    if (x == to) {
      if (static_cast<std::int64_t>(out.size()) >= max_paths)
        throw BudgetError("more than " + std::to_string(max_paths) +
                          " simple paths between '" + g.vertices()[from] +
                          "' and '" + g.vertices()[to] + "'");
      out.push_back(cur);
      return;
    }
    used[x] = true;
    std::vector<std::pair<int, double>> nexts;
    for (int e : g.edges_out(x)) nexts.push_back({e, 1.0});
    for (int e : g.edges_in(x)) nexts.push_back({e, -1.0});
    std::sort(nexts.begin(), nexts.end());
    for (auto [e, dir] : nexts) {
      const Edge& ed = g.edge(e);
      int y = g.vertex_index(dir > 0 ? ed.v : ed.u);
      if (used[y]) continue;
      cur.push_back({e, dir});
      dfs(y);
      cur.pop_back();
    }
    used[x] = false;
  };
  dfs(from);
  return out;
}

}  // namespace

OracleResult oracle_unsplittable(
    const CapacitatedGraph& g, const std::vector<SupplyVector>& supplies,
    const std::optional<std::vector<std::string>>& candidates,
    const OracleBudget& budget) {
  if (g.directed())
    throw ValidationError("unsplittable oracle expects an undirected graph");
  const int k = static_cast<int>(supplies.size());
  if (k == 0) return {{}, Lambda::unbounded(), MultiFlow{}};
  for (const SupplyVector& s : supplies) s.validate(g);
  auto cands = resolve_candidates(g, candidates);
  check_tuple_budget(static_cast<std::int64_t>(cands.size()), k, budget);

  // Path lists are shared across tuples.
  std::map<std::pair<int, int>, std::vector<std::vector<PathStep>>> paths;
  auto paths_for = [&](int from, int to)
      -> const std::vector<std::vector<PathStep>>& {
    auto key = std::make_pair(from, to);
    auto it = paths.find(key);
    if (it == paths.end())
      it = paths.emplace(key, simple_paths(g, from, to, budget.max_paths))
               .first;
    return it->second;
  };

  struct Shipment {
    int commodity;
    double magnitude;
    const std::vector<std::vector<PathStep>>* paths;
  };

  GroupedTuples en(supplies, static_cast<int>(cands.size()), true);
  bool have = false;
  Lambda best_lambda;
  std::vector<int> best_tuple;
  std::vector<Shipment> best_ship;
  std::vector<int> best_choice;

  do {
    // Build the per-source shipments for this tuple.
    std::vector<Shipment> ship;
    bool unreachable = false;
    for (int i = 0; i < k && !unreachable; ++i) {
      int tgt = g.vertex_index(cands[en.idx[i]]);
      for (const auto& [src, val] : supplies[i].supply) {
        if (val >= 0.0) continue;
        int si = g.vertex_index(src);
        if (si == tgt) continue;
        const auto& pl = paths_for(si, tgt);
        if (pl.empty()) {
          unreachable = true;
          break;
        }
        ship.push_back({i, -val, &pl});
      }
    }

    Lambda lam;
    std::vector<int> choice(ship.size(), 0);
    if (unreachable) {
      lam = Lambda::finite(0.0);
    } else if (ship.empty()) {
      lam = Lambda::unbounded();
    } else {
      std::int64_t assignments = 1;
      for (const Shipment& s : ship) {
        std::int64_t n = static_cast<std::int64_t>(s.paths->size());
        if (assignments > budget.max_paths / n + 1)
          assignments = std::numeric_limits<std::int64_t>::max();
        else
          assignments *= n;
      }
      if (assignments > budget.max_paths)
        throw BudgetError("path assignment count exceeds budget");

      Eigen::VectorXd load(g.num_edges());
      std::vector<int> pick(ship.size(), 0);
      double best_val = -1.0;
      while (true) {
        load.setZero();
        for (size_t p = 0; p < ship.size(); ++p)
          for (const PathStep& st : (*ship[p].paths)[pick[p]])
            load[st.edge] += ship[p].magnitude;
        double val = kInf;
        for (int e = 0; e < g.num_edges(); ++e)
          if (load[e] > kZeroEps)
            val = std::min(val, g.edge(e).cap / load[e]);
        if (val > best_val) {
          best_val = val;
          choice = pick;
        }
        int pos = static_cast<int>(ship.size()) - 1;
        while (pos >= 0 &&
               pick[pos] + 1 >= static_cast<int>(ship[pos].paths->size())) {
          pick[pos] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++pick[pos];
      }
      lam = Lambda::finite(best_val);
    }

    if (!have || lam > best_lambda) {
      have = true;
      best_lambda = lam;
      best_tuple = en.idx;
      best_ship = std::move(ship);
      best_choice = std::move(choice);
    }
    if (best_lambda.is_unbounded()) break;
  } while (en.next());

  // Materialize the witness of the winning assignment.
  OracleResult res;
  res.targets = tuple_names(cands, best_tuple);
  res.lambda = best_lambda;
  double lam_val = best_lambda.is_unbounded() ? 0.0 : best_lambda.value();
  for (int i = 0; i < k; ++i) res.witness.flows.push_back(Flow::zero(g));
  for (size_t p = 0; p < best_ship.size(); ++p) {
    const Shipment& s = best_ship[p];
    for (const PathStep& st : (*s.paths)[best_choice[p]])
      res.witness.flows[s.commodity].value[st.edge] +=
          st.dir * lam_val * s.magnitude;
  }
  return res;
}

bool brute_perfect_matching(const ThreeDM& inst) {
  const int k = static_cast<int>(inst.x.size());
  if (static_cast<int>(inst.y.size()) != k ||
      static_cast<int>(inst.z.size()) != k)
    throw ValidationError("3-DM sets must have equal sizes");
  if (inst.triples.size() > 20)
    throw BudgetError("3-DM brute force limited to |W| <= 20");
  auto index_of = [](const std::vector<std::string>& v,
                     const std::string& s) {
    auto it = std::find(v.begin(), v.end(), s);
    if (it == v.end())
      throw ValidationError("triple references unknown element '" + s + "'");
    return static_cast<int>(it - v.begin());
  };
  std::vector<std::array<int, 3>> tri;
  for (const auto& t : inst.triples)
    tri.push_back({index_of(inst.x, t[0]), index_of(inst.y, t[1]),
                   index_of(inst.z, t[2])});

  std::vector<bool> yu(k, false), zu(k, false);
  std::function<bool(int)> match = [&](int xi) -> bool {
    if (xi == k) return true;
    for (const auto& t : tri) {
      if (t[0] != xi || yu[t[1]] || zu[t[2]]) continue;
      yu[t[1]] = zu[t[2]] = true;
      if (match(xi + 1)) return true;
      yu[t[1]] = zu[t[2]] = false;
    }
    return false;
  };
  return match(0);
}

bool brute_equipartition(const std::vector<long long>& s, int m) {
  if (m <= 0) throw ValidationError("partition count must be positive");
  if (s.size() > 12)
    throw BudgetError("equi-partition brute force limited to |S| <= 12");
  long long total = std::accumulate(s.begin(), s.end(), 0LL);
  if (total % m != 0) return false;
  long long part = total / m;
  std::vector<long long> items = s;
  std::sort(items.rbegin(), items.rend());
  std::vector<long long> bins(m, 0);
  std::function<bool(size_t)> place = [&](size_t i) -> bool {
    if (i == items.size()) return true;
    for (int b = 0; b < m; ++b) {
      if (bins[b] + items[i] > part) continue;
      bins[b] += items[i];
      if (place(i + 1)) return true;
      bins[b] -= items[i];
      if (bins[b] == 0) break;  // later empty bins are symmetric
    }
    return false;
  };
  return place(0);
}

int brute_mis(const SimpleGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  if (n > 20) throw BudgetError("MIS brute force limited to 20 vertices");
  std::map<std::string, int> idx;
  for (int i = 0; i < n; ++i) idx[g.vertices[i]] = i;
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [a, b] : g.edges) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end() || ib == idx.end())
      throw ValidationError("edge references unknown vertex");
    if (ia->second == ib->second)
      throw ValidationError("self-loop in MIS instance");
    adj[ia->second] |= 1u << ib->second;
    adj[ib->second] |= 1u << ia->second;
  }
  std::function<int(std::uint32_t)> mis = [&](std::uint32_t rest) -> int {
    if (rest == 0) return 0;
    // Branch on the remaining vertex of maximum degree.
    int pick = -1, deg = -1;
    for (int v = 0; v < n; ++v) {
      if (!(rest & (1u << v))) continue;
      int d = __builtin_popcount(adj[v] & rest);
      if (d > deg) {
        deg = d;
        pick = v;
      }
    }
    if (deg == 0) return __builtin_popcount(rest);
    int without = mis(rest & ~(1u << pick));
    int with = 1 + mis(rest & ~(adj[pick] | (1u << pick)));
    return std::max(with, without);
  };
  return mis(n == 32 ? ~0u : ((1u << n) - 1));
}

}  // namespace lomuf
