#include "lomuf/fixtures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace lomuf {

namespace {

using json = nlohmann::ordered_json;

void validate_3dm(const ThreeDM& dm) {
  size_t k = dm.x.size();
  if (dm.y.size() != k || dm.z.size() != k)
    throw ValidationError("3-DM sets must have equal sizes");
  if (k == 0) throw ValidationError("3-DM instance is empty");
  std::set<std::string> all;
  for (const auto* side : {&dm.x, &dm.y, &dm.z})
    for (const auto& e : *side)
      if (!all.insert(e).second)
        throw ValidationError("3-DM element '" + e + "' repeated");
  std::set<std::string> covered;
  std::set<std::array<std::string, 3>> uniq;
  for (const auto& t : dm.triples) {
    auto in = [](const std::vector<std::string>& v, const std::string& s) {
      return std::find(v.begin(), v.end(), s) != v.end();
    };
    if (!in(dm.x, t[0]) || !in(dm.y, t[1]) || !in(dm.z, t[2]))
      throw ValidationError("triple (" + t[0] + "," + t[1] + "," + t[2] +
                            ") leaves its sets");
    if (!uniq.insert(t).second)
      throw ValidationError("duplicate triple (" + t[0] + "," + t[1] + "," +
                            t[2] + ")");
    for (const auto& e : t) covered.insert(e);
  }
  if (covered != all)
    throw ValidationError("triples do not cover every element");
}

std::string triple_name(size_t j) { return "m" + std::to_string(j + 1); }

json dm_meta(const char* construction, const ThreeDM& dm) {
  json meta;
  meta["construction"] = construction;
  if (dm.triples.size() <= 20)
    meta["matching_exists"] = brute_perfect_matching(dm);
  return meta;
}

json partition_meta(const char* construction,
                    const std::vector<long long>& s, int m, double b) {
  json meta;
  meta["construction"] = construction;
  meta["B"] = b;
  if (s.size() <= 12) meta["equipartition_exists"] = brute_equipartition(s, m);
  return meta;
}

// Multiplicity |W_e| = number of triples containing the element.
std::map<std::string, int> coverage(const ThreeDM& dm) {
  std::map<std::string, int> cov;
  for (const auto& t : dm.triples)
    for (const auto& e : t) ++cov[e];
  return cov;
}

}  // namespace

Instance gen_3dm_lomuf(const ThreeDM& dm) {
  validate_3dm(dm);
  const size_t k = dm.x.size(), l = dm.triples.size();
  if (l < k)
    throw ValidationError("need |W| >= |X| for the supply family");
  auto cov = coverage(dm);

  std::vector<std::string> vertices = {"tX", "tX'", "tY", "tY'", "tZ", "tZ'"};
  for (const auto* side : {&dm.x, &dm.y, &dm.z})
    for (const auto& e : *side) vertices.push_back(e);
  for (size_t j = 0; j < l; ++j) vertices.push_back(triple_name(j));

  std::vector<Edge> edges;
  auto add_side = [&](const std::vector<std::string>& side,
                      const std::string& t, const std::string& tp) {
    for (const auto& e : side) {
      edges.push_back({t, e, 1.0});
      edges.push_back({tp, e, static_cast<double>(cov[e] - 1)});
    }
  };
  add_side(dm.x, "tX", "tX'");
  add_side(dm.y, "tY", "tY'");
  add_side(dm.z, "tZ", "tZ'");
  for (size_t j = 0; j < l; ++j)
    for (const auto& e : dm.triples[j])
      edges.push_back({e, triple_name(j), 1.0});

  std::vector<Commodity> commodities;
  for (size_t i = 0; i < l; ++i) {
    Commodity c;
    c.name = "d" + std::to_string(i + 1);
    if (i < k)
      c.supply.supply = {{"tX", -1.0}, {"tY", -1.0}, {"tZ", -1.0}};
    else
      c.supply.supply = {{"tX'", -1.0}, {"tY'", -1.0}, {"tZ'", -1.0}};
    commodities.push_back(std::move(c));
  }

  return Instance{CapacitatedGraph(false, std::move(vertices),
                                   std::move(edges)),
                  std::move(commodities), std::nullopt,
                  dm_meta("3dm-lomuf", dm)};
}

Instance gen_3dm_dilomuf(const ThreeDM& dm) {
  validate_3dm(dm);
  const size_t k = dm.x.size(), l = dm.triples.size();

  std::vector<std::string> vertices = {"tX", "tY", "tZ"};
  for (const auto* side : {&dm.x, &dm.y, &dm.z})
    for (const auto& e : *side) vertices.push_back(e);
  for (size_t j = 0; j < l; ++j) vertices.push_back(triple_name(j));

  std::vector<Edge> arcs;
  auto add_side = [&](const std::vector<std::string>& side,
                      const std::string& t) {
    for (const auto& e : side) arcs.push_back({t, e, 1.0});
  };
  add_side(dm.x, "tX");
  add_side(dm.y, "tY");
  add_side(dm.z, "tZ");
  for (size_t j = 0; j < l; ++j)
    for (const auto& e : dm.triples[j])
      arcs.push_back({e, triple_name(j), 1.0});

  std::vector<Commodity> commodities;
  for (size_t i = 0; i < k; ++i) {
    Commodity c;
    c.name = "d" + std::to_string(i + 1);
    c.supply.supply = {{"tX", -1.0}, {"tY", -1.0}, {"tZ", -1.0}};
    commodities.push_back(std::move(c));
  }

  return Instance{CapacitatedGraph(true, std::move(vertices),
                                   std::move(arcs)),
                  std::move(commodities), std::nullopt,
                  dm_meta("3dm-dilomuf", dm)};
}

Instance gen_3partition_dipath(const std::vector<long long>& s, int m) {
  if (m <= 0) throw ValidationError("m must be positive");
  if (static_cast<int>(s.size()) != 3 * m)
    throw ValidationError("need |S| = 3m");
  for (long long v : s)
    if (v <= 0) throw ValidationError("3-partition entries must be positive");
  double b = static_cast<double>(std::accumulate(s.begin(), s.end(), 0LL)) /
             static_cast<double>(m);

  std::vector<std::string> vertices;
  for (int i = 1; i <= m; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<Edge> arcs;
  for (int i = 0; i + 1 < m; ++i) {
    arcs.push_back({vertices[i], vertices[i + 1], m * b});
    arcs.push_back({vertices[i + 1], vertices[i], m * b});
  }

  std::vector<Commodity> commodities;
  for (int i = 0; i < 3 * m; ++i) {
    Commodity c;
    c.name = "s" + std::to_string(i + 1);
    c.supply.supply[vertices.front()] = -static_cast<double>(s[i]);
    c.supply.supply[vertices.back()] = -static_cast<double>(s[i]);
    commodities.push_back(std::move(c));
  }
  for (int j = 1; j < m; ++j) {
    Commodity cp;
    cp.name = "p" + std::to_string(j);
    cp.supply.supply[vertices[j - 1]] = -(m * b + 1.0);
    cp.supply.supply[vertices[j]] = -(m - j) * b;
    commodities.push_back(std::move(cp));
  }
  for (int j = 1; j < m; ++j) {
    Commodity cq;
    cq.name = "q" + std::to_string(j);
    cq.supply.supply[vertices[j - 1]] = -j * b;
    cq.supply.supply[vertices[j]] = -(m * b + 1.0);
    commodities.push_back(std::move(cq));
  }

  return Instance{CapacitatedGraph(true, std::move(vertices),
                                   std::move(arcs)),
                  std::move(commodities), std::nullopt,
                  partition_meta("3part-dipath", s, m, b)};
}

Instance gen_3dm_restricted_tree(const ThreeDM& dm) {
  validate_3dm(dm);
  const size_t k = dm.x.size(), l = dm.triples.size();
  if (l < k) throw ValidationError("need |W| >= |X|");
  auto cov = coverage(dm);
  for (const auto& [e, c] : cov)
    if (c > 3)
      throw ValidationError("instance is not 3-covered: '" + e + "' lies in " +
                            std::to_string(c) + " triples");

  std::vector<std::string> vertices;
  std::vector<std::string> leaves;
  for (size_t j = 0; j < l; ++j) leaves.push_back(triple_name(j));
  vertices = leaves;
  vertices.push_back("r");
  std::vector<Edge> edges;
  for (const auto& leaf : leaves) edges.push_back({"r", leaf, 6.0});

  std::vector<Commodity> commodities;
  for (const auto* side : {&dm.x, &dm.y, &dm.z}) {
    for (const auto& u : *side) {
      Commodity c;
      c.name = u;
      for (size_t j = 0; j < l; ++j) {
        const auto& t = dm.triples[j];
        if (t[0] == u || t[1] == u || t[2] == u)
          c.supply.supply[leaves[j]] = -1.0;
      }
      double at_root = cov[u] - 3.0;
      if (at_root != 0.0) c.supply.supply["r"] = at_root;
      commodities.push_back(std::move(c));
    }
  }
  for (size_t i = 0; i < l - k; ++i) {
    Commodity c;
    c.name = "f" + std::to_string(i + 1);
    c.supply.supply["r"] = -3.0;
    commodities.push_back(std::move(c));
  }

  return Instance{CapacitatedGraph(false, std::move(vertices),
                                   std::move(edges)),
                  std::move(commodities), leaves,
                  dm_meta("3dm-rtree", dm)};
}

Instance gen_3partition_star(const std::vector<long long>& s, int m) {
  if (m <= 0) throw ValidationError("m must be positive");
  if (static_cast<int>(s.size()) != 3 * m)
    throw ValidationError("need |S| = 3m");
  for (long long v : s)
    if (v <= 0) throw ValidationError("3-partition entries must be positive");
  double b = static_cast<double>(std::accumulate(s.begin(), s.end(), 0LL)) /
             static_cast<double>(m);

  std::vector<std::string> leaves;
  for (int i = 1; i <= m; ++i) leaves.push_back("u" + std::to_string(i));
  std::vector<std::string> vertices = leaves;
  vertices.push_back("r");
  std::vector<Edge> edges;
  for (const auto& leaf : leaves) edges.push_back({"r", leaf, b});

  std::vector<Commodity> commodities;
  for (int i = 0; i < 3 * m; ++i) {
    Commodity c;
    c.name = "s" + std::to_string(i + 1);
    c.supply.supply["r"] = -static_cast<double>(s[i]);
    commodities.push_back(std::move(c));
  }

  return Instance{CapacitatedGraph(false, std::move(vertices),
                                   std::move(edges)),
                  std::move(commodities), leaves,
                  partition_meta("3part-star", s, m, b)};
}

Instance gen_mis_maxf(const SimpleGraph& g) {
  std::set<std::string> vset(g.vertices.begin(), g.vertices.end());
  if (vset.size() != g.vertices.size())
    throw ValidationError("duplicate vertex in MIS instance");
  auto pair_name = [](const std::string& a, const std::string& b) {
    return a < b ? a + "~" + b : b + "~" + a;
  };

  std::vector<std::string> vertices = g.vertices;
  std::vector<Edge> edges;
  std::set<std::string> eseen;
  for (const auto& [a, b] : g.edges) {
    if (!vset.count(a) || !vset.count(b))
      throw ValidationError("edge references unknown vertex");
    if (a == b) throw ValidationError("self-loop in MIS instance");
    std::string base = pair_name(a, b);
    if (!eseen.insert(base).second)
      throw ValidationError("duplicate edge " + base);
    std::string ev = "e~" + base;
    std::string wv = "w~" + base;
    vertices.push_back(ev);
    vertices.push_back(wv);
    edges.push_back({a, ev, 1.0});
    edges.push_back({b, ev, 1.0});
    edges.push_back({ev, wv, 1.0});
  }

  std::vector<Commodity> commodities;
  for (const auto& v : g.vertices) {
    Commodity c;
    c.name = "d~" + v;
    c.supply.supply[v] = -1.0;
    for (const auto& [a, b] : g.edges)
      if (a == v || b == v) c.supply.supply["w~" + pair_name(a, b)] = -1.0;
    commodities.push_back(std::move(c));
  }

  json meta;
  meta["construction"] = "mis-maxf";
  if (g.vertices.size() <= 20) meta["mis"] = brute_mis(g);
  return Instance{CapacitatedGraph(false, std::move(vertices),
                                   std::move(edges)),
                  std::move(commodities), std::nullopt, std::move(meta)};
}

namespace {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  // Deterministic across platforms: mt19937_64 output is pinned by the
  // standard; plain modulo keeps sampling reproducible elsewhere.
  int below(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }
  double unit() { return (eng() >> 11) * (1.0 / 9007199254740992.0); }
};

std::string vname(int i) {
  std::string s = std::to_string(i + 1);
  if (s.size() < 2) s = "0" + s;
  return "v" + s;
}

std::vector<Commodity> random_supplies(Rng& rng, int n, int k,
                                       int max_sources) {
  std::vector<Commodity> cs;
  for (int i = 0; i < k; ++i) {
    Commodity c;
    c.name = "c" + std::to_string(i + 1);
    int nsrc = std::min(n, 1 + rng.below(std::max(1, max_sources)));
    std::set<int> picked;
    while (static_cast<int>(picked.size()) < nsrc)
      picked.insert(rng.below(n));
    for (int v : picked)
      c.supply.supply[vname(v)] = -static_cast<double>(1 + rng.below(5));
    cs.push_back(std::move(c));
  }
  return cs;
}

json random_meta(const char* generator, std::uint64_t seed) {
  json meta;
  meta["generator"] = generator;
  meta["prng"] = "mt19937_64/v1";
  meta["seed"] = seed;
  return meta;
}

// Random attachment tree over vertex indices 0..n-1.
std::vector<std::pair<int, int>> random_tree_edges(Rng& rng, int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i < n; ++i) es.emplace_back(rng.below(i), i);
  return es;
}

}  // namespace

Instance gen_random_tree(int n, int k, int max_sources, int cap_lo,
                         int cap_hi, std::uint64_t seed) {
  if (n <= 0 || k < 0 || cap_lo < 0 || cap_hi < cap_lo)
    throw ValidationError("bad random-tree parameters");
  Rng rng(seed);
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back(vname(i));
  std::vector<Edge> edges;
  for (auto [a, b] : random_tree_edges(rng, n))
    edges.push_back({vname(a), vname(b),
                     static_cast<double>(cap_lo + rng.below(cap_hi - cap_lo + 1))});
  auto commodities = random_supplies(rng, n, k, max_sources);
  return Instance{CapacitatedGraph(false, std::move(vertices),
                                   std::move(edges)),
                  std::move(commodities), std::nullopt,
                  random_meta("random-tree", seed)};
}

Instance gen_random_graph(int n, double p, int k, int max_sources,
                          int cap_lo, int cap_hi, std::uint64_t seed) {
  if (n <= 0 || k < 0 || cap_lo < 0 || cap_hi < cap_lo || p < 0 || p > 1)
    throw ValidationError("bad random-graph parameters");
  Rng rng(seed);
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back(vname(i));
  std::set<std::pair<int, int>> have;
  std::vector<Edge> edges;
  auto add = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    if (!have.emplace(a, b).second) return;
    edges.push_back({vname(a), vname(b),
                     static_cast<double>(cap_lo + rng.below(cap_hi - cap_lo + 1))});
  };
  for (auto [a, b] : random_tree_edges(rng, n)) add(a, b);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool keep = rng.unit() < p;  // draw even for tree edges: stable stream
      if (keep) add(a, b);
    }
  auto commodities = random_supplies(rng, n, k, max_sources);
  return Instance{CapacitatedGraph(false, std::move(vertices),
                                   std::move(edges)),
                  std::move(commodities), std::nullopt,
                  random_meta("random-graph", seed)};
}

Instance gen_random_symmetric_digraph(int n, double extra_p, int k,
                                      int max_sources, int cap,
                                      std::uint64_t seed) {
  if (n <= 0 || k < 0 || cap < 0 || extra_p < 0 || extra_p > 1)
    throw ValidationError("bad symmetric-digraph parameters");
  Rng rng(seed);
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back(vname(i));
  std::set<std::pair<int, int>> have;
  std::vector<Edge> arcs;
  auto add = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    if (!have.emplace(a, b).second) return;
    arcs.push_back({vname(a), vname(b), static_cast<double>(cap)});
    arcs.push_back({vname(b), vname(a), static_cast<double>(cap)});
  };
  for (auto [a, b] : random_tree_edges(rng, n)) add(a, b);
  if (extra_p > 0)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng.unit() < extra_p) add(a, b);
  auto commodities = random_supplies(rng, n, k, max_sources);
  return Instance{CapacitatedGraph(true, std::move(vertices),
                                   std::move(arcs)),
                  std::move(commodities), std::nullopt,
                  random_meta("random-sym-digraph", seed)};
}

}  // namespace lomuf
