#include "lomuf/io.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace lomuf {

namespace {

using json = nlohmann::ordered_json;

constexpr double kZeroEps = 1e-12;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

void expect_keys(const json& obj, const std::string& where,
                 const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      fail(where, "unknown key '" + it.key() + "'");
}

const json& need(const json& obj, const std::string& where,
                 const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, "missing key '" + key + "'");
  return *it;
}

double need_number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  double x = v.get<double>();
  if (!std::isfinite(x)) fail(where, "non-finite number");
  return x;
}

std::string need_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

}  // namespace

std::vector<SupplyVector> Instance::supplies() const {
  std::vector<SupplyVector> out;
  out.reserve(commodities.size());
  for (const Commodity& c : commodities) out.push_back(c.supply);
  return out;
}

std::vector<std::string> Instance::commodity_names() const {
  std::vector<std::string> out;
  out.reserve(commodities.size());
  for (const Commodity& c : commodities) out.push_back(c.name);
  return out;
}

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");
  expect_keys(doc, "document", {"graph", "commodities", "candidates", "meta"});

  const json& jg = need(doc, "document", "graph");
  if (!jg.is_object()) fail("graph", "expected an object");
  expect_keys(jg, "graph", {"directed", "vertices", "edges"});
  const json& jdir = need(jg, "graph", "directed");
  if (!jdir.is_boolean()) fail("graph.directed", "expected a boolean");
  const json& jverts = need(jg, "graph", "vertices");
  if (!jverts.is_array()) fail("graph.vertices", "expected an array");
  std::vector<std::string> vertices;
  for (const json& v : jverts)
    vertices.push_back(need_string(v, "graph.vertices[]"));
  const json& jedges = need(jg, "graph", "edges");
  if (!jedges.is_array()) fail("graph.edges", "expected an array");
  std::vector<Edge> edges;
  for (size_t i = 0; i < jedges.size(); ++i) {
    std::string where = "graph.edges[" + std::to_string(i) + "]";
    const json& je = jedges[i];
    if (!je.is_object()) fail(where, "expected an object");
    expect_keys(je, where, {"u", "v", "cap"});
    edges.push_back({need_string(need(je, where, "u"), where + ".u"),
                     need_string(need(je, where, "v"), where + ".v"),
                     need_number(need(je, where, "cap"), where + ".cap")});
  }
  CapacitatedGraph graph(jdir.get<bool>(), std::move(vertices),
                         std::move(edges));

  const json& jcs = need(doc, "document", "commodities");
  if (!jcs.is_array()) fail("commodities", "expected an array");
  std::vector<Commodity> commodities;
  std::set<std::string> names;
  for (size_t i = 0; i < jcs.size(); ++i) {
    std::string where = "commodities[" + std::to_string(i) + "]";
    const json& jc = jcs[i];
    if (!jc.is_object()) fail(where, "expected an object");
    expect_keys(jc, where, {"name", "supply"});
    Commodity c;
    c.name = need_string(need(jc, where, "name"), where + ".name");
    if (!names.insert(c.name).second)
      fail(where, "duplicate commodity name '" + c.name + "'");
    const json& js = need(jc, where, "supply");
    if (!js.is_object()) fail(where + ".supply", "expected an object");
    for (auto it = js.begin(); it != js.end(); ++it) {
      double val = need_number(it.value(),
                               where + ".supply." + it.key());
      if (!graph.has_vertex(it.key()))
        fail(where + ".supply", "unknown vertex '" + it.key() + "'");
      if (val > 0.0)
        fail(where, "commodity '" + c.name + "' has positive supply " +
                        std::to_string(val) + " at vertex '" + it.key() +
                        "'");
      if (val != 0.0) c.supply.supply[it.key()] = val;
    }
    commodities.push_back(std::move(c));
  }

  Instance inst{std::move(graph), std::move(commodities), std::nullopt,
                json::object()};

  if (auto it = doc.find("candidates"); it != doc.end()) {
    if (!it->is_array()) fail("candidates", "expected an array");
    std::vector<std::string> cands;
    for (const json& v : *it) {
      std::string id = need_string(v, "candidates[]");
      if (!inst.graph.has_vertex(id))
        fail("candidates", "unknown vertex '" + id + "'");
      cands.push_back(id);
    }
    if (cands.empty()) fail("candidates", "must not be empty");
    std::sort(cands.begin(), cands.end());
    if (std::adjacent_find(cands.begin(), cands.end()) != cands.end())
      fail("candidates", "duplicate entries");
    inst.candidates = std::move(cands);
  }
  if (auto it = doc.find("meta"); it != doc.end()) {
    if (!it->is_object()) fail("meta", "expected an object");
    inst.meta = *it;
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  json doc;
  json jg;
  jg["directed"] = inst.graph.directed();
  jg["vertices"] = inst.graph.vertices();
  json jedges = json::array();
  for (const Edge& e : inst.graph.edges())
    jedges.push_back({{"u", e.u}, {"v", e.v}, {"cap", e.cap}});
  jg["edges"] = std::move(jedges);
  doc["graph"] = std::move(jg);
  json jcs = json::array();
  for (const Commodity& c : inst.commodities) {
    json js = json::object();
    for (const auto& [v, val] : c.supply.supply)
      if (val != 0.0) js[v] = val;
    jcs.push_back({{"name", c.name}, {"supply", std::move(js)}});
  }
  doc["commodities"] = std::move(jcs);
  if (inst.candidates) {
    auto cands = *inst.candidates;
    std::sort(cands.begin(), cands.end());
    doc["candidates"] = cands;
  }
  if (!inst.meta.empty()) doc["meta"] = inst.meta;
  return doc.dump(2) + "\n";
}

namespace {

json lambda_to_json(const Lambda& l) {
  if (l.is_unbounded()) return json("unbounded");
  return json(l.value());
}

Lambda lambda_from_json(const json& v, const std::string& where) {
  if (v.is_string()) {
    if (v.get<std::string>() != "unbounded")
      fail(where, "expected a number or \"unbounded\"");
    return Lambda::unbounded();
  }
  return Lambda::finite(need_number(v, where));
}

}  // namespace

std::string serialize_solution(const Instance& inst, const Solution& sol) {
  json doc;
  json jt = json::object();
  for (size_t i = 0; i < sol.commodities.size(); ++i) {
    if (sol.targets[i])
      jt[sol.commodities[i]] = *sol.targets[i];
    else
      jt[sol.commodities[i]] = nullptr;
  }
  doc["targets"] = std::move(jt);
  doc["lambda"] = lambda_to_json(sol.lambda);
  doc["objective"] = lambda_to_json(sol.objective);
  if (sol.lambdas) {
    json jl = json::object();
    for (size_t i = 0; i < sol.commodities.size(); ++i)
      jl[sol.commodities[i]] = (*sol.lambdas)[i];
    doc["lambdas"] = std::move(jl);
  }
  json jf = json::array();
  for (size_t i = 0; i < sol.flows.flows.size(); ++i) {
    const Flow& f = sol.flows.flows[i];
    for (int e = 0; e < inst.graph.num_edges(); ++e) {
      if (std::abs(f.value[e]) <= kZeroEps) continue;
      const Edge& ed = inst.graph.edge(e);
      jf.push_back({{"commodity", sol.commodities[i]},
                    {"edge", {{"u", ed.u}, {"v", ed.v}}},
                    {"value", f.value[e]}});
    }
  }
  doc["flows"] = std::move(jf);
  doc["solver"] = sol.solver;
  doc["tolerance"] = sol.tolerance;
  return doc.dump(2) + "\n";
}

Solution parse_solution(const Instance& inst, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("solution", "expected a JSON object");
  expect_keys(doc, "solution",
              {"targets", "lambda", "objective", "lambdas", "flows", "solver",
               "tolerance"});

  Solution sol;
  sol.commodities = inst.commodity_names();
  std::map<std::string, int> cindex;
  for (size_t i = 0; i < sol.commodities.size(); ++i)
    cindex[sol.commodities[i]] = static_cast<int>(i);
  sol.targets.assign(sol.commodities.size(), std::nullopt);

  const json& jt = need(doc, "solution", "targets");
  if (!jt.is_object()) fail("targets", "expected an object");
  for (auto it = jt.begin(); it != jt.end(); ++it) {
    auto ci = cindex.find(it.key());
    if (ci == cindex.end())
      fail("targets", "unknown commodity '" + it.key() + "'");
    if (it.value().is_null()) continue;
    std::string t = need_string(it.value(), "targets." + it.key());
    if (!inst.graph.has_vertex(t))
      fail("targets", "unknown vertex '" + t + "'");
    sol.targets[ci->second] = t;
  }

  sol.lambda = lambda_from_json(need(doc, "solution", "lambda"), "lambda");
  sol.objective =
      lambda_from_json(need(doc, "solution", "objective"), "objective");
  if (auto it = doc.find("lambdas"); it != doc.end()) {
    if (!it->is_object()) fail("lambdas", "expected an object");
    std::vector<double> ls(sol.commodities.size(), 0.0);
    for (auto jt2 = it->begin(); jt2 != it->end(); ++jt2) {
      auto ci = cindex.find(jt2.key());
      if (ci == cindex.end())
        fail("lambdas", "unknown commodity '" + jt2.key() + "'");
      ls[ci->second] = need_number(jt2.value(), "lambdas." + jt2.key());
    }
    sol.lambdas = std::move(ls);
  }

  for (size_t i = 0; i < sol.commodities.size(); ++i)
    sol.flows.flows.push_back(Flow::zero(inst.graph));
  const json& jf = need(doc, "solution", "flows");
  if (!jf.is_array()) fail("flows", "expected an array");
  for (size_t i = 0; i < jf.size(); ++i) {
    std::string where = "flows[" + std::to_string(i) + "]";
    const json& e = jf[i];
    if (!e.is_object()) fail(where, "expected an object");
    expect_keys(e, where, {"commodity", "edge", "value"});
    std::string cname =
        need_string(need(e, where, "commodity"), where + ".commodity");
    auto ci = cindex.find(cname);
    if (ci == cindex.end())
      fail(where, "unknown commodity '" + cname + "'");
    const json& je = need(e, where, "edge");
    if (!je.is_object()) fail(where + ".edge", "expected an object");
    expect_keys(je, where + ".edge", {"u", "v"});
    std::string u = need_string(need(je, where + ".edge", "u"), where + ".u");
    std::string v = need_string(need(je, where + ".edge", "v"), where + ".v");
    int idx = -1;
    for (int q = 0; q < inst.graph.num_edges(); ++q)
      if (inst.graph.edge(q).u == u && inst.graph.edge(q).v == v) idx = q;
    if (idx < 0)
      fail(where, "no edge (" + u + "," + v + ") in reference orientation");
    sol.flows.flows[ci->second].value[idx] +=
        need_number(need(e, where, "value"), where + ".value");
  }

  sol.solver = need_string(need(doc, "solution", "solver"), "solver");
  sol.tolerance =
      need_number(need(doc, "solution", "tolerance"), "tolerance");
  return sol;
}

}  // namespace lomuf
