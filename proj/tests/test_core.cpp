#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "lomuf/fixtures.hpp"
#include "lomuf/flow.hpp"

using namespace lomuf;
using namespace lomuf::testing;

TEST_CASE("graph construction rejects malformed input") {
  CHECK_THROWS_AS(CapacitatedGraph(false, {"a"}, {{"a", "a", 1.0}}),
                  ValidationError);
  CHECK_THROWS_AS(
      CapacitatedGraph(false, {"a", "b"}, {{"a", "b", 1.0}, {"b", "a", 2.0}}),
      ValidationError);
  CHECK_THROWS_AS(CapacitatedGraph(false, {"a", "b"}, {{"a", "c", 1.0}}),
                  ValidationError);
  CHECK_THROWS_AS(CapacitatedGraph(false, {"a", "b"}, {{"a", "b", -1.0}}),
                  ValidationError);
  // Twin arcs are fine when directed, duplicate arcs are not.
  CHECK_NOTHROW(
      CapacitatedGraph(true, {"a", "b"}, {{"a", "b", 1.0}, {"b", "a", 2.0}}));
  CHECK_THROWS_AS(
      CapacitatedGraph(true, {"a", "b"}, {{"a", "b", 1.0}, {"a", "b", 2.0}}),
      ValidationError);
  // Zero capacities are legal.
  CHECK_NOTHROW(CapacitatedGraph(false, {"a", "b"}, {{"a", "b", 0.0}}));
}

TEST_CASE("target_demand installs the target") {
  auto g = path_graph({"a", "b", "c"}, 1.0);

  DemandVector d = target_demand(g, sv({{"a", -1}}), "c");
  CHECK(d.at("a") == -1.0);
  CHECK(d.at("c") == 1.0);
  CHECK(d.at("b") == 0.0);

  // Source as target degenerates to the all-zero demand.
  CHECK(target_demand(g, sv({{"a", -1}}), "a").all_zero());

  // The target's own supply is overwritten.
  DemandVector d2 = target_demand(g, sv({{"a", -2}, {"b", -1}}), "b");
  CHECK(d2.at("a") == -2.0);
  CHECK(d2.at("b") == 2.0);

  CHECK_THROWS_AS(target_demand(g, sv({{"a", -1}}), "zz"), ValidationError);
}

TEST_CASE("target_demand sums to exactly zero") {
  auto g = path_graph({"a", "b", "c", "d", "e"}, 1.0);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    SupplyVector s;
    for (const auto& v : g.vertices())
      if (rng() % 2) s.supply[v] = -static_cast<double>(rng() % 100) / 7.0;
    const auto& tgt = g.vertices()[rng() % g.num_vertices()];
    DemandVector d = target_demand(g, s, tgt);
    // The target entry is the exact negation of the remaining entries.
    double sum = 0.0;
    for (const auto& [v, x] : d.demand)
      if (v != tgt) sum += x;
    sum += d.at(tgt);
    CHECK(sum == 0.0);
  }
}

TEST_CASE("cut_edges splits by orientation") {
  auto g = path_graph({"a", "b", "c"}, 1.0);  // oriented a->b, b->c
  auto [in1, out1] = cut_edges(g, {"a"});
  CHECK(in1.empty());
  CHECK(out1 == std::vector<int>{0});
  auto [in2, out2] = cut_edges(g, {"b"});
  CHECK(in2 == std::vector<int>{0});
  CHECK(out2 == std::vector<int>{1});

  CapacitatedGraph tw(true, {"u", "v"}, {{"u", "v", 1.0}, {"v", "u", 1.0}});
  auto [in3, out3] = cut_edges(tw, {"u"});
  CHECK(in3 == std::vector<int>{1});
  CHECK(out3 == std::vector<int>{0});

  CHECK_THROWS_AS(cut_edges(g, {}), ValidationError);
  CHECK_THROWS_AS(cut_edges(g, {"a", "b", "c"}), ValidationError);
}

TEST_CASE("cut_balance matches the demand in the cut") {
  auto g = path_graph({"a", "b", "c"}, 1.0);
  Flow f = Flow::zero(g);
  f.value << 1.0, 1.0;  // one unit a->b->c
  DemandVector d = dv({{"a", -1}, {"c", 1}});
  CHECK(cut_balance(g, f, {"a"}) == doctest::Approx(-1.0));
  CHECK(cut_balance(g, f, {"a", "b"}) == doctest::Approx(-1.0));
  CHECK(check_cut_balance(g, f, d, {"a"}));
  CHECK(check_cut_balance(g, f, d, {"a", "b"}));

  Flow zero = Flow::zero(g);
  CHECK(cut_balance(g, zero, {"b"}) == 0.0);
  CHECK(check_cut_balance(g, zero, DemandVector{}, {"b"}));
}

TEST_CASE("validate_multiflow verdicts") {
  auto g = path_graph({"a", "b", "c"}, 1.0);
  DemandVector d = dv({{"a", -1}, {"c", 1}});
  Flow f = Flow::zero(g);
  f.value << 1.0, 1.0;

  CHECK(validate_multiflow(g, {d}, MultiFlow{{f}}).valid);

  // Two unit commodities overload the shared capacity.
  auto rep = validate_multiflow(g, {d, d}, MultiFlow{{f, f}});
  CHECK_FALSE(rep.valid);

  // Conservation broken at b by 0.5.
  Flow bad = f;
  bad.value[1] = 0.5;
  auto rep2 = validate_multiflow(g, {d}, MultiFlow{{bad}});
  CHECK_FALSE(rep2.valid);
  bool names_b = false;
  for (const auto& v : rep2.violations)
    if (v.find("'b'") != std::string::npos) names_b = true;
  CHECK(names_b);

  CHECK_THROWS_AS(validate_multiflow(g, {d}, MultiFlow{{f, f}}),
                  ValidationError);
}

TEST_CASE("decompose_single_target on the star") {
  CapacitatedGraph g(false, {"r", "u1", "u2"},
                     {{"u1", "r", 1.0}, {"u2", "r", 1.0}});
  DemandVector d = dv({{"u1", -1}, {"u2", -1}, {"r", 2}});
  Flow f = Flow::zero(g);
  f.value << 1.0, 1.0;
  auto parts = decompose_single_target(g, f, d);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == "u1");
  CHECK(parts[0].second.value[0] == doctest::Approx(1.0));
  CHECK(parts[0].second.value[1] == doctest::Approx(0.0));
  CHECK(parts[1].first == "u2");
  CHECK(parts[1].second.value[1] == doctest::Approx(1.0));
}

TEST_CASE("decompose_single_target single source returns the flow") {
  auto g = path_graph({"a", "b", "c"}, 1.0);
  DemandVector d = dv({{"a", -1}, {"c", 1}});
  Flow f = Flow::zero(g);
  f.value << 1.0, 1.0;
  auto parts = decompose_single_target(g, f, d);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].first == "a");
  CHECK((parts[0].second.value - f.value).cwiseAbs().maxCoeff() <= 1e-12);

  CHECK_THROWS_AS(decompose_single_target(g, f, dv({{"a", -1}, {"c", 0.5},
                                                    {"b", 0.5}})),
                  ValidationError);
  Flow wrong = Flow::zero(g);
  CHECK_THROWS_AS(decompose_single_target(g, wrong, d), ValidationError);
}

TEST_CASE("decomposition identities on random trees") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Instance inst = gen_random_tree(8, 1, 3, 1, 9, seed);
    const auto& g = inst.graph;
    SupplyVector s = inst.commodities[0].supply;
    if (s.all_zero()) continue;
    const std::string target = g.sorted_vertices()[seed % g.num_vertices()];
    DemandVector d = target_demand(g, s, target);
    Flow f = tree_flow(g, d);
    if (d.all_zero()) continue;

    auto parts = decompose_single_target(g, f, d);
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(g.num_edges());
    Eigen::VectorXd mag = Eigen::VectorXd::Zero(g.num_edges());
    for (const auto& [src, fs] : parts) {
      sum += fs.value;
      mag += fs.value.cwiseAbs();
      // Each part satisfies its canonical per-source demand.
      DemandVector want =
          dv({});
      want.demand[src] = d.at(src);
      want.demand[target] = -d.at(src);
      for (int v = 0; v < g.num_vertices(); ++v)
        CHECK(net_at(g, fs, v) ==
              doctest::Approx(want.at(g.vertices()[v])).epsilon(1e-9));
    }
    CHECK((sum - f.value).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK((mag - f.value.cwiseAbs()).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("cancel_circulations removes cycles and keeps demands") {
  CapacitatedGraph g(false, {"a", "b", "c", "d"},
                     {{"a", "b", 2.0},
                      {"b", "c", 2.0},
                      {"c", "d", 2.0},
                      {"d", "a", 2.0}});
  // One unit a->b->c plus a full circulation around the cycle.
  Flow f = Flow::zero(g);
  f.value << 2.0, 2.0, 1.0, 1.0;  // a->b: 1+1, b->c: 1+1, c->d: 1, d->a: 1
  Flow clean = cancel_circulations(g, f);
  for (int v = 0; v < g.num_vertices(); ++v)
    CHECK(net_at(g, clean, v) == doctest::Approx(net_at(g, f, v)));
  // The circulation is gone: d->a and c->d empty.
  CHECK(clean.value[2] == 0.0);
  CHECK(clean.value[3] == 0.0);
  CHECK(clean.value.cwiseAbs().sum() <= f.value.cwiseAbs().sum());
}

TEST_CASE("cut balance invariant on random tree flows") {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Instance inst = gen_random_tree(7, 1, 4, 1, 9, seed);
    const auto& g = inst.graph;
    SupplyVector s = inst.commodities[0].supply;
    if (s.all_zero()) continue;
    DemandVector d = target_demand(g, s, g.sorted_vertices()[0]);
    Flow f = tree_flow(g, d);
    for (int trial = 0; trial < 100; ++trial) {
      std::set<std::string> U;
      for (const auto& v : g.vertices())
        if (rng() % 2) U.insert(v);
      if (U.empty() || static_cast<int>(U.size()) == g.num_vertices())
        continue;
      CHECK(check_cut_balance(g, f, d, U));
    }
  }
}
