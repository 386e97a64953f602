#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "lomuf/fixtures.hpp"
#include "lomuf/mcf.hpp"

using namespace lomuf;
using namespace lomuf::testing;

TEST_CASE("concurrent flow on the unit path") {
  auto g = path_graph({"a", "b", "c"}, 1.0);
  DemandVector d = dv({{"a", -1}, {"c", 1}});

  auto one = solve_concurrent(g, {d});
  REQUIRE_FALSE(one.lambda.is_unbounded());
  CHECK(one.lambda.value() == doctest::Approx(1.0));
  CHECK(validate_multiflow(g, {scale(d, one.lambda.value())}, one.witness)
            .valid);

  // Two copies split the shared capacity.
  auto two = solve_concurrent(g, {d, d});
  CHECK(two.lambda.value() == doctest::Approx(0.5));
  CHECK(validate_multiflow(
            g, {scale(d, two.lambda.value()), scale(d, two.lambda.value())},
            two.witness)
            .valid);
}

TEST_CASE("all-zero demands are unbounded") {
  auto g = path_graph({"a", "b"}, 1.0);
  CHECK(solve_concurrent(g, {DemandVector{}}).lambda.is_unbounded());
  CHECK(solve_concurrent(g, {}).lambda.is_unbounded());
}

TEST_CASE("disconnected demand pins lambda to zero") {
  CapacitatedGraph g(false, {"a", "b", "c"}, {{"a", "b", 1.0}});
  auto r = solve_concurrent(g, {dv({{"a", -1}, {"c", 1}})});
  REQUIRE_FALSE(r.lambda.is_unbounded());
  CHECK(r.lambda.value() == 0.0);
}

TEST_CASE("directed demand against the arc direction is infeasible") {
  CapacitatedGraph g(true, {"a", "b"}, {{"a", "b", 1.0}});
  CHECK(solve_concurrent(g, {dv({{"a", -1}, {"b", 1}})}).lambda.value() ==
        doctest::Approx(1.0));
  CHECK(solve_concurrent(g, {dv({{"b", -1}, {"a", 1}})}).lambda.value() ==
        doctest::Approx(0.0));
}

TEST_CASE("single-commodity lambda matches the cut oracle") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Instance inst = seed % 2 ? gen_random_graph(6, 0.5, 1, 3, 1, 9, seed)
                             : gen_random_tree(7, 1, 3, 1, 9, seed);
    const auto& g = inst.graph;
    SupplyVector s = inst.commodities[0].supply;
    const auto verts = g.sorted_vertices();
    const std::string tgt = verts[rng() % verts.size()];
    DemandVector d = target_demand(g, s, tgt);
    Lambda got = solve_concurrent(g, {d}).lambda;
    Lambda want = cut_oracle_lambda(g, d);
    if (want.is_unbounded()) {
      CHECK(got.is_unbounded());
    } else {
      REQUIRE_FALSE(got.is_unbounded());
      CHECK(got.value() == doctest::Approx(want.value()).epsilon(1e-6));
    }
  }
}

TEST_CASE("single-commodity lambda matches the cut oracle on digraphs") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Instance inst = gen_random_symmetric_digraph(5, 0.3, 1, 3, 4, seed);
    const auto& g = inst.graph;
    SupplyVector s = inst.commodities[0].supply;
    const std::string tgt = g.sorted_vertices()[seed % g.num_vertices()];
    DemandVector d = target_demand(g, s, tgt);
    Lambda got = solve_concurrent(g, {d}).lambda;
    Lambda want = cut_oracle_lambda(g, d);
    if (want.is_unbounded()) {
      CHECK(got.is_unbounded());
    } else {
      CHECK(got.value() == doctest::Approx(want.value()).epsilon(1e-6));
    }
  }
}

TEST_CASE("witness validity and scaling laws on random instances") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    Instance inst = gen_random_graph(6, 0.4, 2, 3, 1, 9, seed);
    const auto& g = inst.graph;
    std::vector<DemandVector> demands;
    auto verts = g.sorted_vertices();
    for (size_t i = 0; i < inst.commodities.size(); ++i)
      demands.push_back(target_demand(
          g, inst.commodities[i].supply, verts[(seed + i) % verts.size()]));

    auto base = solve_concurrent(g, demands);
    if (base.lambda.is_unbounded()) continue;
    double l0 = base.lambda.value();

    std::vector<DemandVector> scaled;
    for (const auto& d : demands) scaled.push_back(scale(d, l0));
    CHECK(validate_multiflow(g, scaled, base.witness).valid);

    // Capacity scaling: caps * c multiplies lambda by c.
    for (double c : {0.5, 3.0}) {
      std::vector<Edge> edges = g.edges();
      for (Edge& e : edges) e.cap *= c;
      CapacitatedGraph gc(g.directed(), g.vertices(), edges);
      double lc = solve_concurrent(gc, demands).lambda.value();
      CHECK(lc == doctest::Approx(c * l0).epsilon(1e-6));
    }

    // Supply scaling: demands * c divides lambda by c.
    for (double c : {2.0}) {
      std::vector<DemandVector> dc;
      for (const auto& d : demands) dc.push_back(scale(d, c));
      double lc = solve_concurrent(g, dc).lambda.value();
      CHECK(lc == doctest::Approx(l0 / c).epsilon(1e-6));
    }
  }
}

TEST_CASE("monotonicity: raising capacity never hurts") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Instance inst = gen_random_graph(5, 0.5, 2, 2, 1, 5, seed);
    const auto& g = inst.graph;
    std::vector<DemandVector> demands;
    auto verts = g.sorted_vertices();
    for (size_t i = 0; i < inst.commodities.size(); ++i)
      demands.push_back(target_demand(
          g, inst.commodities[i].supply, verts[(seed + 2 * i) % verts.size()]));
    auto base = solve_concurrent(g, demands);
    if (base.lambda.is_unbounded()) continue;

    std::vector<Edge> edges = g.edges();
    edges[seed % edges.size()].cap += 3.0;
    CapacitatedGraph up(g.directed(), g.vertices(), edges);
    CHECK(solve_concurrent(up, demands).lambda.value() >=
          base.lambda.value() - 1e-6);
  }
}

TEST_CASE("orientation flip leaves lambda unchanged") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Instance inst = gen_random_graph(6, 0.5, 2, 3, 1, 9, seed);
    const auto& g = inst.graph;
    std::vector<DemandVector> demands;
    auto verts = g.sorted_vertices();
    for (size_t i = 0; i < inst.commodities.size(); ++i)
      demands.push_back(target_demand(
          g, inst.commodities[i].supply, verts[(seed + i) % verts.size()]));
    auto base = solve_concurrent(g, demands);

    std::vector<Edge> edges = g.edges();
    for (size_t e = 0; e < edges.size(); ++e)
      if ((seed + e) % 2) std::swap(edges[e].u, edges[e].v);
    CapacitatedGraph flipped(false, g.vertices(), edges);
    auto flip = solve_concurrent(flipped, demands);
    REQUIRE(base.lambda.is_unbounded() == flip.lambda.is_unbounded());
    if (!base.lambda.is_unbounded())
      CHECK(flip.lambda.value() ==
            doctest::Approx(base.lambda.value()).epsilon(1e-6));
  }
}

TEST_CASE("witness never carries opposing direction flow") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Instance inst = gen_random_graph(6, 0.6, 2, 3, 1, 9, seed);
    const auto& g = inst.graph;
    std::vector<DemandVector> demands;
    auto verts = g.sorted_vertices();
    for (size_t i = 0; i < inst.commodities.size(); ++i)
      demands.push_back(target_demand(
          g, inst.commodities[i].supply, verts[(seed + i) % verts.size()]));
    auto r = solve_concurrent(g, demands);
    if (r.lambda.is_unbounded()) continue;
    // Signed per-edge values are already net; congestion must respect caps.
    for (int e = 0; e < g.num_edges(); ++e) {
      double cong = 0.0;
      for (const auto& f : r.witness.flows) cong += std::abs(f.value[e]);
      CHECK(cong <= g.edge(e).cap + 1e-6);
    }
  }
}

TEST_CASE("total flow objective") {
  auto g = path_graph({"a", "b", "c"}, 1.0);

  // Both commodities share the first edge: total value 1 however split.
  auto r = solve_total(g, {sv({{"a", -1}}), sv({{"a", -1}})}, {"c", "c"});
  CHECK(r.objective == doctest::Approx(1.0));
  CHECK(r.lambdas[0] + r.lambdas[1] == doctest::Approx(1.0));

  // Over-delivery is allowed: min cut 2 doubles the shipment.
  auto g2 = path_graph({"a", "b", "c"}, 2.0);
  auto r2 = solve_total(g2, {sv({{"a", -1}})}, {"c"});
  CHECK(r2.lambdas[0] == doctest::Approx(2.0));
  CHECK(r2.objective == doctest::Approx(2.0));

  // All-zero supply contributes zero at lambda 0.
  auto r3 = solve_total(g, {SupplyVector{}}, {"c"});
  CHECK(r3.lambdas[0] == 0.0);
  CHECK(r3.objective == 0.0);

  // Target on the only source: served in place at lambda 1.
  auto r4 = solve_total(g, {sv({{"a", -1}})}, {"a"});
  CHECK(r4.lambdas[0] == doctest::Approx(1.0));
  CHECK(r4.objective == doctest::Approx(1.0));

  // Witness revalidates against component-wise scaled demands.
  std::vector<DemandVector> scaled;
  auto supplies = std::vector<SupplyVector>{sv({{"a", -1}}), sv({{"a", -1}})};
  std::vector<std::string> targets{"b", "c"};
  auto r5 = solve_total(g, supplies, targets);
  for (size_t i = 0; i < supplies.size(); ++i)
    scaled.push_back(
        scale(target_demand(g, supplies[i], targets[i]), r5.lambdas[i]));
  CHECK(validate_multiflow(g, scaled, r5.witness).valid);
}

TEST_CASE("check_feasible thresholds") {
  auto g = path_graph({"a", "b", "c"}, 1.0);
  DemandVector d = dv({{"a", -1}, {"c", 1}});
  CHECK(check_feasible(g, {d}));
  CHECK_FALSE(check_feasible(g, {d, d}));
  CHECK(check_feasible(g, {}));
}
