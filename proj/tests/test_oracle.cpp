#include <doctest.h>

#include "helpers.hpp"
#include "lomuf/fixtures.hpp"
#include "lomuf/oracle.hpp"

using namespace lomuf;
using namespace lomuf::testing;

TEST_CASE("lomuf oracle on the path") {
  auto g = path_graph({"a", "b", "c"}, 1.0);
  auto r = oracle_lomuf(g, {sv({{"a", -1}, {"c", -3}})});
  CHECK(r.targets == std::vector<std::string>{"c"});
  CHECK(r.lambda.value() == doctest::Approx(1.0));

  // Uni-source: the zero demand at the source dominates everything.
  auto r2 = oracle_lomuf(g, {sv({{"b", -5}})});
  CHECK(r2.targets == std::vector<std::string>{"b"});
  CHECK(r2.lambda.is_unbounded());
}

TEST_CASE("budget refusal") {
  auto g = path_graph({"a", "b", "c"}, 1.0);
  std::vector<SupplyVector> supplies(8, sv({{"a", -1}, {"c", -1}}));
  OracleBudget tiny;
  tiny.max_lp_calls = 10;
  CHECK_THROWS_AS(oracle_lomuf(g, supplies, {}, tiny), BudgetError);
  CHECK_THROWS_AS(oracle_maxf(g, supplies, tiny), BudgetError);
}

TEST_CASE("pruned oracle matches plain enumeration") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    Instance inst = gen_random_graph(5, 0.5, 2, 3, 1, 7, seed * 23);
    auto supplies = inst.supplies();
    auto fast = oracle_lomuf(inst.graph, supplies, {}, {}, true);
    auto slow = oracle_lomuf(inst.graph, supplies, {}, {}, false);
    REQUIRE(fast.lambda.is_unbounded() == slow.lambda.is_unbounded());
    if (!fast.lambda.is_unbounded())
      CHECK(fast.lambda.value() ==
            doctest::Approx(slow.lambda.value()).epsilon(1e-9));
    CHECK(fast.targets == slow.targets);
  }
}

TEST_CASE("duplicate supplies keep the lexicographically-first maximizer") {
  // Both commodities identical: the pruned path must still return the same
  // tuple the plain enumeration finds.
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Instance base = gen_random_graph(4, 0.6, 1, 2, 1, 5, seed * 41);
    std::vector<SupplyVector> supplies{base.commodities[0].supply,
                                       base.commodities[0].supply};
    auto fast = oracle_lomuf(base.graph, supplies, {}, {}, true);
    auto slow = oracle_lomuf(base.graph, supplies, {}, {}, false);
    CHECK(fast.targets == slow.targets);
  }
}

TEST_CASE("restricted candidates are honored") {
  auto g = path_graph({"a", "b", "c"}, 1.0);
  auto r = oracle_lomuf(g, {sv({{"a", -1}})},
                        std::vector<std::string>{"b", "c"});
  CHECK((r.targets[0] == "b" || r.targets[0] == "c"));
  CHECK(r.lambda.value() == doctest::Approx(1.0));
}

TEST_CASE("total oracle degenerate and restricted-free behavior") {
  auto g = path_graph({"a", "b", "c"}, 1.0);
  // Zero-demand placements serve both supplies in place: objective 2.
  auto r = oracle_total(g, {sv({{"a", -1}}), sv({{"a", -1}})});
  CHECK(r.objective == doctest::Approx(2.0));
  CHECK(r.targets == std::vector<std::string>{"a", "a"});

  auto g2 = path_graph({"a", "b", "c"}, 2.0);
  auto r2 = oracle_total(g2, {sv({{"a", -1}})});
  CHECK(r2.objective == doctest::Approx(2.0));

  auto r3 = oracle_total(g, {});
  CHECK(r3.objective == 0.0);
}

TEST_CASE("total oracle pruning is lossless") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Instance inst = gen_random_graph(4, 0.5, 2, 2, 1, 5, seed * 77);
    auto supplies = inst.supplies();
    auto fast = oracle_total(inst.graph, supplies, {}, true);
    auto slow = oracle_total(inst.graph, supplies, {}, false);
    CHECK(fast.objective == doctest::Approx(slow.objective).epsilon(1e-9));
    CHECK(fast.targets == slow.targets);
  }
}

TEST_CASE("maxf oracle equals the independence number on small fixtures") {
  SimpleGraph triangle{{"a", "b", "c"},
                       {{"a", "b"}, {"b", "c"}, {"a", "c"}}};
  Instance ft = gen_mis_maxf(triangle);
  OracleBudget big;
  big.max_lp_calls = 1'000'000'000'000LL;
  auto rt = oracle_maxf(ft.graph, ft.supplies(), big);
  CHECK(rt.zeta == 1);
  CHECK(rt.zeta == brute_mis(triangle));

  SimpleGraph path3{{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}};
  Instance fp = gen_mis_maxf(path3);
  auto rp = oracle_maxf(fp.graph, fp.supplies(), big);
  CHECK(rp.zeta == 2);
  CHECK(rp.zeta == brute_mis(path3));
  // Placed commodities carry targets, the rest are unplaced.
  int placed = 0;
  for (const auto& t : rp.targets) placed += t.has_value();
  CHECK(placed == 2);

  // The witness satisfies the winning subset's scaled demands and keeps
  // zero flow for unplaced commodities.
  REQUIRE_FALSE(rp.subset_lambda.is_unbounded());
  auto supplies = fp.supplies();
  std::vector<DemandVector> scaled;
  for (size_t i = 0; i < supplies.size(); ++i) {
    if (rp.targets[i])
      scaled.push_back(
          scale(target_demand(fp.graph, supplies[i], *rp.targets[i]),
                rp.subset_lambda.value()));
    else
      scaled.push_back(DemandVector{});
  }
  CHECK(validate_multiflow(fp.graph, scaled, rp.witness).valid);
}

TEST_CASE("greedy maxf follows index-then-vertex order") {
  auto g = path_graph({"a", "b", "c"}, 1.0);
  // Uni-source commodity: its own source works immediately.
  auto r = greedy_maxf(g, {sv({{"b", -7}})});
  REQUIRE(r.has_value());
  CHECK(r->first == 0);
  CHECK(r->second == "b");

  SimpleGraph triangle{{"a", "b", "c"},
                       {{"a", "b"}, {"b", "c"}, {"a", "c"}}};
  Instance ft = gen_mis_maxf(triangle);
  auto r2 = greedy_maxf(ft.graph, ft.supplies());
  REQUIRE(r2.has_value());
  CHECK(r2->first == 0);

  // No single placement feasible: bi-source supply 10 on a unit star.
  CapacitatedGraph star(false, {"r", "u1", "u2"},
                        {{"r", "u1", 1.0}, {"r", "u2", 1.0}});
  auto r3 = greedy_maxf(star, {sv({{"u1", -10}, {"u2", -10}})});
  CHECK_FALSE(r3.has_value());
  OracleBudget big;
  big.max_lp_calls = 1'000'000'000LL;
  CHECK(oracle_maxf(star, {sv({{"u1", -10}, {"u2", -10}})}, big).zeta == 0);
}

TEST_CASE("unsplittable oracle on trees equals the splittable optimum") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Instance inst = gen_random_tree(2 + seed % 6, 1 + seed % 2, 3, 1, 9,
                                    seed * 5);
    auto supplies = inst.supplies();
    auto unsplit = oracle_unsplittable(inst.graph, supplies);
    auto split = oracle_lomuf(inst.graph, supplies);
    REQUIRE(unsplit.lambda.is_unbounded() == split.lambda.is_unbounded());
    if (!split.lambda.is_unbounded())
      CHECK(unsplit.lambda.value() ==
            doctest::Approx(split.lambda.value()).epsilon(1e-6));
  }
}

TEST_CASE("unsplittable never beats splittable") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Instance inst = gen_random_graph(5, 0.6, 2, 2, 1, 9, seed * 57);
    auto supplies = inst.supplies();
    auto unsplit = oracle_unsplittable(inst.graph, supplies);
    auto split = oracle_lomuf(inst.graph, supplies);
    CHECK(unsplit.lambda.value_or_inf() <=
          split.lambda.value_or_inf() + 1e-6);
  }
}

TEST_CASE("unsplittable on the shared path edge") {
  auto g = path_graph({"a", "b", "c"}, 1.0);
  auto r = oracle_unsplittable(g, {sv({{"a", -1}}), sv({{"a", -1}})},
                               std::vector<std::string>{"c"});
  CHECK(r.lambda.value() == doctest::Approx(0.5));
}

TEST_CASE("unsplittable single path on the 4-cycle") {
  CapacitatedGraph cyc(false, {"a", "b", "c", "d"},
                       {{"a", "b", 1.0},
                        {"b", "c", 1.0},
                        {"c", "d", 1.0},
                        {"d", "a", 1.0}});
  // Supply 2 must ride one path: lambda 1/2 at target c, same as splittable.
  auto heavy = oracle_unsplittable(cyc, {sv({{"a", -2}})},
                                   std::vector<std::string>{"c"});
  CHECK(heavy.lambda.value() == doctest::Approx(0.5));
  // Unit supply: splittable uses both sides for lambda 2, one path gives 1.
  auto unit = oracle_unsplittable(cyc, {sv({{"a", -1}})},
                                  std::vector<std::string>{"c"});
  CHECK(unit.lambda.value() == doctest::Approx(1.0));
  auto split = solve_concurrent(
      cyc, {target_demand(cyc, sv({{"a", -1}}), "c")});
  CHECK(split.lambda.value() == doctest::Approx(2.0));
  // The witness revalidates.
  std::vector<DemandVector> scaled{
      scale(target_demand(cyc, sv({{"a", -1}}), "c"), unit.lambda.value())};
  CHECK(validate_multiflow(cyc, scaled, unit.witness).valid);
}

TEST_CASE("unsplittable path budget refusal") {
  // Complete graph on 6 vertices has hundreds of simple paths.
  Instance inst = gen_random_graph(6, 1.0, 1, 2, 1, 5, 3);
  OracleBudget tiny;
  tiny.max_paths = 5;
  CHECK_THROWS_AS(
      oracle_unsplittable(inst.graph, inst.supplies(), {}, tiny),
      BudgetError);
}

TEST_CASE("brute deciders") {
  ThreeDM one{{"x1"}, {"y1"}, {"z1"}, {{"x1", "y1", "z1"}}};
  CHECK(brute_perfect_matching(one));

  ThreeDM no{{"x1", "x2"},
             {"y1", "y2"},
             {"z1", "z2"},
             {{"x1", "y1", "z1"},
              {"x1", "y2", "z2"},
              {"x2", "y1", "z2"}}};
  CHECK_FALSE(brute_perfect_matching(no));

  ThreeDM yes{{"x1", "x2"},
              {"y1", "y2"},
              {"z1", "z2"},
              {{"x1", "y1", "z1"}, {"x2", "y2", "z2"}, {"x1", "y2", "z2"}}};
  CHECK(brute_perfect_matching(yes));

  CHECK_FALSE(brute_equipartition({1, 1, 1, 1, 1, 2}, 2));  // odd sum
  CHECK(brute_equipartition({1, 1, 1, 1, 1, 1}, 2));
  CHECK(brute_equipartition({3, 1, 2, 2, 1, 3}, 2));
  // Parts may have any size: {5} vs {1,1,1,1,1} works.
  CHECK(brute_equipartition({5, 1, 1, 1, 1, 1}, 2));
  CHECK_FALSE(brute_equipartition({7, 1, 1, 1, 1, 1}, 2));  // 7 > B = 6

  CHECK(brute_mis({{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}}) ==
        1);
  CHECK(brute_mis({{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}}) == 2);
  CHECK(brute_mis({{"a", "b", "c"}, {}}) == 3);
}
