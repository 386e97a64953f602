#include "lomuf/bench.hpp"

#include <cstdio>
#include <random>
#include <sstream>

#include "lomuf/fixtures.hpp"
#include "lomuf/locate.hpp"

namespace lomuf {

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string fmt_lambda(const Lambda& l) {
  return l.is_unbounded() ? "unbounded" : num(l.value());
}

std::string fmt_ratio(const Lambda& oracle, const Lambda& algo) {
  if (algo.is_unbounded()) return "1";
  if (oracle.is_unbounded()) return "inf";
  if (algo.value() <= 1e-12)
    return oracle.value() <= 1e-12 ? "1" : "inf";
  return num(oracle.value() / algo.value());
}

Lambda lambda_of_targets(const CapacitatedGraph& g,
                         const std::vector<SupplyVector>& supplies,
                         const std::vector<std::string>& targets) {
  std::vector<DemandVector> demands;
  for (size_t i = 0; i < supplies.size(); ++i)
    demands.push_back(target_demand(g, supplies[i], targets[i]));
  return solve_concurrent(g, demands).lambda;
}

}  // namespace

BenchFamily bench_family_from_string(const std::string& name) {
  if (name == "trees") return BenchFamily::kTrees;
  if (name == "bisource") return BenchFamily::kBisource;
  if (name == "general") return BenchFamily::kGeneral;
  if (name == "mixed") return BenchFamily::kMixed;
  throw ValidationError("unknown bench family '" + name + "'");
}

std::string bench_report(int trials, std::uint64_t seed, BenchFamily family,
                         const OracleBudget& budget) {
  if (trials < 0) throw ValidationError("negative trial count");
  std::ostringstream csv;
  csv << "instance,n,k,theta,eta,lambda_oracle,lambda_tree,lambda_master,"
         "ratio\n";
  for (int t = 0; t < trials; ++t) {
    BenchFamily f = family;
    if (f == BenchFamily::kMixed) {
      int r = t % 3;
      f = r == 0 ? BenchFamily::kTrees
                 : (r == 1 ? BenchFamily::kBisource : BenchFamily::kGeneral);
    }
    std::uint64_t tseed = seed * 1000003ull + static_cast<std::uint64_t>(t);
    std::mt19937_64 dims(tseed ^ 0x9e3779b97f4a7c15ull);
    int n = 2 + static_cast<int>(dims() % 6);
    int k = 1 + static_cast<int>(dims() % 2);

    Instance inst =
        f == BenchFamily::kTrees
            ? gen_random_tree(n, k, 3, 1, 10, tseed)
            : gen_random_graph(n, 0.4, k,
                               f == BenchFamily::kBisource ? 2 : 4, 1, 10,
                               tseed);
    bool tree = is_tree(inst.graph);
    auto supplies = inst.supplies();
    LocatorStats stats = locator_stats(supplies);

    std::string id =
        (tree ? std::string("t") : std::string("g")) + std::to_string(t);
    csv << id << ',' << n << ',' << k << ',' << stats.theta << ','
        << num(stats.eta) << ',';

    Lambda oracle;
    bool skipped = false;
    try {
      oracle = oracle_lomuf(inst.graph, supplies, {}, budget).lambda;
    } catch (const BudgetError&) {
      skipped = true;
    }
    if (skipped) {
      csv << "skipped,,,\n";
      continue;
    }

    Lambda tree_lambda;
    std::string tree_cell;
    if (tree) {
      tree_lambda = lambda_of_targets(
          inst.graph, supplies, locate_tree(inst.graph, supplies).targets);
      tree_cell = fmt_lambda(tree_lambda);
    }
    Lambda master_lambda = lambda_of_targets(
        inst.graph, supplies, locate_master_source(supplies));

    csv << fmt_lambda(oracle) << ',' << tree_cell << ','
        << fmt_lambda(master_lambda) << ','
        << fmt_ratio(oracle, tree ? tree_lambda : master_lambda) << '\n';
  }
  return csv.str();
}

}  // namespace lomuf
