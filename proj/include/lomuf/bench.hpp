#pragma once

#include <cstdint>
#include <string>

#include "lomuf/oracle.hpp"

namespace lomuf {

enum class BenchFamily { kTrees, kBisource, kGeneral, kMixed };

BenchFamily bench_family_from_string(const std::string& name);

/// Deterministic CSV comparing oracle optima against the tree and
/// master-source locators on seeded random instances. Budget refusals are
/// reported as "skipped" rows, never truncated.
std::string bench_report(int trials, std::uint64_t seed,
                         BenchFamily family = BenchFamily::kMixed,
                         const OracleBudget& budget = {});

}  // namespace lomuf
