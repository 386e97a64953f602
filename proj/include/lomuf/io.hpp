#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lomuf/flow.hpp"
#include "lomuf/graph.hpp"
#include "lomuf/mcf.hpp"

namespace lomuf {

struct Commodity {
  std::string name;
  SupplyVector supply;
};

/// An on-disk problem instance: graph, commodities, optional candidate
/// target set, free-form meta object.
struct Instance {
  CapacitatedGraph graph;
  std::vector<Commodity> commodities;
  std::optional<std::vector<std::string>> candidates;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();

  std::vector<SupplyVector> supplies() const;
  std::vector<std::string> commodity_names() const;
};

/// Strict parser: unknown keys are rejected, diagnostics name the offending
/// field (and byte position for syntax errors).
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

struct Solution {
  std::vector<std::string> commodities;  // instance order
  // nullopt marks a commodity left unplaced (maxf variant).
  std::vector<std::optional<std::string>> targets;
  Lambda lambda;
  Lambda objective;                            // variant-dependent
  std::optional<std::vector<double>> lambdas;  // per-commodity (total)
  MultiFlow flows;
  std::string solver;
  double tolerance = kSatisfyTol;
};

std::string serialize_solution(const Instance& inst, const Solution& sol);
Solution parse_solution(const Instance& inst, const std::string& text);

}  // namespace lomuf
