#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobcore/cartier.hpp"
#include "json.hpp"
#include "scenario.hpp"

namespace frobcore::cli {

using json = nlohmann::ordered_json;

struct Block {
  int line = 0;
  std::string command;
  json fields = json::object();
  std::optional<std::string> verdict;  // PASS, FAIL, FAIL (expected), PASS (unexpected)
  bool failed = false;
};

struct Report {
  std::string scenario;
  std::vector<Block> blocks;
  std::string dot;
  // Pairs declared by the scenario, for callers that keep computing with them.
  std::vector<std::pair<std::string, CartierPair>> pairs;
  int checks = 0;
  int failures = 0;
  bool ok() const { return failures == 0; }
};

struct RunOptions {
  std::uint64_t seed = 20240611;
  bool want_dot = false;
};

Report run_scenario(const Scenario& sc, const RunOptions& opts = {});

std::string render_text(const Report& r);
json render_json(const Report& r);

}  // namespace frobcore::cli
