#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace heckerep {

using Coordinates = std::pair<std::size_t, std::size_t>;

struct RelationResult {
  std::string relation;
  bool pass = false;
  std::optional<Coordinates> witness;  // first offending entry
};

struct RelationReport {
  std::vector<RelationResult> results;
  std::vector<std::string> notes;

  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
  void add(std::string relation, std::optional<Coordinates> witness) {
    results.push_back({std::move(relation), !witness.has_value(), witness});
  }
};

}  // namespace heckerep
