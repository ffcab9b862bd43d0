#pragma once

#include <array>
#include <optional>
#include <vector>

#include "heckerep/recoupling/params.hpp"

namespace heckerep {

using Triple = std::array<int, 3>;

// Theta-graph basis u_{ijk} of the genus-2 space, dictionary order.
struct Genus2Basis {
  std::vector<Triple> triples;

  std::size_t size() const { return triples.size(); }
  const Triple& operator[](std::size_t n) const { return triples[n]; }
  std::optional<std::size_t> index_of(const Triple& t) const;
};

Genus2Basis enumerate_basis(const TheoryParams& params);

}  // namespace heckerep
