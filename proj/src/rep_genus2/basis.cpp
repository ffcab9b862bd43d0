#include "heckerep/rep_genus2/basis.hpp"

#include <algorithm>

namespace heckerep {

std::optional<std::size_t> Genus2Basis::index_of(const Triple& t) const {
  auto it = std::lower_bound(triples.begin(), triples.end(), t);
  if (it == triples.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - triples.begin());
}

Genus2Basis enumerate_basis(const TheoryParams& params) {
  Genus2Basis b;
  const auto c = color_set(params);
  for (int i : c)
    for (int j : c)
      for (int k : c)
        if (admissible(i, j, k, params.level)) b.triples.push_back({i, j, k});
  return b;
}

}  // namespace heckerep
