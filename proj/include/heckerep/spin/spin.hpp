#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "heckerep/exactnum/polynomial.hpp"

namespace heckerep {

// Quadratic refinement of the mod-2 intersection form on H_1(Sigma_g; Z/2), stored by
// its values on the symplectic basis x_1..x_g, y_1..y_g (x_i . y_i = 1).
struct QuadraticForm {
  int g = 1;
  std::vector<std::uint8_t> values;  // length 2g

  static QuadraticForm from_index(int g, std::uint64_t bits);  // bit k = value on basis k
};

// Standard symplectic pairing of two vectors in basis coordinates (length 2g each).
int intersection(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b);
// q(v) via q(a + b) = q(a) + q(b) + a . b.
int evaluate(const QuadraticForm& q, const std::vector<std::uint8_t>& v);
// Arf(q) = sum_i q(x_i) q(y_i) mod 2.
int arf(const QuadraticForm& q);

// (even, odd) = (2^{g-1}(2^g + 1), 2^{g-1}(2^g - 1)).
std::pair<std::uint64_t, std::uint64_t> orbit_counts(int g);
// Same counts by enumerating all 2^{2g} forms.
std::pair<std::uint64_t, std::uint64_t> orbit_counts_exhaustive(int g);

// d_r^eps(g) = 2^{-2g} (d_r(g) + ((r+2)/2)^{g-1} ((-1)^eps 2^g - 1)).
// NotApplicable unless 4 | r+2; NotInteger if the value is not a nonnegative integer.
Integer spin_dims(int r, int g, int eps);

// Arf of the form with q(gamma) = ind_gamma + 1 (mod 2) on alpha_i (x_i) and beta_i (y_i).
int flat_spin_parity(const std::vector<long>& alpha_index, const std::vector<long>& beta_index);
// Index data of the flat structure from the multicurve construction: ind(alpha_i) = 0,
// ind(beta_i) = i - 1.
std::pair<std::vector<long>, std::vector<long>> flat_indices(int g);

struct ReducibilityReport {
  int r = 0, g = 0;
  int parity = 0;  // Arf of the flat spin structure
  Integer d_even, d_odd, total;
  // dim V(q_w), dim(V^0 minus V(q_w)), dim(V^1 minus V(q_w))
  std::array<Integer, 3> summands;
  bool all_positive = false;
  bool sums_to_total = false;
};

// Requires r = 4l + 2 with l >= 1 and g >= 2 (NotApplicable otherwise).
ReducibilityReport reducibility_report(int r, int g);

}  // namespace heckerep
