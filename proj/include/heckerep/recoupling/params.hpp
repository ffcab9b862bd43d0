#pragma once

#include <compare>
#include <string>
#include <vector>

namespace heckerep {

// Exponent of the twist theta_i = (-1)^i A^{i(i+2)}; the alternative i(i-2) is kept
// switchable for comparison runs.
enum class TwistConvention { IPlus2, IMinus2 };

std::string to_string(TwistConvention c);

// Level r, p = r + 2, root order N = 4p (r even) or 2p (r odd), A = zeta_N^k.
struct TheoryParams {
  int level = 2;
  long root_exponent = 1;
  TwistConvention twist = TwistConvention::IPlus2;

  // A = i e^{i pi/(2p)} up to A -> -A (which leaves odd-level data unchanged).
  static TheoryParams unitary(int level, TwistConvention twist = TwistConvention::IPlus2);
  // Throws std::invalid_argument unless gcd(k, N) = 1.
  static TheoryParams at_root(int level, long k, TwistConvention twist = TwistConvention::IPlus2);

  int p() const { return level + 2; }
  bool is_odd() const { return level % 2 != 0; }
  int root_order() const { return is_odd() ? 2 * p() : 4 * p(); }
  bool is_unitary_default() const;

  auto operator<=>(const TheoryParams&) const = default;
};

long unitary_root_exponent(int level);

// {0..r} for even r, {0,2,..,r-1} for odd r.
std::vector<int> color_set(const TheoryParams& params);
bool is_color(int c, int level);
// a+b+c even, triangle inequalities, a+b+c <= 2r.
bool admissible(int a, int b, int c, int level);
// Parity and triangle conditions only (level independent).
bool admissible_generic(int a, int b, int c);

}  // namespace heckerep
