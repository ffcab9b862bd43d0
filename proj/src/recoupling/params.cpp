#include "heckerep/recoupling/params.hpp"

#include <numeric>
#include <stdexcept>

namespace heckerep {

std::string to_string(TwistConvention c) {
  return c == TwistConvention::IPlus2 ? "theta_i = (-1)^i A^(i(i+2))" : "theta_i = (-1)^i A^(i(i-2))";
}

long unitary_root_exponent(int level) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  const long p = level + 2;
  if (level % 2 == 0) return p + 1;  // zeta_{4p}^{p+1} = i e^{i pi/(2p)}
  // In zeta_{2p} the same point needs a half-integer exponent; A^2 = zeta_{2p}^{p+1}
  // is what odd-level data see. Take k with 2k = p + 1 (mod 2p) and k odd.
  long k = (p + 1) / 2;
  if (std::gcd(k, 2 * p) != 1) k += p;
  return k;
}

TheoryParams TheoryParams::unitary(int level, TwistConvention twist) {
  return at_root(level, unitary_root_exponent(level), twist);
}

TheoryParams TheoryParams::at_root(int level, long k, TwistConvention twist) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  TheoryParams t;
  t.level = level;
  t.twist = twist;
  const long n = t.root_order();
  long kk = ((k % n) + n) % n;
  if (std::gcd(kk, n) != 1)
    throw std::invalid_argument("root exponent " + std::to_string(k) + " is not coprime to " + std::to_string(n));
  t.root_exponent = kk;
  return t;
}

bool TheoryParams::is_unitary_default() const { return root_exponent == unitary_root_exponent(level); }

std::vector<int> color_set(const TheoryParams& params) {
  std::vector<int> c;
  if (params.is_odd()) {
    for (int i = 0; i <= params.level - 1; i += 2) c.push_back(i);
  } else {
    for (int i = 0; i <= params.level; ++i) c.push_back(i);
  }
  return c;
}

bool is_color(int c, int level) {
  if (c < 0) return false;
  if (level % 2) return c % 2 == 0 && c <= level - 1;
  return c <= level;
}

bool admissible_generic(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2) return false;
  return c <= a + b && a <= b + c && b <= c + a;
}

bool admissible(int a, int b, int c, int level) {
  return admissible_generic(a, b, c) && a + b + c <= 2 * level;
}

}  // namespace heckerep
