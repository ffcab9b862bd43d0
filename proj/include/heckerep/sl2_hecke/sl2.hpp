#pragma once

#include <array>
#include <string>
#include <vector>

#include "heckerep/exactnum/cyclotomic.hpp"
#include "heckerep/report.hpp"

namespace heckerep {

// Element of the real subfield of Q(zeta_N) (fixed by zeta -> zeta^{-1}).
class RealCycNumber {
 public:
  RealCycNumber() = default;
  explicit RealCycNumber(CycNumber v);  // throws std::invalid_argument unless real
  RealCycNumber(int order, long v) : v_(order, v) {}

  // 2 cos(pi / q) = zeta_{2q} + zeta_{2q}^{-1}.
  static RealCycNumber two_cos_pi_over(int q);

  const CycNumber& value() const { return v_; }
  int order() const { return v_.order(); }
  double to_double() const { return embed(v_).real(); }
  int sign() const { return real_sign(v_); }

  RealCycNumber operator-() const { return RealCycNumber(-v_, 0); }
  friend RealCycNumber operator+(const RealCycNumber& a, const RealCycNumber& b) { return {a.v_ + b.v_, 0}; }
  friend RealCycNumber operator-(const RealCycNumber& a, const RealCycNumber& b) { return {a.v_ - b.v_, 0}; }
  friend RealCycNumber operator*(const RealCycNumber& a, const RealCycNumber& b) { return {a.v_ * b.v_, 0}; }
  bool operator==(const RealCycNumber& o) const { return v_ == o.v_; }
  bool operator!=(const RealCycNumber& o) const { return v_ != o.v_; }

 private:
  RealCycNumber(CycNumber v, int) : v_(std::move(v)) {}  // closed operations skip the check
  CycNumber v_;
};

struct SL2Matrix {
  RealCycNumber a, b, c, d;

  static SL2Matrix identity(int order);
  static SL2Matrix scalar(int order, long s);
  RealCycNumber det() const { return a * d - b * c; }
  RealCycNumber trace() const { return a + d; }
  SL2Matrix inverse() const { return {d, -b, -c, a}; }  // det = 1
  SL2Matrix operator*(const SL2Matrix& o) const;
  SL2Matrix operator-() const { return {-a, -b, -c, -d}; }
  bool operator==(const SL2Matrix& o) const = default;
  std::array<double, 4> to_double() const { return {a.to_double(), b.to_double(), c.to_double(), d.to_double()}; }
};

SL2Matrix pow(const SL2Matrix& m, long e);
// [[1, x], [0, 1]] and [[1, 0], [-x, 1]].
SL2Matrix upper_translation(const RealCycNumber& x);
SL2Matrix lower_translation(const RealCycNumber& x);

struct HeckeGenerators {
  int q = 3;
  RealCycNumber lambda;
  SL2Matrix A, B, J;
};

// A_q = [[1, l], [0, 1]], B_q = [[1, 0], [-l, 1]], J = [[0, -1], [1, 0]], l = 2 cos(pi/q),
// over Q(zeta_{2q}). Requires q >= 3 odd.
HeckeGenerators hecke_generators(int q);

// Words in A, B, J: juxtaposition, integer exponents ("A^-1"), and parenthesised groups
// with exponents ("(A B)^5"). Whitespace and '*' separate factors.
struct Word {
  struct Factor {
    char symbol = 0;          // 'A', 'B', 'J', or 0 for a group
    std::vector<Word> group;  // one element when symbol == 0
    long exponent = 1;
  };
  std::vector<Factor> factors;
};
Word parse_word(const std::string& text);  // throws std::invalid_argument
std::string to_string(const Word& w);
SL2Matrix eval_word(const Word& w, const HeckeGenerators& g);
SL2Matrix eval_word(const std::string& text, int q);

// J = A^{-1}(AB)^{(q+1)/2} up to sign, J = (AB)^{q(q-1)/2} A^{-1} (AB)^{(q+1)/2},
// s^4 = (ts)^{2q} = I, s^2 = (ts)^q with s = J, t = A, and (AB)^q = -I.
RelationReport verify_presentation(int q);

enum class Sl2Class { Elliptic, Parabolic, Hyperbolic };
std::string to_string(Sl2Class c);
// Exact: compares tr with +-2 by sign tests in the real subfield.
Sl2Class classify(const SL2Matrix& m);

// (T_A T_B)^{2g+1} = -I with mu = 2 cos(pi/(2g+1)).
RelationReport hyperelliptic_image_check(int g);

}  // namespace heckerep
