#pragma once

// Shared generators and a floating-point recoupling oracle for the test suites.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "heckerep/exactnum/cyclotomic.hpp"
#include "heckerep/exactnum/exact_matrix.hpp"
#include "heckerep/exactnum/laurent.hpp"
#include "heckerep/recoupling/params.hpp"

namespace testing {

using heckerep::CycNumber;
using heckerep::ExactMatrix;
using heckerep::Integer;
using heckerep::LaurentFraction;
using heckerep::LaurentPoly;
using heckerep::Rational;
using cplx = std::complex<double>;

// Deterministic generator; every property test draws from its own seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(integer(0, static_cast<long>(v.size()) - 1))];
  }

  Rational rational(long bound = 9) {
    Rational q(integer(-bound, bound), integer(1, bound));
    q.canonicalize();
    return q;
  }

  // Random element of Q(zeta_N) with small coefficients, some coordinates zero.
  CycNumber cyc(int order, long bound = 9) {
    const int phi = heckerep::cyclotomic_data(order).phi;
    std::vector<Rational> c(phi);
    for (auto& x : c) x = integer(0, 2) == 0 ? Rational(0) : rational(bound);
    return CycNumber::from_coeffs(order, c);
  }

  CycNumber nonzero_cyc(int order, long bound = 9) {
    for (;;) {
      CycNumber x = cyc(order, bound);
      if (!x.is_zero()) return x;
    }
  }

  LaurentPoly laurent(int max_terms = 4, long max_exp = 5) {
    const long low = integer(-max_exp, max_exp);
    std::vector<Rational> c(static_cast<std::size_t>(integer(1, max_terms)));
    for (auto& x : c) x = rational(5);
    return LaurentPoly(low, c);
  }

  // Denominator: a product of small ordinary polynomials with nonzero constant term.
  LaurentPoly denominator() {
    std::vector<Rational> c(static_cast<std::size_t>(integer(1, 3)));
    for (auto& x : c) x = Rational(integer(-3, 3));
    c[0] = Rational(integer(1, 3));
    c.back() = 1;
    return LaurentPoly(0, c);
  }

  ExactMatrix matrix(std::size_t rows, std::size_t cols, int order, long bound = 5) {
    ExactMatrix m(rows, cols, order);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = cyc(order, bound);
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline cplx root_value(int order, long k) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / order);
}

// Kauffman-Lins recoupling evaluated directly in complex doubles at a chosen A.
class FloatRecoupling {
 public:
  FloatRecoupling(cplx a, int level, heckerep::TwistConvention tw = heckerep::TwistConvention::IPlus2)
      : a_(a), level_(level), tw_(tw) {}

  cplx A() const { return a_; }
  FloatRecoupling bar() const { return FloatRecoupling(1.0 / a_, level_, tw_); }

  cplx qint(long n) const {
    const cplx a2 = a_ * a_;
    return (std::pow(a2, n) - std::pow(a2, -n)) / (a2 - 1.0 / a2);
  }
  cplx qfact(long n) const {
    cplx v = 1;
    for (long k = 2; k <= n; ++k) v *= qint(k);
    return v;
  }
  cplx delta(int i) const { return (i % 2 ? -1.0 : 1.0) * qint(i + 1); }
  cplx twist(int i) const {
    const long e = tw_ == heckerep::TwistConvention::IPlus2 ? long(i) * (i + 2) : long(i) * (i - 2);
    return (i % 2 ? -1.0 : 1.0) * std::pow(a_, e);
  }
  bool admissible(int a, int b, int c) const { return heckerep::admissible(a, b, c, level_); }

  cplx theta(int a, int b, int c) const {
    const int x = (a + b - c) / 2, y = (b + c - a) / 2, z = (c + a - b) / 2;
    const cplx v = qfact(x + y + z + 1) * qfact(x) * qfact(y) * qfact(z) / (qfact(x + y) * qfact(y + z) * qfact(z + x));
    return (x + y + z) % 2 ? -v : v;
  }

  // Tet[a b e; c d f], faces (a,d,e), (b,c,e), (a,b,f), (c,d,f).
  cplx tet_kl(int a, int b, int e, int c, int d, int f) const {
    const int v[4] = {(a + d + e) / 2, (b + c + e) / 2, (a + b + f) / 2, (c + d + f) / 2};
    const int s[3] = {(b + d + e + f) / 2, (a + c + e + f) / 2, (a + b + c + d) / 2};
    cplx pre = 1;
    for (int ai : v)
      for (int bj : s) pre *= qfact(bj - ai);
    for (int x : {a, b, c, d, e, f}) pre /= qfact(x);
    int lo = v[0], hi = s[0];
    for (int ai : v) lo = std::max(lo, ai);
    for (int bj : s) hi = std::min(hi, bj);
    cplx sum = 0;
    for (int t = lo; t <= hi; ++t) {
      cplx den = 1;
      for (int ai : v) den *= qfact(t - ai);
      for (int bj : s) den *= qfact(bj - t);
      sum += (t % 2 ? -1.0 : 1.0) * qfact(t + 1) / den;
    }
    return pre * sum;
  }

  // Vertex triples (a,b,e), (b,c,f), (c,d,e), (a,d,f).
  cplx tet(int a, int b, int e, int c, int d, int f) const { return tet_kl(a, d, e, c, b, f); }

  cplx sixj(int a, int b, int i, int c, int d, int j) const {
    return tet_kl(a, b, i, c, d, j) * delta(i) / (theta(a, d, i) * theta(b, c, i));
  }

  std::vector<int> colors() const {
    std::vector<int> out;
    for (int c = 0; c <= level_; ++c)
      if (heckerep::is_color(c, level_)) out.push_back(c);
    return out;
  }

  cplx coupling(int i, int j, int l) const {
    if (!admissible(i, i, l) || !admissible(j, j, l)) return 0;
    cplx sum = 0;
    for (int k : colors())
      if (admissible(i, j, k)) sum += delta(k) * twist(i) * twist(j) / twist(k) * sixj(i, j, l, j, i, k) / theta(i, j, k);
    return sum;
  }

  cplx d_squared() const {
    cplx s = 0;
    for (int c : colors()) s += delta(c) * delta(c);
    return s;
  }

 private:
  cplx a_;
  int level_;
  heckerep::TwistConvention tw_;
};

inline cplx float_root(const heckerep::TheoryParams& p) { return root_value(p.root_order(), p.root_exponent); }

inline double max_abs_diff(const ExactMatrix& m, const std::vector<std::vector<cplx>>& f) {
  double worst = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) worst = std::max(worst, std::abs(heckerep::embed(m(i, j)) - f[i][j]));
  return worst;
}

}  // namespace testing
