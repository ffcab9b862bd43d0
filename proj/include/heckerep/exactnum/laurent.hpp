#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "heckerep/exactnum/cyclotomic.hpp"
#include "heckerep/exactnum/polynomial.hpp"

namespace heckerep {

// sum_k c_k A^{low+k}; zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long low, std::vector<Rational> coeffs);
  static LaurentPoly constant(const Rational& c);
  static LaurentPoly monomial(const Rational& c, long exponent);
  static LaurentPoly from_polynomial(const IntPolynomial& p, long shift = 0);

  bool is_zero() const { return c_.empty(); }
  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(long exponent) const;
  bool is_monomial() const { return c_.size() == 1; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly shifted(long e) const;
  LaurentPoly bar() const;  // A -> A^{-1}
  // Quotient by an ordinary polynomial in A when it divides exactly.
  std::optional<LaurentPoly> divide_exact(const IntPolynomial& d) const;
  std::complex<double> evaluate(std::complex<double> a) const;
  // Value at A = zeta_N^k.
  CycNumber specialize(int order, long k) const;
  std::string to_string() const;

 private:
  void trim();
  long low_ = 0;
  std::vector<Rational> c_;
};

// num/den in lowest terms: den is an ordinary polynomial in A with nonzero constant
// term and leading coefficient 1; gcd(num, den) = 1 in Q[A, A^{-1}].
class LaurentFraction {
 public:
  LaurentFraction();  // zero
  LaurentFraction(const LaurentPoly& num);
  LaurentFraction(const LaurentPoly& num, const LaurentPoly& den);  // throws PoleAtRoot on den = 0
  static LaurentFraction constant(const Rational& c);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  LaurentFraction operator-() const;
  LaurentFraction operator+(const LaurentFraction& o) const;
  LaurentFraction operator-(const LaurentFraction& o) const;
  LaurentFraction operator*(const LaurentFraction& o) const;
  LaurentFraction operator/(const LaurentFraction& o) const;
  bool operator==(const LaurentFraction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const LaurentFraction& o) const { return !(*this == o); }

  LaurentFraction bar() const;
  std::complex<double> evaluate(std::complex<double> a) const;
  std::string to_string() const;

 private:
  friend class CycloFraction;
  struct Canonical {};
  LaurentFraction(LaurentPoly num, LaurentPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  LaurentPoly num_;
  LaurentPoly den_;
};

// Substitutes A = zeta_N^k. The stored fraction is already reduced, so no power of
// Phi_N can divide both parts; a zero denominator at the root is a genuine pole.
CycNumber specialize(const LaurentFraction& f, int order, long k);

// poly(A) * prod_d Phi_d(A)^{e_d}: a factored representation of fractions whose
// denominators are products of cyclotomic polynomials (every recoupling quantity).
// Kept reduced: for e_d < 0, Phi_d does not divide poly.
class CycloFraction {
 public:
  CycloFraction() = default;  // zero
  explicit CycloFraction(LaurentPoly poly, std::map<int, int> exponents = {});
  static CycloFraction one() { return CycloFraction(LaurentPoly::constant(1)); }

  const LaurentPoly& poly() const { return poly_; }
  const std::map<int, int>& exponents() const { return exp_; }
  bool is_zero() const { return poly_.is_zero(); }

  CycloFraction operator-() const;
  CycloFraction operator*(const CycloFraction& o) const;
  CycloFraction operator/(const CycloFraction& o) const;  // o must be a monomial times Phi-product
  CycloFraction operator+(const CycloFraction& o) const;
  CycloFraction bar() const;

  LaurentFraction to_fraction() const;
  CycNumber specialize(int order, long k) const;  // throws PoleAtRoot

 private:
  void reduce();
  LaurentPoly poly_;
  std::map<int, int> exp_;
};

// Phi_d(A)^e expanded, cached.
const LaurentPoly& cyclotomic_power(int d, int e);

}  // namespace heckerep
