#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace heckerep {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense univariate polynomial over Z, constant term first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(const Integer& c, std::size_t exponent);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const Integer& leading() const { return c_.back(); }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Quotient a/b when b divides a over Z; b must have leading coefficient +-1.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

int euler_phi(int n);
std::vector<int> divisors(int n);

// Phi_n, cached.
const IntPolynomial& cyclotomic_poly(int n);

// True iff p equals some Phi_n. Throws NonMonic unless p is monic of degree >= 1.
bool is_cyclotomic(const IntPolynomial& p);

// Dense univariate polynomial over Q, constant term first.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coeffs);
  explicit RatPolynomial(const IntPolynomial& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  RatPolynomial operator+(const RatPolynomial& o) const;
  RatPolynomial operator-(const RatPolynomial& o) const;
  RatPolynomial operator*(const RatPolynomial& o) const;
  bool operator==(const RatPolynomial& o) const { return c_ == o.c_; }

  RatPolynomial monic() const;
  // Integer polynomial if all coefficients are integral.
  std::optional<IntPolynomial> to_integer() const;
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);  // monic, gcd(0,0)=0

}  // namespace heckerep
