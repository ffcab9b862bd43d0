#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heckerep/exactnum/polynomial.hpp"

namespace heckerep {

// Per-order data for Q(zeta_N) = Q[x]/Phi_N.
struct CyclotomicData {
  int order = 1;
  int phi = 1;
  IntPolynomial modulus;
  // power_table[e] = x^e mod Phi_N for 0 <= e < table size (>= max(N, 2*phi - 1)).
  std::vector<std::vector<long>> power_table;
  // max over output coordinates of sum_e |power_table[e][c]|, e < 2*phi - 1.
  long reduction_bound = 1;
  // exponents coprime to N, ascending; these index the embeddings.
  std::vector<int> units;
};

const CyclotomicData& cyclotomic_data(int order);

// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
// Stored as integer numerators over one positive denominator, kept coprime.
class CycNumber {
 public:
  CycNumber();  // zero of Q(zeta_1)
  explicit CycNumber(int order);
  CycNumber(int order, const Rational& value);
  CycNumber(int order, long value);

  static CycNumber zeta(int order, long exponent = 1);
  static CycNumber from_coeffs(int order, const std::vector<Rational>& coeffs);
  static CycNumber from_integers(int order, std::vector<Integer> numerators, Integer denominator);
  // Sum c_e zeta^e over arbitrary integer exponents e (reduced mod N).
  static CycNumber from_exponent_sum(int order, const std::vector<std::pair<long, Rational>>& terms);

  int order() const { return n_; }
  int degree() const { return static_cast<int>(num_.size()); }
  Rational coeff(int j) const;
  std::vector<Rational> coeffs() const;
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;  // throws unless is_rational()
  bool is_real() const;          // fixed by zeta -> zeta^{-1}
  // Single nonzero coordinate c*zeta^j.
  bool is_monomial() const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator/=(const CycNumber& o);
  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
  bool operator==(const CycNumber& o) const;
  bool operator!=(const CycNumber& o) const { return !(*this == o); }

  CycNumber inverse() const;  // throws std::domain_error on zero
  CycNumber pow(long e) const;
  // Field automorphism zeta -> zeta^m, gcd(m, N) = 1.
  CycNumber galois(long m) const;
  Rational norm() const;
  // Multiplication by s*zeta^e for s = +-1.
  CycNumber times_zeta_power(long e, int sign = 1) const;
  // Same element viewed in Q(zeta_M), N | M.
  CycNumber lift(int larger_order) const;

  std::string to_string() const;

 private:
  void canonicalize();
  void check_same_field(const CycNumber& o) const;
  int n_;
  std::vector<Integer> num_;
  Integer den_;
};

CycNumber galois_conj_inv(const CycNumber& x);

// Value at zeta_N = exp(2 pi i / N).
std::complex<double> embed(const CycNumber& x);
// Value at zeta_N with |error| < 10^-digits, as a pair of decimal strings.
std::pair<std::string, std::string> embed_decimal(const CycNumber& x, int digits);
// Value at zeta_N with error < 10^-digits (digits <= 15 meaningful in a double).
std::complex<double> embed(const CycNumber& x, int digits);

// Sign of the real part of the embedding, decided exactly: 0 only if Re = 0 exactly
// (checked as x + conj(x) == 0), otherwise by adaptive precision evaluation.
int real_sign(const CycNumber& x);

// y in Q(zeta_N) with y^2 = x and positive real embedding, for x real and positive.
// Candidates come from a float search over sign patterns and are verified exactly.
std::optional<CycNumber> try_sqrt(const CycNumber& x);

}  // namespace heckerep
