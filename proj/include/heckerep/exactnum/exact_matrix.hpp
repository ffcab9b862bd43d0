#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "heckerep/exactnum/cyclotomic.hpp"

namespace heckerep {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, int order);
  static ExactMatrix identity(std::size_t n, int order);
  static ExactMatrix diagonal(const std::vector<CycNumber>& d);
  static ExactMatrix scalar(std::size_t n, const CycNumber& c);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int order() const { return order_; }
  CycNumber& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycNumber& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }
  // First (row, col) where the two matrices differ.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const ExactMatrix& o) const;

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const CycNumber& c) const;

  ExactMatrix transpose() const;
  ExactMatrix galois(long m) const;
  ExactMatrix conj_transpose() const;  // zeta -> zeta^{-1} and transpose
  CycNumber trace() const;
  bool is_symmetric() const;
  bool is_diagonal() const;
  // diag(d) * M and M * diag(d).
  ExactMatrix scale_rows(const std::vector<CycNumber>& d) const;
  ExactMatrix scale_cols(const std::vector<CycNumber>& d) const;
  std::vector<CycNumber> diagonal_entries() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  int order_ = 1;
  std::vector<CycNumber> data_;
};

// Serial reference product: schoolbook over CycNumber arithmetic.
ExactMatrix multiply_reference(const ExactMatrix& a, const ExactMatrix& b);
// Multi-modular product (OpenMP-parallel); identical result to multiply_reference.
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);
// M^e, e >= 0, via the multi-modular kernel with a single reconstruction.
ExactMatrix power(const ExactMatrix& m, unsigned e);
ExactMatrix power_reference(const ExactMatrix& m, unsigned e);

// Polynomial with coefficients in Q(zeta_N), constant term first.
class CycPolynomial {
 public:
  CycPolynomial() = default;
  CycPolynomial(int order, std::vector<CycNumber> coeffs);
  static CycPolynomial from_rational(int order, const RatPolynomial& p);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<CycNumber>& coeffs() const { return c_; }
  const CycNumber& leading() const { return c_.back(); }

  CycPolynomial operator+(const CycPolynomial& o) const;
  CycPolynomial operator-(const CycPolynomial& o) const;
  CycPolynomial operator*(const CycPolynomial& o) const;
  bool operator==(const CycPolynomial& o) const { return order_ == o.order_ && c_ == o.c_; }
  CycPolynomial galois(long m) const;
  CycPolynomial monic() const;
  std::string to_string() const;

 private:
  void trim();
  int order_ = 1;
  std::vector<CycNumber> c_;
};

std::pair<CycPolynomial, CycPolynomial> divmod(const CycPolynomial& a, const CycPolynomial& b);
CycPolynomial gcd(const CycPolynomial& a, const CycPolynomial& b);

// det(xI - M) by the Faddeev-LeVerrier recursion (divisions by integers only).
CycPolynomial char_poly(const ExactMatrix& m);
// Characteristic polynomial of M viewed as a Q-linear map: the norm
// prod_sigma sigma(char_poly(M)), which has rational coefficients.
RatPolynomial rational_char_poly(const ExactMatrix& m);

}  // namespace heckerep
