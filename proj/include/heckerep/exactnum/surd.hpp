#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "heckerep/exactnum/cyclotomic.hpp"

namespace heckerep {

// A real number sign * sqrt(square) with square totally real and positive at the
// standard embedding. `exact` is set when the root lies in Q(zeta_N).
struct SurdEntry {
  CycNumber square;
  int sign = 0;
  std::optional<CycNumber> exact;

  double approx() const { return sign * std::sqrt(std::max(0.0, embed(square).real())); }
  // True iff v is this number: v^2 = square with matching sign.
  bool equals(const CycNumber& v) const {
    if (sign == 0) return v.is_zero();
    return v * v == square && real_sign(v) == sign;
  }
  bool operator==(const SurdEntry& o) const { return sign == o.sign && square == o.square; }
};

class SurdMatrix {
 public:
  SurdMatrix() = default;
  SurdMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  SurdEntry& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const SurdEntry& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::vector<double> approx() const {
    std::vector<double> v(data_.size());
    for (std::size_t e = 0; e < data_.size(); ++e) v[e] = data_[e].approx();
    return v;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SurdEntry> data_;
};

}  // namespace heckerep
