#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heckerep/exactnum/exact_matrix.hpp"
#include "heckerep/recoupling/params.hpp"

namespace heckerep {

// Minimal-polynomial route for M = J T J T^{-1}. An eigenvalue of M that is not a root
// of unity gives M infinite order, even projectively (det M = 1).
struct MinPolyCertificate {
  RatPolynomial rational_char_poly;  // char poly of M as a Q-linear map
  RatPolynomial non_cyclotomic;      // squarefree part with all Phi_n factors removed
  std::optional<IntPolynomial> designated;
  bool designated_divides_rational = false;
  bool designated_divides_field = false;  // divides char_poly(M) over Q(zeta_N)
  int field_gcd_degree = 0;               // deg gcd(designated, char_poly(M)) over Q(zeta_N)
  bool designated_is_cyclotomic = false;
  bool fires = false;
};

// Trace route: a finite-order matrix has |tr| <= dim. Galois conjugation preserves the
// order of the image, so every conjugate of the exact trace is tested.
struct TraceCertificate {
  CycNumber trace;  // at the given root
  Integer dimension;
  double value = 0;           // real part at the given root
  long best_exponent = 0;     // root exponent with the largest |tr|
  double best_magnitude = 0;
  bool fires = false;
};

struct InfiniteImageReport {
  TheoryParams params;
  std::optional<MinPolyCertificate> minpoly;
  TraceCertificate trace;
  std::string verdict;  // "infinite" or "inconclusive"
  std::vector<std::string> notes;
};

// Strips cyclotomic factors from the squarefree part of p.
RatPolynomial non_cyclotomic_part(const RatPolynomial& p);

MinPolyCertificate minpoly_certificate(const TheoryParams& params,
                                       const std::optional<IntPolynomial>& designated = std::nullopt);
TraceCertificate trace_certificate(const TheoryParams& params);

// The minimal-polynomial route runs when a factor is designated or the basis has at
// most `minpoly_limit` elements.
InfiniteImageReport infinite_image_certificate(const TheoryParams& params,
                                               const std::optional<IntPolynomial>& designated = std::nullopt,
                                               std::size_t minpoly_limit = 60);

}  // namespace heckerep
