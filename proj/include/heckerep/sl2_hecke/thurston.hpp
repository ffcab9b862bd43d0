#pragma once

#include <array>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "heckerep/sl2_hecke/sl2.hpp"

namespace heckerep {

// Two multicurves A = {alpha_i}, B = {beta_j}: intersection matrix N (n x m) and
// twist multiplicities p (length n), q (length m).
struct MulticurveData {
  std::vector<std::vector<long>> n;
  std::vector<long> p, q;
};

// "n m", then n rows of m integers, then the p line and the q line.
MulticurveData parse_multicurve(std::istream& in);
MulticurveData parse_multicurve(const std::string& text);
// Path with `length` vertices alternating alpha, beta, ...; unit multiplicities.
MulticurveData type_a_path(int length);

struct ThurstonRep {
  double mu = 0;
  std::vector<double> v, v_prime;  // P N v' = mu v, Q N^T v = mu v'
  double residual = 0;             // max |P N v' - mu v| with max |v| = 1
  int iterations = 0;
  std::array<double, 4> ta{}, tb{};
  // Type-A paths with unit multiplicities: mu = 2 cos(pi/(L+1)) exactly, with the
  // quantum-integer eigenvector checked exactly.
  std::optional<RealCycNumber> mu_exact;
  std::optional<SL2Matrix> ta_exact, tb_exact;
  bool exact_eigenvector = false;
};

// Throws NotPrimitive if the intersection graph is disconnected, std::invalid_argument
// on malformed data.
ThurstonRep thurston_rep(const MulticurveData& data);

// Norm of the Coxeter graph B_n: 2 cos(pi / (2n)).
double coxeter_b_norm(int n);

}  // namespace heckerep
