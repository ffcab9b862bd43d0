#pragma once

#include "heckerep/exactnum/exact_matrix.hpp"
#include "heckerep/exactnum/surd.hpp"
#include "heckerep/recoupling/params.hpp"
#include "heckerep/report.hpp"

namespace heckerep {

struct ModularData {
  TheoryParams params;
  std::vector<int> colors;
  ExactMatrix s_tilde;  // Hopf-link values (-1)^{i+j} [(i+1)(j+1)]
  SurdMatrix s;         // s_tilde / D
  ExactMatrix t;        // diag(theta_i)
  CycNumber d_squared, p_plus, p_minus;
};

ExactMatrix s_tilde_matrix(const TheoryParams& params);
SurdMatrix s_matrix(const TheoryParams& params);
ExactMatrix t_matrix(const TheoryParams& params);
ModularData modular_data(const TheoryParams& params);

// S~^2 = D^2 I (i.e. S^2 = I), ((T S~)^3)^2 = D^6 (P+/P-) I, symmetry, S~ S~^dagger = D^2 I.
RelationReport verify_genus1_relations(const TheoryParams& params);

}  // namespace heckerep
