#pragma once

#include <memory>

#include "heckerep/exactnum/exact_matrix.hpp"
#include "heckerep/exactnum/surd.hpp"
#include "heckerep/recoupling/params.hpp"
#include "heckerep/rep_genus2/basis.hpp"
#include "heckerep/report.hpp"

namespace heckerep {

// Genus-2 images of the Hecke generators J and A_5 in the theta-graph basis.
//   jtilde   pairing matrix assembled from coupling coefficients and two Tets per term
//   j_plain  jtilde with column mu scaled by w_mu / (D^2 Theta_mu^2), w = Delta_i Delta_j Delta_k
//   j_unitary  S j_plain S^{-1}, S = diag(sqrt(w / Theta^2)); entries kept as signed square roots
//   t        diag(theta_i theta_j)
struct Genus2Rep {
  TheoryParams params;
  Genus2Basis basis;
  std::vector<CycNumber> weights;  // w_sigma
  std::vector<CycNumber> thetas;   // Theta(i,j,k)
  ExactMatrix jtilde;
  ExactMatrix j_plain;
  ExactMatrix t;
};

// Cached per parameter set.
std::shared_ptr<const Genus2Rep> genus2_rep(const TheoryParams& params);

ExactMatrix jtilde(const TheoryParams& params);
// The parallel assembly behind jtilde, bypassing the cache.
ExactMatrix jtilde_uncached(const TheoryParams& params);
// Term-by-term serial evaluation of the same sum, for testing the fast assembly.
ExactMatrix jtilde_reference(const TheoryParams& params);
ExactMatrix j_plain(const TheoryParams& params);
// Throws NotPositive if some w_sigma is not positive at the standard embedding.
// With exact_roots, entries whose square root lies in Q(zeta_N) also carry it.
SurdMatrix j_unitary(const TheoryParams& params, bool exact_roots = false);
ExactMatrix t_genus2(const TheoryParams& params);

// J^2 = I, (TJ)^5 = (P+/P-)^2 I, J = J^T, J real, and unitarity as J W J^dagger = W with
// W = diag(Theta^2 / w) (equivalent to j_unitary * j_unitary^dagger = I).
RelationReport verify_genus2_relations(const TheoryParams& params);

struct TraceResult {
  CycNumber double_sum;
  CycNumber matrix_trace;
  bool agree() const { return double_sum == matrix_trace; }
};
// tr(J T J T^{-1}) by the double sum over basis pairs and by the matrix product.
TraceResult trace_jtjt(const TheoryParams& params);
// J T J T^{-1} with J = j_plain (similar to the unitary version).
ExactMatrix jtjt_matrix(const TheoryParams& params);

// max |(J J^dagger - I)_{ab}| for the unitary J evaluated in double precision.
double unitarity_defect(const TheoryParams& params);

}  // namespace heckerep
