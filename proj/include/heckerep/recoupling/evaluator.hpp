#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>

#include "heckerep/exactnum/cyclotomic.hpp"
#include "heckerep/exactnum/laurent.hpp"
#include "heckerep/recoupling/memo.hpp"
#include "heckerep/recoupling/params.hpp"

namespace heckerep {

struct GlobalConstants {
  CycNumber p_plus, p_minus, d_squared;
  CycNumber kappa_squared;        // P+/P-
  std::optional<CycNumber> d;      // sqrt(D^2) with positive embedding, when in the field
  std::optional<CycNumber> kappa;  // P+/D when D is available
};

// Recoupling values specialized at A = zeta_N^k. Level admissibility is enforced
// here (the generic functions only know parity and triangle conditions).
class Recoupling {
 public:
  explicit Recoupling(const TheoryParams& params);

  const TheoryParams& params() const { return params_; }
  int order() const { return params_.root_order(); }
  const std::vector<int>& colors() const { return colors_; }
  bool admissible(int a, int b, int c) const;
  CycNumber zero() const { return CycNumber(order()); }
  CycNumber one() const { return CycNumber(order(), 1L); }

  CycNumber A() const;
  CycNumber qint(long n) const;
  CycNumber delta(int i) const;
  CycNumber twist(int i) const;
  CycNumber twist_inv(int i) const;
  // Throw NotAdmissible for inadmissible input.
  CycNumber theta_net(int a, int b, int c) const;
  CycNumber tet(int a, int b, int e, int c, int d, int f) const;
  CycNumber tet_kl(int a, int b, int e, int c, int d, int f) const;
  CycNumber sixj(int a, int b, int i, int c, int d, int j) const;
  // Zero when (i,i,l) or (j,j,l) is inadmissible. Summed in the field.
  CycNumber coupling_a(int i, int j, int l) const;
  CycNumber coupling_a_bar(int i, int j, int l) const;

  const GlobalConstants& global_constants() const;
  CycNumber specialize(const CycloFraction& f) const;

 private:
  const CycNumber& phi_value(int d) const;
  void require(int a, int b, int c) const;
  TheoryParams params_;
  std::vector<int> colors_;
  mutable std::map<int, CycNumber> phi_stable_;
  mutable std::mutex phi_mu_;
  mutable MemoCache<std::array<int, 3>, CycNumber> theta_;
  mutable MemoCache<std::array<int, 6>, CycNumber> tet_;
  mutable MemoCache<std::array<int, 6>, CycNumber> sixj_;
  mutable MemoCache<std::tuple<int, int, int, bool>, CycNumber> coupling_;
  mutable std::once_flag constants_once_;
  mutable std::unique_ptr<GlobalConstants> constants_;
};

// Shared evaluator per parameter set (caches are reused across calls).
std::shared_ptr<const Recoupling> recoupling_for(const TheoryParams& params);

}  // namespace heckerep
