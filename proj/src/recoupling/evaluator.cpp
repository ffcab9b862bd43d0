#include "heckerep/recoupling/evaluator.hpp"

#include "heckerep/errors.hpp"
#include "heckerep/recoupling/generic.hpp"

namespace heckerep {

Recoupling::Recoupling(const TheoryParams& params) : params_(params), colors_(color_set(params)) {}

bool Recoupling::admissible(int a, int b, int c) const {
  return is_color(a, params_.level) && is_color(b, params_.level) && is_color(c, params_.level) &&
         heckerep::admissible(a, b, c, params_.level);
}

void Recoupling::require(int a, int b, int c) const {
  if (!admissible(a, b, c))
    throw NotAdmissible("(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                        ") is not admissible at level " + std::to_string(params_.level));
}

const CycNumber& Recoupling::phi_value(int d) const {
  std::lock_guard<std::mutex> lock(phi_mu_);
  auto it = phi_stable_.find(d);
  if (it != phi_stable_.end()) return it->second;
  CycNumber v = LaurentPoly::from_polynomial(cyclotomic_poly(d)).specialize(order(), params_.root_exponent);
  return phi_stable_.emplace(d, std::move(v)).first->second;
}

CycNumber Recoupling::specialize(const CycloFraction& f) const {
  const int n = order();
  if (f.is_zero()) return zero();
  auto it = f.exponents().find(n);
  if (it != f.exponents().end()) {
    if (it->second > 0) return zero();
    throw PoleAtRoot("pole at zeta_" + std::to_string(n) + "^" + std::to_string(params_.root_exponent));
  }
  CycNumber v = f.poly().specialize(n, params_.root_exponent);
  for (const auto& [d, e] : f.exponents()) v *= phi_value(d).pow(e);
  return v;
}

CycNumber Recoupling::A() const { return CycNumber::zeta(order(), params_.root_exponent); }

CycNumber Recoupling::qint(long n) const { return specialize(factored::qint(n)); }

CycNumber Recoupling::delta(int i) const { return specialize(factored::delta(i)); }

CycNumber Recoupling::twist(int i) const { return specialize(factored::twist(i, params_.twist)); }

CycNumber Recoupling::twist_inv(int i) const { return twist(i).inverse(); }

CycNumber Recoupling::theta_net(int a, int b, int c) const {
  require(a, b, c);
  return theta_.get({a, b, c}, [&] { return specialize(factored::theta_net(a, b, c)); });
}

CycNumber Recoupling::tet_kl(int a, int b, int e, int c, int d, int f) const {
  require(a, d, e);
  require(b, c, e);
  require(a, b, f);
  require(c, d, f);
  return tet_.get({a, b, e, c, d, f}, [&] { return specialize(factored::tet_kl(a, b, e, c, d, f)); });
}

CycNumber Recoupling::tet(int a, int b, int e, int c, int d, int f) const { return tet_kl(a, d, e, c, b, f); }

CycNumber Recoupling::sixj(int a, int b, int i, int c, int d, int j) const {
  return sixj_.get({a, b, i, c, d, j}, [&] {
    CycNumber t = tet_kl(a, b, i, c, d, j);
    return t * delta(i) / (theta_net(a, d, i) * theta_net(b, c, i));
  });
}

CycNumber Recoupling::coupling_a(int i, int j, int l) const {
  if (!admissible(i, i, l) || !admissible(j, j, l)) return zero();
  return coupling_.get({i, j, l, false}, [&] {
    CycNumber sum = zero();
    for (int k : colors_) {
      if (!admissible(i, j, k)) continue;
      CycNumber tw = twist(i) * twist(j) * twist_inv(k);
      sum += delta(k) * tw * sixj(i, j, l, j, i, k) / theta_net(i, j, k);
    }
    return sum;
  });
}

CycNumber Recoupling::coupling_a_bar(int i, int j, int l) const {
  if (!admissible(i, i, l) || !admissible(j, j, l)) return zero();
  return coupling_.get({i, j, l, true}, [&] {
    CycNumber sum = zero();
    for (int k : colors_) {
      if (!admissible(i, j, k)) continue;
      CycNumber tw = twist_inv(i) * twist_inv(j) * twist(k);
      sum += delta(k) * tw * sixj(i, j, l, j, i, k) / theta_net(i, j, k);
    }
    return sum;
  });
}

const GlobalConstants& Recoupling::global_constants() const {
  std::call_once(constants_once_, [this] {
    auto g = std::make_unique<GlobalConstants>();
    g->p_plus = zero();
    g->p_minus = zero();
    g->d_squared = zero();
    for (int i : colors_) {
      CycNumber d2 = delta(i) * delta(i);
      g->d_squared += d2;
      g->p_plus += twist(i) * d2;
      g->p_minus += twist_inv(i) * d2;
    }
    g->kappa_squared = g->p_plus / g->p_minus;
    g->d = try_sqrt(g->d_squared);
    if (g->d) g->kappa = g->p_plus / *g->d;
    constants_ = std::move(g);
  });
  return *constants_;
}

std::shared_ptr<const Recoupling> recoupling_for(const TheoryParams& params) {
  static std::mutex mu;
  static std::map<TheoryParams, std::shared_ptr<const Recoupling>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[params];
  if (!slot) slot = std::make_shared<const Recoupling>(params);
  return slot;
}

}  // namespace heckerep
