#include "heckerep/rep_genus2/matrices.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>

#include "heckerep/errors.hpp"
#include "heckerep/recoupling/evaluator.hpp"

namespace heckerep {

namespace {

std::size_t color_index(int c, bool odd) { return static_cast<std::size_t>(odd ? c / 2 : c); }

// Tet(l, a, a; b, c, c) with its admissibility filter.
CycNumber tet_term(const Recoupling& rc, int l, int a, int b, int c) {
  if (!rc.admissible(l, a, a) || !rc.admissible(l, c, c) || !rc.admissible(a, b, c)) return rc.zero();
  return rc.tet(l, a, a, b, c, c);
}

ExactMatrix assemble_jtilde(const Recoupling& rc, const Genus2Basis& basis) {
  const auto& colors = rc.colors();
  const std::size_t nc = colors.size(), n = basis.size();
  const bool odd = rc.params().is_odd();
  // J~[s][m] = sum_l X[m][l][j1(s)] * Y[s][l][k2(m)]
  //   X[m][l][j1] = a^{j1,i2}_l Tet(l,i2,i2; j2,k2,k2)
  //   Y[s][l][k2] = Delta_l^{-1} abar^{k2,i1}_l Tet(l,j1,j1; k1,i1,i1)
  std::vector<CycNumber> x(n * nc * nc, rc.zero()), y(n * nc * nc, rc.zero());
  std::vector<CycNumber> delta_inv;
  for (int l : colors) delta_inv.push_back(rc.delta(l).inverse());
  for (std::size_t m = 0; m < n; ++m) {
    const auto [i, j, k] = basis[m];
    for (std::size_t li = 0; li < nc; ++li) {
      const int l = colors[li];
      const CycNumber tx = tet_term(rc, l, i, j, k);
      const CycNumber ty = tet_term(rc, l, j, k, i);
      for (std::size_t ci = 0; ci < nc; ++ci) {
        const int c = colors[ci];
        if (!tx.is_zero()) x[(m * nc + li) * nc + ci] = rc.coupling_a(c, i, l) * tx;
        if (!ty.is_zero()) y[(m * nc + li) * nc + ci] = delta_inv[li] * rc.coupling_a_bar(c, i, l) * ty;
      }
    }
  }
  ExactMatrix out(n, n, rc.order());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t j1 = color_index(basis[s][1], odd);
    for (std::size_t m = 0; m < n; ++m) {
      const std::size_t k2 = color_index(basis[m][2], odd);
      CycNumber acc = rc.zero();
      for (std::size_t li = 0; li < nc; ++li) {
        const CycNumber& a = x[(m * nc + li) * nc + j1];
        if (a.is_zero()) continue;
        const CycNumber& b = y[(s * nc + li) * nc + k2];
        if (b.is_zero()) continue;
        acc += a * b;
      }
      out(s, m) = std::move(acc);
    }
  }
  return out;
}

std::shared_ptr<const Genus2Rep> build(const TheoryParams& params) {
  auto rc = recoupling_for(params);
  auto rep = std::make_shared<Genus2Rep>();
  rep->params = params;
  rep->basis = enumerate_basis(params);
  std::vector<CycNumber> tdiag, scale;
  const CycNumber& d2 = rc->global_constants().d_squared;
  for (const auto& [i, j, k] : rep->basis.triples) {
    rep->weights.push_back(rc->delta(i) * rc->delta(j) * rc->delta(k));
    rep->thetas.push_back(rc->theta_net(i, j, k));
    tdiag.push_back(rc->twist(i) * rc->twist(j));
    scale.push_back(rep->weights.back() / (d2 * rep->thetas.back() * rep->thetas.back()));
  }
  rep->jtilde = assemble_jtilde(*rc, rep->basis);
  rep->j_plain = rep->jtilde.scale_cols(scale);
  rep->t = ExactMatrix::diagonal(tdiag);
  return rep;
}

}  // namespace

std::shared_ptr<const Genus2Rep> genus2_rep(const TheoryParams& params) {
  static std::mutex mu;
  static std::map<TheoryParams, std::shared_ptr<const Genus2Rep>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(params);
    if (it != cache.end()) return it->second;
  }
  auto rep = build(params);
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace(params, rep).first->second;
}

ExactMatrix jtilde(const TheoryParams& params) { return genus2_rep(params)->jtilde; }

ExactMatrix jtilde_uncached(const TheoryParams& params) {
  return assemble_jtilde(*recoupling_for(params), enumerate_basis(params));
}

ExactMatrix jtilde_reference(const TheoryParams& params) {
  auto rc = recoupling_for(params);
  const Genus2Basis basis = enumerate_basis(params);
  const std::size_t n = basis.size();
  ExactMatrix out(n, n, rc->order());
  for (std::size_t s = 0; s < n; ++s) {
    const auto [i1, j1, k1] = basis[s];
    for (std::size_t m = 0; m < n; ++m) {
      const auto [i2, j2, k2] = basis[m];
      CycNumber acc = rc->zero();
      for (int l : rc->colors()) {
        CycNumber t1 = tet_term(*rc, l, i2, j2, k2);
        CycNumber t2 = tet_term(*rc, l, j1, k1, i1);
        if (t1.is_zero() || t2.is_zero()) continue;
        acc += rc->delta(l).inverse() * rc->coupling_a(j1, i2, l) * rc->coupling_a_bar(k2, i1, l) * t1 * t2;
      }
      out(s, m) = acc;
    }
  }
  return out;
}

ExactMatrix j_plain(const TheoryParams& params) { return genus2_rep(params)->j_plain; }

ExactMatrix t_genus2(const TheoryParams& params) { return genus2_rep(params)->t; }

SurdMatrix j_unitary(const TheoryParams& params, bool exact_roots) {
  auto rep = genus2_rep(params);
  auto rc = recoupling_for(params);
  const std::size_t n = rep->basis.size();
  for (std::size_t s = 0; s < n; ++s)
    if (real_sign(rep->weights[s]) <= 0)
      throw NotPositive("Delta_i Delta_j Delta_k is not positive at basis vector " + std::to_string(s));
  const CycNumber& d2 = rc->global_constants().d_squared;
  const CycNumber d4 = d2 * d2;
  std::vector<CycNumber> row_factor(n);  // w / Theta^2
  for (std::size_t s = 0; s < n; ++s) row_factor[s] = rep->weights[s] / (rep->thetas[s] * rep->thetas[s]);
  SurdMatrix u(n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t m = 0; m < n; ++m) {
      const CycNumber& v = rep->jtilde(s, m);
      SurdEntry& e = u(s, m);
      e.square = row_factor[s] * row_factor[m] * v * v / d4;
      e.sign = real_sign(v * rep->thetas[s] * rep->thetas[m]);
      if (exact_roots) {
        if (e.sign == 0) {
          e.exact = rc->zero();
        } else if (auto r = try_sqrt(e.square)) {
          e.exact = e.sign > 0 ? *r : -*r;
        }
      }
    }
  return u;
}

RelationReport verify_genus2_relations(const TheoryParams& params) {
  auto rep = genus2_rep(params);
  auto rc = recoupling_for(params);
  const auto& g = rc->global_constants();
  const std::size_t n = rep->basis.size();
  const ExactMatrix& j = rep->j_plain;
  RelationReport report;
  report.notes.push_back("twist convention " + to_string(params.twist));
  report.notes.push_back("normalization J_(000),(000) = 1/D^2");
  report.notes.push_back("relations checked on the non-normalized J (diagonally similar to the unitary one)");

  report.add("J^2 = I", multiply(j, j).first_difference(ExactMatrix::identity(n, rc->order())));
  report.add("(TJ)^5 = (P+/P-)^2 I",
             power(multiply(rep->t, j), 5).first_difference(ExactMatrix::scalar(n, g.kappa_squared * g.kappa_squared)));
  report.add("J = J^T", rep->jtilde.first_difference(rep->jtilde.transpose()));
  report.add("J real", rep->jtilde.first_difference(rep->jtilde.galois(-1)));
  std::vector<CycNumber> w(n);
  for (std::size_t s = 0; s < n; ++s) w[s] = rep->thetas[s] * rep->thetas[s] / rep->weights[s];
  const ExactMatrix wm = ExactMatrix::diagonal(w);
  report.add("J J^dagger = I", multiply(j.scale_cols(w), j.conj_transpose()).first_difference(wm));
  return report;
}

ExactMatrix jtjt_matrix(const TheoryParams& params) {
  auto rep = genus2_rep(params);
  std::vector<CycNumber> tinv;
  for (const auto& t : rep->t.diagonal_entries()) tinv.push_back(t.inverse());
  const ExactMatrix jt = rep->j_plain.scale_cols(rep->t.diagonal_entries());
  return multiply(jt, rep->j_plain.scale_cols(tinv));
}

TraceResult trace_jtjt(const TheoryParams& params) {
  auto rep = genus2_rep(params);
  auto rc = recoupling_for(params);
  const std::size_t n = rep->basis.size();
  const auto t = rep->t.diagonal_entries();
  std::vector<CycNumber> tinv;
  for (const auto& v : t) tinv.push_back(v.inverse());
  TraceResult r{rc->zero(), rc->zero()};
  const ExactMatrix& j = rep->j_plain;
  for (std::size_t s = 0; s < n; ++s) {
    CycNumber row = rc->zero();
    for (std::size_t m = 0; m < n; ++m) {
      if (j(s, m).is_zero()) continue;
      row += tinv[m] * j(s, m) * j(m, s);
    }
    r.double_sum += t[s] * row;
  }
  r.matrix_trace = jtjt_matrix(params).trace();
  return r;
}

double unitarity_defect(const TheoryParams& params) {
  auto rep = genus2_rep(params);
  auto rc = recoupling_for(params);
  const std::size_t n = rep->basis.size();
  const double d2 = embed(rc->global_constants().d_squared).real();
  std::vector<double> s(n);
  for (std::size_t a = 0; a < n; ++a) s[a] = std::sqrt(embed(rep->weights[a]).real()) / embed(rep->thetas[a]).real();
  std::vector<std::complex<double>> u(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) u[a * n + b] = s[a] * s[b] / d2 * embed(rep->jtilde(a, b));
  double worst = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::complex<double> acc = 0;
      for (std::size_t c = 0; c < n; ++c) acc += u[a * n + c] * std::conj(u[b * n + c]);
      if (a == b) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  return worst;
}

}  // namespace heckerep
