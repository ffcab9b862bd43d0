#include "heckerep/rep_genus1/modular_data.hpp"

#include "heckerep/recoupling/evaluator.hpp"

namespace heckerep {

ExactMatrix s_tilde_matrix(const TheoryParams& params) {
  auto rc = recoupling_for(params);
  const auto& c = rc->colors();
  ExactMatrix s(c.size(), c.size(), rc->order());
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b) {
      CycNumber v = rc->qint(static_cast<long>(c[a] + 1) * (c[b] + 1));
      s(a, b) = (c[a] + c[b]) % 2 ? -v : v;
    }
  return s;
}

SurdMatrix s_matrix(const TheoryParams& params) {
  auto rc = recoupling_for(params);
  const auto& g = rc->global_constants();
  const ExactMatrix st = s_tilde_matrix(params);
  SurdMatrix s(st.rows(), st.cols());
  for (std::size_t a = 0; a < st.rows(); ++a)
    for (std::size_t b = 0; b < st.cols(); ++b) {
      SurdEntry& e = s(a, b);
      e.square = st(a, b) * st(a, b) / g.d_squared;
      e.sign = real_sign(st(a, b));
      if (g.d) e.exact = st(a, b) / *g.d;
    }
  return s;
}

ExactMatrix t_matrix(const TheoryParams& params) {
  auto rc = recoupling_for(params);
  std::vector<CycNumber> d;
  for (int i : rc->colors()) d.push_back(rc->twist(i));
  return ExactMatrix::diagonal(d);
}

ModularData modular_data(const TheoryParams& params) {
  auto rc = recoupling_for(params);
  const auto& g = rc->global_constants();
  return {params, rc->colors(), s_tilde_matrix(params), s_matrix(params), t_matrix(params),
          g.d_squared, g.p_plus, g.p_minus};
}

RelationReport verify_genus1_relations(const TheoryParams& params) {
  auto rc = recoupling_for(params);
  const auto& g = rc->global_constants();
  const ExactMatrix s = s_tilde_matrix(params);
  const ExactMatrix t = t_matrix(params);
  const std::size_t n = s.rows();
  RelationReport report;
  report.notes.push_back("twist convention " + to_string(params.twist));
  report.notes.push_back("relations with odd powers of D are checked in squared form");

  report.add("S^2 = I", multiply(s, s).first_difference(ExactMatrix::scalar(n, g.d_squared)));
  const CycNumber d6 = g.d_squared * g.d_squared * g.d_squared;
  const ExactMatrix ts3 = power(multiply(t, s), 3);
  report.add("((TS)^3)^2 = (P+/P-) I",
             multiply(ts3, ts3).first_difference(ExactMatrix::scalar(n, d6 * g.kappa_squared)));
  report.add("S = S^T", s.first_difference(s.transpose()));
  report.add("S S^dagger = I", multiply(s, s.conj_transpose()).first_difference(ExactMatrix::scalar(n, g.d_squared)));
  return report;
}

}  // namespace heckerep
