#include "heckerep/rep_genus2/certificates.hpp"

#include <cmath>

#include "heckerep/recoupling/evaluator.hpp"
#include "heckerep/recoupling/verlinde.hpp"
#include "heckerep/rep_genus2/matrices.hpp"

namespace heckerep {

namespace {

RatPolynomial derivative(const RatPolynomial& p) {
  std::vector<Rational> d;
  for (int i = 1; i <= p.degree(); ++i) d.push_back(p.coeff(i) * i);
  return RatPolynomial(std::move(d));
}

}  // namespace

RatPolynomial non_cyclotomic_part(const RatPolynomial& p) {
  if (p.degree() < 1) return RatPolynomial(std::vector<Rational>{1});
  RatPolynomial rad = divmod(p, gcd(p, derivative(p))).first.monic();
  for (int n = 1; rad.degree() > 0 && n <= 2 * rad.degree() * rad.degree() + 2; ++n) {
    if (euler_phi(n) > rad.degree()) continue;
    RatPolynomial phi(cyclotomic_poly(n));
    auto [q, r] = divmod(rad, phi);
    if (r.is_zero()) rad = q;
  }
  return rad.monic();
}

MinPolyCertificate minpoly_certificate(const TheoryParams& params, const std::optional<IntPolynomial>& designated) {
  const ExactMatrix m = jtjt_matrix(params);
  MinPolyCertificate c;
  const CycPolynomial field_poly = char_poly(m);
  c.rational_char_poly = rational_char_poly(m);
  c.non_cyclotomic = non_cyclotomic_part(c.rational_char_poly);
  c.fires = c.non_cyclotomic.degree() > 0;
  if (designated) {
    c.designated = designated;
    const RatPolynomial f(*designated);
    c.designated_divides_rational = divmod(c.rational_char_poly, f).second.is_zero();
    const CycPolynomial ff = CycPolynomial::from_rational(m.order(), f);
    c.designated_divides_field = divmod(field_poly, ff).second.is_zero();
    c.field_gcd_degree = gcd(field_poly, ff).degree();
    c.designated_is_cyclotomic = designated->is_monic() && is_cyclotomic(*designated);
  }
  return c;
}

TraceCertificate trace_certificate(const TheoryParams& params) {
  TraceCertificate c;
  c.trace = trace_jtjt(params).matrix_trace;
  c.dimension = verlinde_dim(params.level, 2);
  c.value = embed(c.trace).real();
  const int n = params.root_order();
  for (int u : cyclotomic_data(n).units) {
    const double mag = std::abs(embed(c.trace.galois(u)));
    if (mag > c.best_magnitude) {
      c.best_magnitude = mag;
      c.best_exponent = (params.root_exponent * u) % n;
    }
  }
  // |tr| > dim is decided exactly: compare tr * conj(tr) with dim^2.
  for (int u : cyclotomic_data(n).units) {
    const CycNumber t = c.trace.galois(u);
    const CycNumber excess = t * galois_conj_inv(t) - CycNumber(n, Rational(c.dimension * c.dimension));
    if (real_sign(excess) > 0) c.fires = true;
  }
  return c;
}

InfiniteImageReport infinite_image_certificate(const TheoryParams& params,
                                               const std::optional<IntPolynomial>& designated,
                                               std::size_t minpoly_limit) {
  InfiniteImageReport r;
  r.params = params;
  r.trace = trace_certificate(params);
  const std::size_t n = genus2_rep(params)->basis.size();
  if (designated || n <= minpoly_limit) {
    r.minpoly = minpoly_certificate(params, designated);
  } else {
    r.notes.push_back("minimal-polynomial route skipped: basis has " + std::to_string(n) + " elements");
  }
  const bool fires = r.trace.fires || (r.minpoly && r.minpoly->fires);
  r.verdict = fires ? "infinite" : "inconclusive";
  return r;
}

}  // namespace heckerep
