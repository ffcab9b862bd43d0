#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heckerep/errors.hpp"
#include "heckerep/recoupling/evaluator.hpp"
#include "heckerep/recoupling/verlinde.hpp"
#include "heckerep/rep_genus2/certificates.hpp"
#include "heckerep/rep_genus2/matrices.hpp"
#include "support.hpp"

using namespace heckerep;

namespace {

// J~ straight from the defining sum, in complex doubles.
std::vector<std::vector<testing::cplx>> float_jtilde(const TheoryParams& p) {
  const testing::FloatRecoupling f(testing::float_root(p), p.level), fb = f.bar();
  const Genus2Basis basis = enumerate_basis(p);
  const std::size_t n = basis.size();
  std::vector<std::vector<testing::cplx>> out(n, std::vector<testing::cplx>(n));
  for (std::size_t s = 0; s < n; ++s) {
    const auto [i1, j1, k1] = basis[s];
    for (std::size_t m = 0; m < n; ++m) {
      const auto [i2, j2, k2] = basis[m];
      testing::cplx acc = 0;
      for (int l : f.colors()) {
        if (!f.admissible(l, i2, i2) || !f.admissible(l, k2, k2) || !f.admissible(l, j1, j1) || !f.admissible(l, i1, i1))
          continue;
        acc += f.coupling(j1, i2, l) * fb.coupling(k2, i1, l) / f.delta(l) * f.tet(l, i2, i2, j2, k2, k2) *
               f.tet(l, j1, j1, k1, i1, i1);
      }
      out[s][m] = acc;
    }
  }
  return out;
}

bool passes(const RelationReport& rep, const std::string& relation) {
  for (const auto& r : rep.results)
    if (r.relation == relation) return r.pass;
  FAIL("relation not reported: " << relation);
  return false;
}

}  // namespace

TEST_CASE("basis is the set of admissible triples in dictionary order") {
  for (int r = 1; r <= 12; ++r) {
    const TheoryParams p = TheoryParams::unitary(r);
    const Genus2Basis b = enumerate_basis(p);
    CHECK(Integer(b.size()) == verlinde_dim(r, 2));
    CHECK(std::is_sorted(b.triples.begin(), b.triples.end()));
    std::size_t count = 0;
    for (int i : color_set(p))
      for (int j : color_set(p))
        for (int k : color_set(p)) count += admissible(i, j, k, r);
    CHECK(count == b.size());
    for (std::size_t n = 0; n < b.size(); ++n) {
      CHECK(admissible(b[n][0], b[n][1], b[n][2], r));
      CHECK(b.index_of(b[n]) == n);
    }
    CHECK_FALSE(b.index_of({0, 0, 2}).has_value());
  }
}

TEST_CASE("parallel assembly equals the serial reference") {
  for (int r = 1; r <= 6; ++r) {
    const TheoryParams p = TheoryParams::unitary(r);
    CHECK(jtilde_uncached(p) == jtilde_reference(p));
    CHECK(jtilde(p) == jtilde_reference(p));
  }
  CHECK(jtilde_uncached(TheoryParams::at_root(5, 3)) == jtilde_reference(TheoryParams::at_root(5, 3)));
}

TEST_CASE("J~ agrees with a float evaluation of its defining sum") {
  for (int r = 2; r <= 6; ++r) {
    const TheoryParams p = TheoryParams::unitary(r);
    const auto expect = float_jtilde(p);
    double scale = 0;
    for (const auto& row : expect)
      for (const auto& x : row) scale = std::max(scale, std::abs(x));
    CHECK(testing::max_abs_diff(jtilde(p), expect) < 1e-9 * scale);
  }
}

TEST_CASE("genus-2 relations hold exactly for r <= 8") {
  for (int r = 1; r <= 8; ++r) {
    const RelationReport rep = verify_genus2_relations(TheoryParams::unitary(r));
    INFO("r = " << r);
    for (const auto& res : rep.results) CHECK_MESSAGE(res.pass, res.relation);
  }
}

TEST_CASE("first row law of the unitary J") {
  for (int r = 1; r <= 8; ++r) {
    const TheoryParams p = TheoryParams::unitary(r);
    const auto rc = recoupling_for(p);
    const SurdMatrix j = j_unitary(p);
    const Genus2Basis b = enumerate_basis(p);
    const CycNumber d2 = rc->global_constants().d_squared;
    REQUIRE(b[0] == Triple{0, 0, 0});
    for (std::size_t m = 0; m < b.size(); ++m) {
      const CycNumber law = rc->delta(b[m][0]) * rc->delta(b[m][1]) * rc->delta(b[m][2]) / (d2 * d2);
      CHECK(j(0, m).square == law);
      CHECK(j(0, m).sign == 1);
    }
  }
}

TEST_CASE("unitary J is orthogonal numerically") {
  for (int r = 1; r <= 9; ++r) CHECK(unitarity_defect(TheoryParams::unitary(r)) < 1e-10);
}

TEST_CASE("j_unitary carries exact roots when they lie in the field") {
  const SurdMatrix j = j_unitary(TheoryParams::unitary(2), true);
  for (std::size_t a = 0; a < j.rows(); ++a)
    for (std::size_t b = 0; b < j.cols(); ++b) {
      REQUIRE(j(a, b).exact.has_value());
      CHECK(j(a, b).equals(*j(a, b).exact));
    }
}

TEST_CASE("double-sum trace equals the matrix trace") {
  for (int r = 1; r <= 9; ++r) {
    const TraceResult t = trace_jtjt(TheoryParams::unitary(r));
    CHECK(t.agree());
  }
}

TEST_CASE("Galois equivariance of the genus-2 matrices") {
  for (int r = 2; r <= 5; ++r) {
    const TheoryParams base = TheoryParams::at_root(r, 1);
    const ExactMatrix jt = jtilde(base), jp = j_plain(base), t = t_genus2(base);
    for (int u : cyclotomic_data(base.root_order()).units) {
      const TheoryParams p = TheoryParams::at_root(r, u);
      INFO("r = " << r << ", k = " << u);
      CHECK(jtilde(p) == jt.galois(u));
      CHECK(j_plain(p) == jp.galois(u));
      CHECK(t_genus2(p) == t.galois(u));
      const RelationReport rep = verify_genus2_relations(p);
      CHECK(passes(rep, "J^2 = I"));
      CHECK(passes(rep, "(TJ)^5 = (P+/P-)^2 I"));
      CHECK(passes(rep, "J = J^T"));
    }
  }
}

TEST_CASE("unitary normalization needs positive weights") {
  // At this conjugate Delta_2 is the negative Galois conjugate of the golden ratio.
  const TheoryParams p = TheoryParams::at_root(3, 1);
  REQUIRE(real_sign(recoupling_for(p)->delta(2)) < 0);
  CHECK_THROWS_AS(j_unitary(p), NotPositive);
  CHECK_NOTHROW(j_plain(p));
}

TEST_CASE("non_cyclotomic_part strips cyclotomic factors and repeats") {
  const RatPolynomial quartic(IntPolynomial{1, -3, 3, -3, 1});
  const RatPolynomial phi3(cyclotomic_poly(3)), phi12(cyclotomic_poly(12));
  CHECK(non_cyclotomic_part(phi3 * phi3 * quartic * phi12) == quartic);
  CHECK(non_cyclotomic_part(quartic * quartic) == quartic);
  CHECK(non_cyclotomic_part(phi3 * phi12).degree() == 0);
}

TEST_CASE("minimal polynomial certificate at r = 3") {
  const MinPolyCertificate c = minpoly_certificate(TheoryParams::unitary(3), IntPolynomial{1, -3, 3, -3, 1});
  CHECK(c.fires);
  CHECK(c.designated_divides_rational);
  CHECK_FALSE(c.designated_is_cyclotomic);
  CHECK(c.non_cyclotomic == RatPolynomial(IntPolynomial{1, -3, 3, -3, 1}));
  CHECK(c.rational_char_poly.degree() == 5 * euler_phi(10));
}

TEST_CASE("Ising image is finite, so no certificate fires at r = 2") {
  const InfiniteImageReport r = infinite_image_certificate(TheoryParams::unitary(2));
  REQUIRE(r.minpoly.has_value());
  CHECK_FALSE(r.minpoly->fires);
  CHECK_FALSE(r.trace.fires);
  CHECK(r.verdict == "inconclusive");
}

TEST_CASE("trace certificate fires once the trace exceeds the dimension") {
  const TraceCertificate c3 = trace_certificate(TheoryParams::at_root(3, 1));
  CHECK_FALSE(c3.fires);
  const TraceCertificate c7 = trace_certificate(TheoryParams::at_root(7, 1));
  CHECK(c7.fires);
  CHECK(c7.value > c7.dimension.get_d());
}
