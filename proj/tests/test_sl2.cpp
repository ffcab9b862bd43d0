#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <numbers>

#include "heckerep/errors.hpp"
#include "heckerep/sl2_hecke/sl2.hpp"
#include "heckerep/sl2_hecke/thurston.hpp"
#include "support.hpp"

using namespace heckerep;
using testing::Gen;

namespace {

using M2 = std::array<double, 4>;

M2 mul(const M2& x, const M2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}
M2 inv(const M2& x) { return {x[3], -x[1], -x[2], x[0]}; }

// Random word over A, B, J with exponents, returned as text and as a float matrix.
std::pair<std::string, M2> random_word(Gen& g, int q, int length) {
  const double l = 2 * std::cos(std::numbers::pi / q);
  const std::map<char, M2> gens = {{'A', {1, l, 0, 1}}, {'B', {1, 0, -l, 1}}, {'J', {0, -1, 1, 0}}};
  std::string text;
  M2 acc{1, 0, 0, 1};
  for (int k = 0; k < length; ++k) {
    const char s = "ABJ"[g.integer(0, 2)];
    const long e = g.integer(-3, 3);
    text += std::string(text.empty() ? "" : " ") + s + (e == 1 ? "" : "^" + std::to_string(e));
    M2 f = e >= 0 ? gens.at(s) : inv(gens.at(s));
    for (long t = 0; t < std::labs(e); ++t) acc = mul(acc, f);
  }
  return {text, acc};
}

MulticurveData random_connected(Gen& g) {
  for (;;) {
    MulticurveData d;
    const std::size_t n = g.integer(1, 5), m = g.integer(1, 5);
    d.n.assign(n, std::vector<long>(m, 0));
    for (auto& row : d.n)
      for (auto& x : row) x = g.integer(0, 2) == 0 ? g.integer(1, 3) : 0;
    for (std::size_t i = 0; i < n; ++i) d.p.push_back(g.integer(1, 3));
    for (std::size_t j = 0; j < m; ++j) d.q.push_back(g.integer(1, 3));
    try {
      thurston_rep(d);
      return d;
    } catch (const NotPrimitive&) {
    } catch (const std::invalid_argument&) {
    }
  }
}

}  // namespace

TEST_CASE("generators have determinant one and lambda = 2cos(pi/q)") {
  for (int q = 3; q <= 15; q += 2) {
    const HeckeGenerators g = hecke_generators(q);
    CHECK(g.lambda.to_double() == doctest::Approx(2 * std::cos(std::numbers::pi / q)).epsilon(1e-14));
    for (const SL2Matrix* m : {&g.A, &g.B, &g.J}) CHECK(m->det() == RealCycNumber(g.lambda.order(), 1));
  }
  CHECK_THROWS_AS(hecke_generators(4), std::invalid_argument);
  CHECK_THROWS_AS(hecke_generators(1), std::invalid_argument);
}

TEST_CASE("RealCycNumber rejects non-real values") {
  CHECK_THROWS_AS(RealCycNumber(CycNumber::zeta(10)), std::invalid_argument);
  CHECK_NOTHROW(RealCycNumber(CycNumber::zeta(10) + CycNumber::zeta(10, -1)));
}

TEST_CASE("random words keep determinant one and match float products") {
  Gen g(41);
  for (int trial = 0; trial < 80; ++trial) {
    const int q = 2 * static_cast<int>(g.integer(1, 7)) + 1;
    const auto [text, expect] = random_word(g, q, static_cast<int>(g.integer(1, 8)));
    const SL2Matrix m = eval_word(text, q);
    CHECK(m.det() == RealCycNumber(m.a.order(), 1));
    const M2 got = m.to_double();
    double scale = 1;
    for (double x : expect) scale = std::max(scale, std::abs(x));
    for (int k = 0; k < 4; ++k) CHECK(std::abs(got[k] - expect[k]) < 1e-9 * scale);
  }
}

TEST_CASE("word syntax") {
  const HeckeGenerators g = hecke_generators(5);
  CHECK(eval_word(parse_word("(A B)^5"), g) == SL2Matrix::scalar(g.lambda.order(), -1));
  CHECK(eval_word(parse_word("(AB)^{5}"), g) == eval_word(parse_word("A*B*A*B*A*B*A*B*A*B"), g));
  CHECK(eval_word(parse_word("A^-1 A"), g) == SL2Matrix::identity(g.lambda.order()));
  CHECK(eval_word(parse_word("((A B)^2 J)^-1"), g) == eval_word(parse_word("(A B)^2 J"), g).inverse());
  CHECK(eval_word(parse_word(""), g) == SL2Matrix::identity(g.lambda.order()));
  for (const char* bad : {"A^", "(A B", "A)B", "C", "A^x", "A^{2"}) CHECK_THROWS_AS(parse_word(bad), std::invalid_argument);
  Gen gen(42);
  for (int trial = 0; trial < 40; ++trial) {
    const std::string text = random_word(gen, 5, 6).first;
    const Word w = parse_word(text);
    CHECK(eval_word(parse_word(to_string(w)), g) == eval_word(w, g));
  }
}

TEST_CASE("AB has order q in PSL and 2q in SL for lambda < 2") {
  for (int q = 3; q <= 15; q += 2) {
    const HeckeGenerators g = hecke_generators(q);
    const SL2Matrix ab = g.A * g.B;
    const int order = g.lambda.order();
    CHECK(pow(ab, q) == SL2Matrix::scalar(order, -1));
    CHECK(pow(ab, 2 * q) == SL2Matrix::identity(order));
    for (int e = 1; e < q; ++e) CHECK(pow(ab, e) != SL2Matrix::scalar(order, -1));
  }
}

TEST_CASE("no power of AB is +-I once lambda >= 2") {
  const RealCycNumber golden2 = RealCycNumber::two_cos_pi_over(5) * RealCycNumber(10, 2);  // 1 + sqrt 5
  for (const RealCycNumber& lambda : {RealCycNumber(10, 2), RealCycNumber(10, 3), golden2}) {
    const SL2Matrix ab = upper_translation(lambda) * lower_translation(lambda);
    SL2Matrix m = SL2Matrix::identity(10);
    for (int e = 1; e <= 50; ++e) {
      m = m * ab;
      CHECK(m != SL2Matrix::identity(10));
      CHECK(m != SL2Matrix::scalar(10, -1));
    }
    CHECK(classify(ab) != Sl2Class::Elliptic);
  }
}

TEST_CASE("presentation of the Hecke group") {
  for (int q = 3; q <= 15; q += 2) {
    const RelationReport rep = verify_presentation(q);
    INFO("q = " << q);
    for (const auto& r : rep.results) CHECK_MESSAGE(r.pass, r.relation);
  }
}

TEST_CASE("hyperelliptic involution maps to -I") {
  for (int g = 1; g <= 7; ++g) CHECK(hyperelliptic_image_check(g).all_pass());
}

TEST_CASE("classification by trace is conjugation invariant") {
  Gen g(43);
  const int q = 7;
  const HeckeGenerators gens = hecke_generators(q);
  CHECK(classify(gens.A) == Sl2Class::Parabolic);
  CHECK(classify(gens.J) == Sl2Class::Elliptic);
  CHECK(classify(gens.A * gens.B) == Sl2Class::Elliptic);
  for (int trial = 0; trial < 60; ++trial) {
    const SL2Matrix m = eval_word(random_word(g, q, 4).first, q);
    const SL2Matrix c = eval_word(random_word(g, q, 5).first, q);
    const Sl2Class cls = classify(m);
    CHECK(classify(c * m * c.inverse()) == cls);
    // agreement with the float trace away from the boundary
    const double t = std::abs(m.trace().to_double());
    if (std::abs(t - 2) > 1e-6) CHECK((cls == Sl2Class::Hyperbolic) == (t > 2));
  }
}

TEST_CASE("type-A paths give mu = 2cos(pi/(L+1)) exactly") {
  for (int g = 1; g <= 7; ++g) {
    const ThurstonRep t = thurston_rep(type_a_path(2 * g));
    REQUIRE(t.mu_exact.has_value());
    CHECK(*t.mu_exact == hecke_generators(2 * g + 1).lambda);
    CHECK(t.exact_eigenvector);
    CHECK(t.mu == doctest::Approx(2 * std::cos(std::numbers::pi / (2 * g + 1))).epsilon(1e-12));
    REQUIRE(t.ta_exact.has_value());
    CHECK(*t.ta_exact == hecke_generators(2 * g + 1).A);
  }
  for (int len = 2; len <= 14; ++len) {
    const ThurstonRep t = thurston_rep(type_a_path(len));
    CHECK(t.exact_eigenvector);
    CHECK(t.mu == doctest::Approx(2 * std::cos(std::numbers::pi / (len + 1))).epsilon(1e-12));
  }
}

TEST_CASE("doubling an end vertex of a path gives the B_n Coxeter norm") {
  for (int len = 2; len <= 10; ++len) {
    MulticurveData d = type_a_path(len);
    d.p[0] = 2;  // the first alpha is an end vertex of the path
    const ThurstonRep t = thurston_rep(d);
    CHECK(t.mu == doctest::Approx(coxeter_b_norm(len)).epsilon(1e-12));
    CHECK_FALSE(t.mu_exact.has_value());
  }
}

TEST_CASE("generic multicurves solve the eigen-equations") {
  Gen g(44);
  for (int trial = 0; trial < 60; ++trial) {
    const MulticurveData d = random_connected(g);
    const ThurstonRep t = thurston_rep(d);
    CHECK(t.residual <= 1e-10);
    // residuals recomputed here, both equations, relative to max |v| = 1
    double vmax = 0, worst = 0;
    for (double x : t.v) {
      CHECK(x > 0);
      vmax = std::max(vmax, x);
    }
    CHECK(vmax == doctest::Approx(1.0));
    for (std::size_t i = 0; i < d.n.size(); ++i) {
      double acc = 0;
      for (std::size_t j = 0; j < d.q.size(); ++j) acc += d.n[i][j] * t.v_prime[j];
      worst = std::max(worst, std::abs(d.p[i] * acc - t.mu * t.v[i]));
    }
    for (std::size_t j = 0; j < d.q.size(); ++j) {
      double acc = 0;
      for (std::size_t i = 0; i < d.n.size(); ++i) acc += d.n[i][j] * t.v[i];
      worst = std::max(worst, std::abs(d.q[j] * acc - t.mu * t.v_prime[j]));
    }
    CHECK(worst <= 1e-10 * std::max(1.0, t.mu));
    CHECK(t.ta == std::array<double, 4>{1, t.mu, 0, 1});
    CHECK(t.tb == std::array<double, 4>{1, 0, -t.mu, 1});
  }
}

TEST_CASE("multicurve input validation") {
  CHECK_THROWS_AS(thurston_rep(parse_multicurve("2 2\n1 0\n0 1\n1 1\n1 1\n")), NotPrimitive);
  CHECK_THROWS_AS(parse_multicurve("2 2\n1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(thurston_rep(parse_multicurve("1 1\n1\n0\n1\n")), std::invalid_argument);
  const MulticurveData d = parse_multicurve("2 1\n1\n1\n1 1\n1\n");
  CHECK(thurston_rep(d).mu == doctest::Approx(std::sqrt(2.0)));
}
