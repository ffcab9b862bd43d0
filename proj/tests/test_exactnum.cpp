#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heckerep/errors.hpp"
#include "heckerep/exactnum/serialize.hpp"
#include "support.hpp"

using namespace heckerep;
using testing::Gen;

namespace {

const std::vector<int> kOrders = {1, 3, 4, 5, 8, 10, 12, 16, 20, 24, 28, 32};

LaurentFraction random_fraction(Gen& g) {
  return LaurentFraction(g.laurent(), g.denominator());
}

bool regular(const LaurentFraction& f, int order, long k) {
  try {
    specialize(f, order, k);
    return true;
  } catch (const PoleAtRoot&) {
    return false;
  }
}

long random_unit(Gen& g, int order) { return g.pick(cyclotomic_data(order).units); }

}  // namespace

TEST_CASE("field axioms on random elements") {
  Gen g(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = g.pick(kOrders);
    const CycNumber a = g.cyc(n), b = g.cyc(n), c = g.cyc(n);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == CycNumber(n));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == CycNumber(n, 1L));
      CHECK((b / a) * a == b);
    }
  }
  CHECK_THROWS_AS(CycNumber(5).inverse(), std::domain_error);
}

TEST_CASE("zeta powers reduce modulo the cyclotomic polynomial") {
  for (int n : kOrders) {
    CHECK(CycNumber::zeta(n, n) == CycNumber(n, 1L));
    CHECK(CycNumber::zeta(n, -1) * CycNumber::zeta(n, 1) == CycNumber(n, 1L));
    // sum of all N-th roots of unity vanishes for N > 1
    CycNumber s(n);
    for (int e = 0; e < n; ++e) s += CycNumber::zeta(n, e);
    CHECK(s == (n == 1 ? CycNumber(1, 1L) : CycNumber(n)));
  }
}

TEST_CASE("galois_conj_inv is an involutive ring homomorphism") {
  Gen g(12);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = g.pick(kOrders);
    const CycNumber a = g.cyc(n), b = g.cyc(n);
    CHECK(galois_conj_inv(galois_conj_inv(a)) == a);
    CHECK(galois_conj_inv(a + b) == galois_conj_inv(a) + galois_conj_inv(b));
    CHECK(galois_conj_inv(a * b) == galois_conj_inv(a) * galois_conj_inv(b));
    // complex conjugation at the standard embedding
    CHECK(std::abs(embed(galois_conj_inv(a)) - std::conj(embed(a))) < 1e-9);
  }
}

TEST_CASE("galois automorphisms compose and fix the norm") {
  Gen g(13);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = g.pick(kOrders);
    const CycNumber a = g.cyc(n);
    const long u = random_unit(g, n), v = random_unit(g, n);
    CHECK(a.galois(u).galois(v) == a.galois(u * v % n));
    CHECK(a.galois(u).norm() == a.norm());
  }
}

TEST_CASE("specialize is a ring homomorphism where regular") {
  Gen g(14);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = g.pick(std::vector<int>{8, 10, 12, 16, 20, 24});
    const long k = random_unit(g, n);
    const LaurentFraction f = random_fraction(g), h = random_fraction(g);
    const LaurentFraction prod = f * h, sum = f + h;
    if (!regular(f, n, k) || !regular(h, n, k)) continue;
    if (regular(prod, n, k)) CHECK(specialize(prod, n, k) == specialize(f, n, k) * specialize(h, n, k));
    if (regular(sum, n, k)) CHECK(specialize(sum, n, k) == specialize(f, n, k) + specialize(h, n, k));
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("embed of a specialization matches direct float evaluation") {
  Gen g(15);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = g.pick(std::vector<int>{8, 10, 12, 16, 20, 24, 28});
    const long k = random_unit(g, n);
    const LaurentFraction f = random_fraction(g);
    if (!regular(f, n, k)) continue;
    const auto direct = f.evaluate(testing::root_value(n, k));
    CHECK(std::abs(embed(specialize(f, n, k)) - direct) < 1e-10 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("a zero denominator at the root is reported as a pole") {
  // 1 / Phi_8(A) at A = zeta_8
  const LaurentFraction f(LaurentPoly::constant(1), LaurentPoly::from_polynomial(cyclotomic_poly(8)));
  CHECK_THROWS_AS(specialize(f, 8, 1), PoleAtRoot);
  CHECK_NOTHROW(specialize(f, 16, 1));
}

TEST_CASE("laurent fractions stay reduced") {
  Gen g(16);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentFraction f = random_fraction(g), h = random_fraction(g);
    if (h.is_zero()) continue;
    CHECK((f * h) / h == f);
    CHECK((f + h) - h == f);
    CHECK(f.bar().bar() == f);
    CHECK((f * h).bar() == f.bar() * h.bar());
  }
}

TEST_CASE("cyclotomic polynomials factor x^N - 1") {
  for (int n = 1; n <= 40; ++n) {
    IntPolynomial xn1 = IntPolynomial::monomial(1, n) - IntPolynomial{1};
    CHECK(divide_exact(xn1, cyclotomic_poly(n)).has_value());
    IntPolynomial prod{1};
    for (int d : divisors(n)) prod = prod * cyclotomic_poly(d);
    CHECK(prod == xn1);
    CHECK(cyclotomic_poly(n).degree() == euler_phi(n));
    CHECK(is_cyclotomic(cyclotomic_poly(n)));
  }
}

TEST_CASE("is_cyclotomic rejects non-cyclotomic and non-monic input") {
  CHECK_FALSE(is_cyclotomic(IntPolynomial{1, -3, 3, -3, 1}));
  CHECK_FALSE(is_cyclotomic(IntPolynomial{1, 1, 1, 1}));  // Phi_4 * Phi_2 is not a single Phi_n
  CHECK_THROWS_AS(is_cyclotomic(IntPolynomial{1, 2}), NonMonic);
  CHECK_THROWS_AS(is_cyclotomic(IntPolynomial{5}), NonMonic);
}

TEST_CASE("modular product equals the schoolbook reference") {
  Gen g(17);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = g.pick(std::vector<int>{5, 12, 16, 20});
    const std::size_t a = g.integer(1, 7), b = g.integer(1, 7), c = g.integer(1, 7);
    const ExactMatrix x = g.matrix(a, b, n), y = g.matrix(b, c, n);
    CHECK(multiply(x, y) == multiply_reference(x, y));
  }
  for (int trial = 0; trial < 8; ++trial) {
    const int n = g.pick(std::vector<int>{8, 20});
    const ExactMatrix x = g.matrix(4, 4, n, 2);
    const unsigned e = static_cast<unsigned>(g.integer(0, 6));
    CHECK(power(x, e) == power_reference(x, e));
  }
}

TEST_CASE("char_poly of a block-diagonal matrix is the product of block polynomials") {
  Gen g(18);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = g.pick(std::vector<int>{5, 8, 12});
    const std::size_t p = g.integer(1, 4), q = g.integer(1, 4);
    const ExactMatrix a = g.matrix(p, p, n, 3), b = g.matrix(q, q, n, 3);
    ExactMatrix block(p + q, p + q, n);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) block(i, j) = a(i, j);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j) block(p + i, p + j) = b(i, j);
    CHECK(char_poly(block) == char_poly(a) * char_poly(b));
  }
}

TEST_CASE("char_poly agrees with Cayley-Hamilton") {
  Gen g(19);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = g.pick(std::vector<int>{5, 12});
    const std::size_t d = g.integer(1, 5);
    const ExactMatrix m = g.matrix(d, d, n, 3);
    const CycPolynomial chi = char_poly(m);
    REQUIRE(chi.degree() == static_cast<int>(d));
    ExactMatrix acc(d, d, n), pw = ExactMatrix::identity(d, n);
    for (const auto& c : chi.coeffs()) {
      acc = acc + pw * c;
      pw = multiply_reference(pw, m);
    }
    CHECK(acc == ExactMatrix(d, d, n));
  }
}

TEST_CASE("rational char poly of multiplication by zeta is the cyclotomic polynomial") {
  for (int n : {5, 8, 12, 20}) {
    ExactMatrix m(1, 1, n);
    m(0, 0) = CycNumber::zeta(n);
    CHECK(rational_char_poly(m) == RatPolynomial(cyclotomic_poly(n)));
  }
}

TEST_CASE("real_sign decides signs exactly") {
  const int n = 20;
  const CycNumber sqrt5 = CycNumber::zeta(n, 2) + CycNumber::zeta(n, -2);  // 2cos(pi/5) = golden ratio
  CHECK(real_sign(sqrt5) == 1);
  CHECK(real_sign(sqrt5 * sqrt5 - sqrt5 - CycNumber(n, 1L)) == 0);
  CHECK(real_sign(CycNumber(n, Rational(8, 5)) - sqrt5) < 0);
  CHECK(real_sign(CycNumber(n, Rational(17, 10)) - sqrt5) > 0);
  CHECK(real_sign(CycNumber::zeta(4)) == 0);
}

TEST_CASE("try_sqrt returns a verified positive root") {
  Gen g(20);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = g.pick(std::vector<int>{5, 8, 12, 20});
    CycNumber y = g.nonzero_cyc(n, 4);
    y = y + galois_conj_inv(y);  // real
    if (y.is_zero()) continue;
    const auto root = try_sqrt(y * y);
    REQUIRE(root.has_value());
    CHECK(*root * *root == y * y);
    CHECK(real_sign(*root) > 0);
  }
  CHECK_FALSE(try_sqrt(CycNumber(5, 2L)).has_value());  // sqrt 2 is not in Q(zeta_5)
  CHECK(try_sqrt(CycNumber(8, 2L)).has_value());
}

TEST_CASE("embed_decimal agrees with the double embedding") {
  Gen g(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = g.pick(kOrders);
    const CycNumber a = g.cyc(n);
    const auto [re, im] = embed_decimal(a, 12);
    const auto z = embed(a);
    CHECK(std::abs(std::stod(re) - z.real()) < 1e-9);
    CHECK(std::abs(std::stod(im) - z.imag()) < 1e-9);
  }
}

TEST_CASE("serialization round-trips bit-exactly") {
  Gen g(22);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = g.pick(kOrders);
    CycNumber a = g.cyc(n, 1000000);
    if (g.coin()) a *= CycNumber(n, Rational(Integer("123456789012345678901234567890"), Integer(7)));
    const auto j = to_json(a);
    CHECK(cyc_from_json(nlohmann::json::parse(j.dump())) == a);
  }
  const IntPolynomial p(std::vector<Integer>{Integer("-98765432109876543210"), 0, 3, 1});
  CHECK(int_poly_from_json(nlohmann::json::parse(to_json(p).dump())) == p);
  const ExactMatrix m = g.matrix(3, 4, 12);
  CHECK(matrix_from_json(nlohmann::json::parse(to_json(m).dump())) == m);
}
