#include "heckerep/recoupling/generic.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "heckerep/errors.hpp"
#include "heckerep/recoupling/memo.hpp"

namespace heckerep {

std::size_t cache_limit() {
  static const std::size_t limit = [] {
    const char* v = std::getenv("HECKEREP_CACHE_LIMIT");
    if (!v || !*v) return std::size_t{0};
    return static_cast<std::size_t>(std::strtoull(v, nullptr, 10));
  }();
  return limit;
}

namespace factored {

namespace {

std::string triple_str(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

void require_generic(int a, int b, int c) {
  if (!admissible_generic(a, b, c)) throw NotAdmissible("triple " + triple_str(a, b, c) + " is not admissible");
}

// Sum over a common cyclotomic denominator: one expansion per term.
CycloFraction sum_all(const std::vector<CycloFraction>& terms) {
  // Terms lacking Phi_d count as exponent 0, so every common exponent is <= 0.
  std::map<int, int> common;
  for (const auto& t : terms)
    for (const auto& [d, e] : t.exponents()) common[d] = std::min(common[d], e);
  LaurentPoly total;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    LaurentPoly p = t.poly();
    for (const auto& [d, c] : common) {
      auto it = t.exponents().find(d);
      int extra = (it == t.exponents().end() ? 0 : it->second) - c;
      if (extra > 0) p = p * cyclotomic_power(d, extra);
    }
    total = total + p;
  }
  for (auto it = common.begin(); it != common.end();) it = it->second == 0 ? common.erase(it) : std::next(it);
  return CycloFraction(std::move(total), std::move(common));
}

}  // namespace

CycloFraction qint(long n) {
  if (n == 0) return {};
  if (n < 0) return -qint(-n);
  // [n] = A^{-2(n-1)} (A^{4n} - 1)/(A^4 - 1) = A^{-2(n-1)} prod_{d | 4n, d not | 4} Phi_d(A).
  std::map<int, int> e;
  for (int d : divisors(static_cast<int>(4 * n)))
    if (4 % d != 0) e[d] = 1;
  return CycloFraction(LaurentPoly::monomial(1, -2 * (n - 1)), std::move(e));
}

CycloFraction qfact(long n) {
  if (n < 0) throw std::invalid_argument("qfact of a negative integer");
  static MemoCache<long, CycloFraction> cache;
  return cache.get(n, [n] {
    if (n <= 1) return CycloFraction::one();
    return qfact(n - 1) * qint(n);
  });
}

CycloFraction delta(int i) {
  CycloFraction q = qint(i + 1);
  return i % 2 ? -q : q;
}

CycloFraction twist(int i, TwistConvention convention) {
  const long e = convention == TwistConvention::IPlus2 ? static_cast<long>(i) * (i + 2) : static_cast<long>(i) * (i - 2);
  return CycloFraction(LaurentPoly::monomial(i % 2 ? -1 : 1, e));
}

CycloFraction theta_net(int a, int b, int c) {
  require_generic(a, b, c);
  static MemoCache<std::array<int, 3>, CycloFraction> cache;
  std::array<int, 3> key{a, b, c};
  std::sort(key.begin(), key.end());
  return cache.get(key, [&] {
    const int x = (a + b - c) / 2, y = (b + c - a) / 2, z = (c + a - b) / 2;
    CycloFraction num = qfact(x + y + z + 1) * qfact(x) * qfact(y) * qfact(z);
    CycloFraction den = qfact(x + y) * qfact(y + z) * qfact(z + x);
    CycloFraction v = num / den;
    return (x + y + z) % 2 ? -v : v;
  });
}

CycloFraction tet_kl(int a, int b, int e, int c, int d, int f) {
  require_generic(a, d, e);
  require_generic(b, c, e);
  require_generic(a, b, f);
  require_generic(c, d, f);
  static MemoCache<std::array<int, 6>, CycloFraction> cache;
  return cache.get({a, b, e, c, d, f}, [&] {
    const std::array<int, 4> v{(a + d + e) / 2, (b + c + e) / 2, (a + b + f) / 2, (c + d + f) / 2};
    const std::array<int, 3> s{(b + d + e + f) / 2, (a + c + e + f) / 2, (a + b + c + d) / 2};
    CycloFraction pre = CycloFraction::one();
    for (int ai : v)
      for (int bj : s) pre = pre * qfact(bj - ai);
    CycloFraction edges = CycloFraction::one();
    for (int x : {a, b, c, d, e, f}) edges = edges * qfact(x);
    pre = pre / edges;
    const int lo = *std::max_element(v.begin(), v.end());
    const int hi = *std::min_element(s.begin(), s.end());
    std::vector<CycloFraction> terms;
    for (int t = lo; t <= hi; ++t) {
      CycloFraction den = CycloFraction::one();
      for (int ai : v) den = den * qfact(t - ai);
      for (int bj : s) den = den * qfact(bj - t);
      CycloFraction term = qfact(t + 1) / den;
      terms.push_back(t % 2 ? -term : term);
    }
    return pre * sum_all(terms);
  });
}

CycloFraction sixj(int a, int b, int i, int c, int d, int j) {
  static MemoCache<std::array<int, 6>, CycloFraction> cache;
  return cache.get({a, b, i, c, d, j}, [&] {
    CycloFraction t = tet_kl(a, b, i, c, d, j);
    return t * delta(i) / (theta_net(a, d, i) * theta_net(b, c, i));
  });
}

CycloFraction coupling_a(int level, TwistConvention convention, int i, int j, int l, bool bar) {
  if (!admissible(i, i, l, level) || !admissible(j, j, l, level)) return {};
  static MemoCache<std::tuple<int, int, int, int, int, bool>, CycloFraction> cache;
  return cache.get({level, static_cast<int>(convention), i, j, l, bar}, [&] {
    TheoryParams p;
    p.level = level;
    std::vector<CycloFraction> terms;
    for (int k : color_set(p)) {
      if (!admissible(i, j, k, level)) continue;
      CycloFraction tw = factored::twist(i, convention) * factored::twist(j, convention) / factored::twist(k, convention);
      if (bar) tw = CycloFraction::one() / tw;
      terms.push_back(delta(k) * tw * sixj(i, j, l, j, i, k) / theta_net(i, j, k));
    }
    return sum_all(terms);
  });
}

}  // namespace factored

LaurentFraction qint(long n) { return factored::qint(n).to_fraction(); }
LaurentFraction qfact(long n) { return factored::qfact(n).to_fraction(); }
LaurentFraction delta(int i) { return factored::delta(i).to_fraction(); }
LaurentFraction twist(int i, TwistConvention convention) { return factored::twist(i, convention).to_fraction(); }
LaurentFraction theta_net(int a, int b, int c) { return factored::theta_net(a, b, c).to_fraction(); }

LaurentFraction tet(int a, int b, int e, int c, int d, int f) {
  // Vertices (a,b,e), (b,c,f), (c,d,e), (a,d,f) are the faces of Tet[a d e; c b f].
  return factored::tet_kl(a, d, e, c, b, f).to_fraction();
}

LaurentFraction sixj(int a, int b, int i, int c, int d, int j) { return factored::sixj(a, b, i, c, d, j).to_fraction(); }

LaurentFraction coupling_a(const TheoryParams& params, int i, int j, int l) {
  return factored::coupling_a(params.level, params.twist, i, j, l, false).to_fraction();
}

LaurentFraction coupling_a_bar(const TheoryParams& params, int i, int j, int l) {
  return factored::coupling_a(params.level, params.twist, i, j, l, true).to_fraction();
}

}  // namespace heckerep
