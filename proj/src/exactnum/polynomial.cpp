#include "heckerep/exactnum/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "heckerep/errors.hpp"

namespace heckerep {

namespace {

template <class T>
std::string poly_string(const std::vector<T>& c, const std::string& var) {
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    T a = c[i];
    if (!first) out << (a < 0 ? " - " : " + ");
    else if (a < 0) out << "-";
    if (a < 0) a = -a;
    if (i == 0 || a != 1) out << a.get_str();
    if (i > 0) {
      if (a != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t exponent) {
  std::vector<Integer> v(exponent + 1);
  v[exponent] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Integer> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Integer> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Integer> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string(const std::string& var) const { return poly_string(c_, var); }

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (b.leading() != 1 && b.leading() != -1)
    throw std::invalid_argument("divide_exact needs a unit leading coefficient");
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return IntPolynomial{};
    return std::nullopt;
  }
  std::vector<Integer> rem = a.coeffs();
  const auto& d = b.coeffs();
  const int db = b.degree();
  std::vector<Integer> q(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Integer f = rem[i] * b.leading();  // leading is +-1
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * d[j];
  }
  for (int i = 0; i < db; ++i)
    if (rem[i] != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

const IntPolynomial& cyclotomic_poly(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: order must be >= 1");
  static std::mutex mu;
  static std::map<int, IntPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  IntPolynomial p = IntPolynomial::monomial(1, n) - IntPolynomial{1};
  for (int d : divisors(n)) {
    if (d == n) continue;
    p = *divide_exact(p, cyclotomic_poly(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

bool is_cyclotomic(const IntPolynomial& p) {
  if (p.degree() < 1 || !p.is_monic()) throw NonMonic("is_cyclotomic expects a monic polynomial of degree >= 1");
  const int d = p.degree();
  // phi(n) >= sqrt(n/2), so n <= 2 d^2.
  for (int n = 1; n <= 2 * d * d + 2; ++n)
    if (euler_phi(n) == d && cyclotomic_poly(n) == p) return true;
  return false;
}

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& v : c_) v.canonicalize();
  trim();
}

RatPolynomial::RatPolynomial(const IntPolynomial& p) {
  for (const auto& v : p.coeffs()) c_.emplace_back(v);
}

void RatPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPolynomial RatPolynomial::operator+(const RatPolynomial& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RatPolynomial(std::move(r));
}

RatPolynomial RatPolynomial::operator-(const RatPolynomial& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return RatPolynomial(std::move(r));
}

RatPolynomial RatPolynomial::operator*(const RatPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return RatPolynomial(std::move(r));
}

RatPolynomial RatPolynomial::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> r = c_;
  Rational lc = c_.back();
  for (auto& v : r) v /= lc;
  return RatPolynomial(std::move(r));
}

std::optional<IntPolynomial> RatPolynomial::to_integer() const {
  std::vector<Integer> r;
  r.reserve(c_.size());
  for (const auto& v : c_) {
    if (v.get_den() != 1) return std::nullopt;
    r.push_back(v.get_num());
  }
  return IntPolynomial(std::move(r));
}

std::string RatPolynomial::to_string(const std::string& var) const { return poly_string(c_, var); }

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (a.degree() < b.degree()) return {RatPolynomial{}, a};
  std::vector<Rational> rem = a.coeffs();
  const auto& d = b.coeffs();
  const int db = b.degree();
  std::vector<Rational> q(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / b.leading();
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * d[j];
  }
  rem.resize(db);
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(rem))};
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RatPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

}  // namespace heckerep
