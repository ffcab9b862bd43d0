#include "heckerep/exactnum/laurent.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

#include "heckerep/errors.hpp"

namespace heckerep {

LaurentPoly::LaurentPoly(long low, std::vector<Rational> coeffs) : low_(low), c_(std::move(coeffs)) {
  for (auto& v : c_) v.canonicalize();
  trim();
}

LaurentPoly LaurentPoly::constant(const Rational& c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::monomial(const Rational& c, long exponent) { return LaurentPoly(exponent, {c}); }

LaurentPoly LaurentPoly::from_polynomial(const IntPolynomial& p, long shift) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return LaurentPoly(shift, std::move(c));
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + lead);
    low_ += static_cast<long>(lead);
  }
  if (c_.empty()) low_ = 0;
}

Rational LaurentPoly::coeff(long exponent) const {
  long i = exponent - low_;
  if (i < 0 || i >= static_cast<long>(c_.size())) return 0;
  return c_[i];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
  std::vector<Rational> r(hi - lo + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) r[low_ - lo + i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[o.low_ - lo + i] += o.c_[i];
  return LaurentPoly(lo, std::move(r));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  // Integer fast path: most recoupling polynomials have integral coefficients.
  bool integral = true;
  for (const auto& v : c_)
    if (v.get_den() != 1) integral = false;
  for (const auto& v : o.c_)
    if (v.get_den() != 1) integral = false;
  const std::size_t n = c_.size() + o.c_.size() - 1;
  std::vector<Rational> r(n);
  if (integral) {
    std::vector<Integer> acc(n);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const mpz_srcptr a = c_[i].get_num_mpz_t();
      if (mpz_sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) {
        const mpz_srcptr b = o.c_[j].get_num_mpz_t();
        if (mpz_sgn(b) != 0) mpz_addmul(acc[i + j].get_mpz_t(), a, b);
      }
    }
    for (std::size_t k = 0; k < n; ++k) r[k] = Rational(acc[k]);
  } else {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
    }
  }
  return LaurentPoly(low_ + o.low_, std::move(r));
}

LaurentPoly LaurentPoly::shifted(long e) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += e;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  std::vector<Rational> r(c_.rbegin(), c_.rend());
  return LaurentPoly(-high(), std::move(r));
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const IntPolynomial& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (is_zero()) return LaurentPoly{};
  const int dd = d.degree();
  if (static_cast<int>(c_.size()) - 1 < dd) return std::nullopt;
  std::vector<Rational> rem = c_;
  std::vector<Rational> q(c_.size() - dd);
  const Rational lead(d.leading());
  for (int i = static_cast<int>(c_.size()) - 1; i >= dd; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / lead;
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) {
      const Integer& dj = d.coeffs()[j];
      if (dj != 0) rem[i - dd + j] -= f * dj;
    }
  }
  for (int i = 0; i < dd; ++i)
    if (rem[i] != 0) return std::nullopt;
  return LaurentPoly(low_, std::move(q));
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> a) const {
  std::complex<double> acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i].get_d();
  return acc * std::pow(a, static_cast<double>(low_));
}

CycNumber LaurentPoly::specialize(int order, long k) const {
  std::vector<std::pair<long, Rational>> terms;
  terms.reserve(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) terms.emplace_back(k * (low_ + static_cast<long>(i)), c_[i]);
  return CycNumber::from_exponent_sum(order, terms);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    Rational c = c_[i];
    if (c == 0) continue;
    long e = low_ + static_cast<long>(i);
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    if (c < 0) c = -c;
    if (e == 0 || c != 1) out << c.get_str();
    if (e != 0) {
      if (c != 1) out << "*";
      out << "A";
      if (e != 1) out << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    first = false;
  }
  return out.str();
}

namespace {

RatPolynomial ordinary(const LaurentPoly& p) { return RatPolynomial(p.coeffs()); }

}  // namespace

LaurentFraction::LaurentFraction() : num_(), den_(LaurentPoly::constant(1)) {}

LaurentFraction::LaurentFraction(const LaurentPoly& num) : LaurentFraction(num, LaurentPoly::constant(1)) {}

LaurentFraction::LaurentFraction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw PoleAtRoot("LaurentFraction with zero denominator");
  if (num.is_zero()) {
    den_ = LaurentPoly::constant(1);
    return;
  }
  const long shift = num.low() - den.low();
  RatPolynomial n = ordinary(num), d = ordinary(den);
  if (d.degree() > 0) {
    RatPolynomial g = gcd(n, d);
    if (g.degree() > 0) {
      n = divmod(n, g).first;
      d = divmod(d, g).first;
    }
  }
  Rational lc = d.leading();
  std::vector<Rational> nc = n.coeffs(), dc = d.coeffs();
  for (auto& v : nc) v /= lc;
  for (auto& v : dc) v /= lc;
  num_ = LaurentPoly(shift, std::move(nc));
  den_ = LaurentPoly(0, std::move(dc));
}

LaurentFraction LaurentFraction::constant(const Rational& c) { return LaurentFraction(LaurentPoly::constant(c)); }

LaurentFraction LaurentFraction::operator-() const { return LaurentFraction(-num_, den_, Canonical{}); }

LaurentFraction LaurentFraction::operator+(const LaurentFraction& o) const {
  if (den_ == o.den_) return LaurentFraction(num_ + o.num_, den_);
  return LaurentFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

LaurentFraction LaurentFraction::operator-(const LaurentFraction& o) const { return *this + (-o); }

LaurentFraction LaurentFraction::operator*(const LaurentFraction& o) const {
  return LaurentFraction(num_ * o.num_, den_ * o.den_);
}

LaurentFraction LaurentFraction::operator/(const LaurentFraction& o) const {
  if (o.is_zero()) throw PoleAtRoot("division by zero fraction");
  return LaurentFraction(num_ * o.den_, den_ * o.num_);
}

LaurentFraction LaurentFraction::bar() const { return LaurentFraction(num_.bar(), den_.bar()); }

std::complex<double> LaurentFraction::evaluate(std::complex<double> a) const {
  return num_.evaluate(a) / den_.evaluate(a);
}

std::string LaurentFraction::to_string() const {
  if (den_ == LaurentPoly::constant(1)) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

CycNumber specialize(const LaurentFraction& f, int order, long k) {
  if (std::gcd(k, static_cast<long>(order)) != 1) throw std::invalid_argument("root exponent must be coprime to N");
  CycNumber d = f.den().specialize(order, k);
  if (d.is_zero()) throw PoleAtRoot("fraction has a pole at zeta_" + std::to_string(order) + "^" + std::to_string(k));
  return f.num().specialize(order, k) / d;
}

const LaurentPoly& cyclotomic_power(int d, int e) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, LaurentPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({d, e});
    if (it != cache.end()) return it->second;
  }
  LaurentPoly r = LaurentPoly::constant(1);
  if (e > 0) {
    LaurentPoly base = LaurentPoly::from_polynomial(cyclotomic_poly(d));
    r = e == 1 ? base : cyclotomic_power(d, e - 1) * base;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(d, e), std::move(r)).first->second;
}

CycloFraction::CycloFraction(LaurentPoly poly, std::map<int, int> exponents)
    : poly_(std::move(poly)), exp_(std::move(exponents)) {
  reduce();
}

void CycloFraction::reduce() {
  if (poly_.is_zero()) {
    exp_.clear();
    return;
  }
  for (auto it = exp_.begin(); it != exp_.end();) {
    while (it->second < 0) {
      auto q = poly_.divide_exact(cyclotomic_poly(it->first));
      if (!q) break;
      poly_ = std::move(*q);
      ++it->second;
    }
    it = it->second == 0 ? exp_.erase(it) : std::next(it);
  }
}

CycloFraction CycloFraction::operator-() const {
  CycloFraction r = *this;
  r.poly_ = -r.poly_;
  return r;
}

CycloFraction CycloFraction::operator*(const CycloFraction& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::map<int, int> e = exp_;
  for (const auto& [d, k] : o.exp_) e[d] += k;
  return CycloFraction(poly_ * o.poly_, std::move(e));
}

CycloFraction CycloFraction::operator/(const CycloFraction& o) const {
  if (o.is_zero()) throw PoleAtRoot("division by zero");
  if (!o.poly_.is_monomial()) throw std::invalid_argument("CycloFraction division needs a factored divisor");
  Rational c = o.poly_.coeffs()[0];
  LaurentPoly inv = LaurentPoly::monomial(1 / c, -o.poly_.low());
  std::map<int, int> e = exp_;
  for (const auto& [d, k] : o.exp_) e[d] -= k;
  return CycloFraction(poly_ * inv, std::move(e));
}

CycloFraction CycloFraction::operator+(const CycloFraction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  std::map<int, int> common;
  for (const auto& [d, k] : exp_) common[d] = std::min(k, o.exp_.count(d) ? o.exp_.at(d) : 0);
  for (const auto& [d, k] : o.exp_) common[d] = std::min(k, exp_.count(d) ? exp_.at(d) : 0);
  auto lift = [&](const CycloFraction& x) {
    LaurentPoly p = x.poly_;
    for (const auto& [d, k] : x.exp_) {
      int extra = k - common[d];
      if (extra > 0) p = p * cyclotomic_power(d, extra);
    }
    for (const auto& [d, k] : common) {
      if (x.exp_.count(d)) continue;
      int extra = -k;
      if (extra > 0) p = p * cyclotomic_power(d, extra);
    }
    return p;
  };
  return CycloFraction(lift(*this) + lift(o), std::move(common));
}

CycloFraction CycloFraction::bar() const {
  // Phi_d(1/A) = A^{-phi(d)} Phi_d(A) for d >= 2, and Phi_1(1/A) = -A^{-1} Phi_1(A).
  LaurentPoly p = poly_.bar();
  long shift = 0;
  int sign = 1;
  for (const auto& [d, k] : exp_) {
    shift -= static_cast<long>(euler_phi(d)) * k;
    if (d == 1 && (k % 2 != 0)) sign = -sign;
  }
  p = p.shifted(shift);
  if (sign < 0) p = -p;
  return CycloFraction(std::move(p), exp_);
}

LaurentFraction CycloFraction::to_fraction() const {
  if (is_zero()) return LaurentFraction();
  LaurentPoly num = poly_, den = LaurentPoly::constant(1);
  for (const auto& [d, k] : exp_) {
    if (k > 0) num = num * cyclotomic_power(d, k);
    else den = den * cyclotomic_power(d, -k);
  }
  // den is monic with constant term +-1; reduced because poly_ has no Phi_d factor for e_d < 0.
  return LaurentFraction(num, den, LaurentFraction::Canonical{});
}

CycNumber CycloFraction::specialize(int order, long k) const {
  if (std::gcd(k, static_cast<long>(order)) != 1) throw std::invalid_argument("root exponent must be coprime to N");
  if (is_zero()) return CycNumber(order);
  // Phi_d(zeta_N^k) = 0 exactly when d = N.
  auto it = exp_.find(order);
  if (it != exp_.end()) {
    if (it->second > 0) return CycNumber(order);
    throw PoleAtRoot("pole of order " + std::to_string(-it->second) + " at zeta_" + std::to_string(order));
  }
  CycNumber v = poly_.specialize(order, k);
  for (const auto& [d, e] : exp_) {
    CycNumber f = LaurentPoly::from_polynomial(cyclotomic_poly(d)).specialize(order, k);
    v *= f.pow(e);
  }
  return v;
}

}  // namespace heckerep
