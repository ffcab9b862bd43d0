#include "heckerep/exactnum/cyclotomic.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "heckerep/errors.hpp"

namespace heckerep {

namespace {

std::unique_ptr<CyclotomicData> build_data(int n) {
  auto d = std::make_unique<CyclotomicData>();
  d->order = n;
  d->modulus = cyclotomic_poly(n);
  d->phi = d->modulus.degree();
  const int phi = d->phi;
  std::vector<long> mod(phi + 1);
  for (int i = 0; i <= phi; ++i) mod[i] = d->modulus.coeff(i).get_si();

  const int size = std::max(n, 2 * phi - 1);
  d->power_table.assign(size, std::vector<long>(phi, 0));
  for (int e = 0; e < size; ++e) {
    if (e < phi) {
      d->power_table[e][e] = 1;
      continue;
    }
    // x * (x^{e-1} mod Phi), then subtract top * Phi.
    const auto& prev = d->power_table[e - 1];
    long top = prev[phi - 1];
    auto& cur = d->power_table[e];
    for (int c = phi - 1; c >= 1; --c) cur[c] = prev[c - 1];
    cur[0] = 0;
    for (int c = 0; c < phi; ++c) cur[c] -= top * mod[c];
  }
  long bound = 0;
  for (int c = 0; c < phi; ++c) {
    long s = 0;
    for (int e = 0; e < 2 * phi - 1; ++e) s += std::labs(d->power_table[e][c]);
    bound = std::max(bound, s);
  }
  d->reduction_bound = bound;
  for (int m = 1; m <= std::max(n, 1); ++m)
    if (std::gcd(m, n) == 1) d->units.push_back(m);
  return d;
}

// Reduce an integer coefficient array indexed by exponent (size <= table size).
std::vector<Integer> reduce_exponents(const CyclotomicData& d, std::vector<Integer>& acc) {
  std::vector<Integer> out(d.phi);
  for (std::size_t e = 0; e < acc.size(); ++e) {
    if (acc[e] == 0) continue;
    if (static_cast<int>(e) < d.phi) {
      out[e] += acc[e];
      continue;
    }
    const auto& row = d.power_table[e];
    for (int c = 0; c < d.phi; ++c)
      if (row[c] != 0) out[c] += acc[e] * row[c];
  }
  return out;
}

long mod_exp(long e, long n) {
  long r = e % n;
  return r < 0 ? r + n : r;
}

struct MpfrScope {
  mpfr_t re, im, t, c, s, arg;
  explicit MpfrScope(mpfr_prec_t prec) {
    mpfr_inits2(prec, re, im, t, c, s, arg, static_cast<mpfr_ptr>(nullptr));
  }
  ~MpfrScope() { mpfr_clears(re, im, t, c, s, arg, static_cast<mpfr_ptr>(nullptr)); }
};

// Evaluates sum num_j * zeta^j (numerators only) into scope.re / scope.im.
void mpfr_evaluate(const CycNumber& x, MpfrScope& w, mpfr_prec_t prec) {
  mpfr_set_zero(w.re, 1);
  mpfr_set_zero(w.im, 1);
  mpfr_t pi2;
  mpfr_init2(pi2, prec);
  mpfr_const_pi(pi2, MPFR_RNDN);
  mpfr_mul_ui(pi2, pi2, 2, MPFR_RNDN);
  mpfr_div_ui(pi2, pi2, x.order(), MPFR_RNDN);
  for (int j = 0; j < x.degree(); ++j) {
    const Integer& a = x.numerators()[j];
    if (a == 0) continue;
    mpfr_mul_ui(w.arg, pi2, j, MPFR_RNDN);
    mpfr_sin_cos(w.s, w.c, w.arg, MPFR_RNDN);
    mpfr_mul_z(w.t, w.c, a.get_mpz_t(), MPFR_RNDN);
    mpfr_add(w.re, w.re, w.t, MPFR_RNDN);
    mpfr_mul_z(w.t, w.s, a.get_mpz_t(), MPFR_RNDN);
    mpfr_add(w.im, w.im, w.t, MPFR_RNDN);
  }
  mpfr_div_z(w.re, w.re, x.denominator().get_mpz_t(), MPFR_RNDN);
  mpfr_div_z(w.im, w.im, x.denominator().get_mpz_t(), MPFR_RNDN);
  mpfr_clear(pi2);
}

// log2 of sum |num_j| / den, rounded up; used to size working precision.
long magnitude_bits(const CycNumber& x) {
  Integer s = 0;
  for (const auto& a : x.numerators()) s += abs(a);
  long bits = static_cast<long>(mpz_sizeinbase(s.get_mpz_t(), 2));
  long dbits = static_cast<long>(mpz_sizeinbase(x.denominator().get_mpz_t(), 2));
  return std::max(0L, bits - dbits + 2);
}

std::string mpfr_fixed(mpfr_t v, int digits) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", digits, v);
  std::string out(buf);
  mpfr_free_str(buf);
  if (out.size() > 1 && out[0] == '-') {
    bool all_zero = true;
    for (char ch : out.substr(1))
      if (ch != '0' && ch != '.') all_zero = false;
    if (all_zero) out.erase(0, 1);
  }
  return out;
}

// Continued-fraction rationalization of v; nullopt unless a fraction with
// denominator <= max_den lies within tol.
std::optional<Rational> rationalize(long double v, long double tol, long max_den) {
  long double x = v;
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    long double fl = std::floor(x);
    Integer a(static_cast<double>(fl));
    Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) return std::nullopt;
    Rational cand(p2, q2);
    cand.canonicalize();
    long double approx = static_cast<long double>(p2.get_d()) / static_cast<long double>(q2.get_d());
    if (std::fabs(approx - v) <= tol) return cand;
    long double frac = x - fl;
    if (frac < 1e-18L) return std::nullopt;
    x = 1.0L / frac;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return std::nullopt;
}

}  // namespace

const CyclotomicData& cyclotomic_data(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic field order must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicData>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return *it->second;
  }
  auto built = build_data(order);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(order, std::move(built));
  return *it->second;
}

CycNumber::CycNumber() : CycNumber(1) {}

CycNumber::CycNumber(int order) : n_(order), num_(cyclotomic_data(order).phi), den_(1) {}

CycNumber::CycNumber(int order, const Rational& value) : CycNumber(order) {
  num_[0] = value.get_num();
  den_ = value.get_den();
  canonicalize();
}

CycNumber::CycNumber(int order, long value) : CycNumber(order) { num_[0] = value; }

CycNumber CycNumber::zeta(int order, long exponent) {
  const auto& d = cyclotomic_data(order);
  CycNumber r(order);
  const auto& row = d.power_table[mod_exp(exponent, order)];
  for (int c = 0; c < d.phi; ++c) r.num_[c] = row[c];
  return r;
}

CycNumber CycNumber::from_coeffs(int order, const std::vector<Rational>& coeffs) {
  const auto& d = cyclotomic_data(order);
  if (static_cast<int>(coeffs.size()) != d.phi)
    throw std::invalid_argument("coefficient vector length must equal phi(N)");
  Integer den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> num(d.phi);
  for (int j = 0; j < d.phi; ++j) num[j] = coeffs[j].get_num() * (den / coeffs[j].get_den());
  return from_integers(order, std::move(num), std::move(den));
}

CycNumber CycNumber::from_integers(int order, std::vector<Integer> numerators, Integer denominator) {
  CycNumber r(order);
  if (static_cast<int>(numerators.size()) != r.degree())
    throw std::invalid_argument("coefficient vector length must equal phi(N)");
  if (denominator == 0) throw std::domain_error("zero denominator");
  r.num_ = std::move(numerators);
  r.den_ = std::move(denominator);
  r.canonicalize();
  return r;
}

CycNumber CycNumber::from_exponent_sum(int order, const std::vector<std::pair<long, Rational>>& terms) {
  const auto& d = cyclotomic_data(order);
  Integer den = 1;
  for (const auto& t : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second.get_den_mpz_t());
  std::vector<Integer> acc(order);
  for (const auto& [e, c] : terms) acc[mod_exp(e, order)] += c.get_num() * (den / c.get_den());
  return from_integers(order, reduce_exponents(d, acc), den);
}

void CycNumber::canonicalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& a : num_) a = -a;
  }
  Integer g = den_;
  for (const auto& a : num_) {
    if (g == 1) break;
    if (a != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& a : num_) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void CycNumber::check_same_field(const CycNumber& o) const {
  if (n_ != o.n_)
    throw FieldMismatch("cyclotomic orders differ: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
}

Rational CycNumber::coeff(int j) const {
  Rational r(num_.at(j), den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> CycNumber::coeffs() const {
  std::vector<Rational> r;
  r.reserve(num_.size());
  for (int j = 0; j < degree(); ++j) r.push_back(coeff(j));
  return r;
}

bool CycNumber::is_zero() const {
  for (const auto& a : num_)
    if (a != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (std::size_t j = 1; j < num_.size(); ++j)
    if (num_[j] != 0) return false;
  return true;
}

Rational CycNumber::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
  return coeff(0);
}

bool CycNumber::is_real() const { return galois(-1) == *this; }

bool CycNumber::is_monomial() const {
  int count = 0;
  for (const auto& a : num_)
    if (a != 0 && ++count > 1) return false;
  return count == 1;
}

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& a : r.num_) a = -a;
  return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  check_same_field(o);
  if (den_ == o.den_) {
    for (std::size_t j = 0; j < num_.size(); ++j) num_[j] += o.num_[j];
  } else {
    for (std::size_t j = 0; j < num_.size(); ++j) num_[j] = num_[j] * o.den_ + o.num_[j] * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this += -o; }

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  a.check_same_field(b);
  const auto& d = cyclotomic_data(a.n_);
  const int phi = d.phi;
  std::vector<Integer> prod(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (a.num_[i] == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (b.num_[j] != 0) prod[i + j] += a.num_[i] * b.num_[j];
  }
  CycNumber r(a.n_);
  r.num_ = reduce_exponents(d, prod);
  r.den_ = a.den_ * b.den_;
  r.canonicalize();
  return r;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) { return *this = *this * o; }

CycNumber& CycNumber::operator/=(const CycNumber& o) { return *this = *this * o.inverse(); }

bool CycNumber::operator==(const CycNumber& o) const {
  return n_ == o.n_ && den_ == o.den_ && num_ == o.num_;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return CycNumber(n_, Rational(den_, num_[0]));
  // x^{-1} = prod_{m != 1} sigma_m(x) / N(x).
  const auto& d = cyclotomic_data(n_);
  CycNumber others(n_, 1L);
  for (int m : d.units)
    if (m != 1) others *= galois(m);
  CycNumber nm = *this * others;
  Rational inv = 1 / nm.to_rational();
  return others * CycNumber(n_, inv);
}

CycNumber CycNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNumber result(n_, 1L), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CycNumber CycNumber::galois(long m) const {
  if (std::gcd(mod_exp(m, n_), static_cast<long>(n_)) != 1 && n_ > 1)
    throw std::invalid_argument("Galois exponent must be coprime to the order");
  const auto& d = cyclotomic_data(n_);
  std::vector<Integer> acc(n_);
  for (int j = 0; j < d.phi; ++j)
    if (num_[j] != 0) acc[mod_exp(static_cast<long>(j) * m, n_)] += num_[j];
  CycNumber r(n_);
  r.num_ = reduce_exponents(d, acc);
  r.den_ = den_;
  r.canonicalize();
  return r;
}

Rational CycNumber::norm() const {
  const auto& d = cyclotomic_data(n_);
  CycNumber p(n_, 1L);
  for (int m : d.units) p *= galois(m);
  return p.to_rational();
}

CycNumber CycNumber::times_zeta_power(long e, int sign) const {
  const auto& d = cyclotomic_data(n_);
  std::vector<Integer> acc(n_);
  for (int j = 0; j < d.phi; ++j)
    if (num_[j] != 0) acc[mod_exp(j + e, n_)] += sign < 0 ? Integer(-num_[j]) : num_[j];
  CycNumber r(n_);
  r.num_ = reduce_exponents(d, acc);
  r.den_ = den_;
  r.canonicalize();
  return r;
}

CycNumber CycNumber::lift(int larger_order) const {
  if (larger_order % n_ != 0) throw std::invalid_argument("lift target must be a multiple of the order");
  const long step = larger_order / n_;
  std::vector<std::pair<long, Rational>> terms;
  for (int j = 0; j < degree(); ++j)
    if (num_[j] != 0) terms.emplace_back(j * step, coeff(j));
  return from_exponent_sum(larger_order, terms);
}

std::string CycNumber::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int j = 0; j < degree(); ++j) {
    if (num_[j] == 0) continue;
    Rational c = coeff(j);
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    if (c < 0) c = -c;
    if (j == 0 || c != 1) out << c.get_str();
    if (j > 0) {
      if (c != 1) out << "*";
      out << "z" << n_;
      if (j > 1) out << "^" << j;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

CycNumber galois_conj_inv(const CycNumber& x) { return x.galois(-1); }

std::complex<double> embed(const CycNumber& x) {
  long double re = 0, im = 0;
  const long double den = x.denominator().get_d();
  const long double step = 2.0L * 3.141592653589793238462643383279502884L / x.order();
  for (int j = 0; j < x.degree(); ++j) {
    const Integer& a = x.numerators()[j];
    if (a == 0) continue;
    long double v = a.get_d();
    re += v * std::cos(step * j);
    im += v * std::sin(step * j);
  }
  return {static_cast<double>(re / den), static_cast<double>(im / den)};
}

std::pair<std::string, std::string> embed_decimal(const CycNumber& x, int digits) {
  if (digits < 1) throw std::invalid_argument("precision must be >= 1");
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33 + 64 + magnitude_bits(x) +
                                                    mpz_sizeinbase(x.denominator().get_mpz_t(), 2));
  MpfrScope w(prec);
  mpfr_evaluate(x, w, prec);
  return {mpfr_fixed(w.re, digits), mpfr_fixed(w.im, digits)};
}

std::complex<double> embed(const CycNumber& x, int digits) {
  if (digits < 1) throw std::invalid_argument("precision must be >= 1");
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33 + 64 + magnitude_bits(x) +
                                                    mpz_sizeinbase(x.denominator().get_mpz_t(), 2));
  MpfrScope w(prec);
  mpfr_evaluate(x, w, prec);
  return {mpfr_get_d(w.re, MPFR_RNDN), mpfr_get_d(w.im, MPFR_RNDN)};
}

int real_sign(const CycNumber& x) {
  CycNumber twice_re = x + galois_conj_inv(x);
  if (twice_re.is_zero()) return 0;
  // Numerator sum bounded by S = sum |num_j|; each term carries relative error ~2^-prec.
  Integer s = 0;
  for (const auto& a : twice_re.numerators()) s += abs(a);
  const long sbits = static_cast<long>(mpz_sizeinbase(s.get_mpz_t(), 2));
  for (mpfr_prec_t prec = 96 + sbits;; prec *= 2) {
    MpfrScope w(prec);
    CycNumber numer = CycNumber::from_integers(twice_re.order(), twice_re.numerators(), 1);
    mpfr_evaluate(numer, w, prec);
    // |error| <= (phi + 2) * S * 2^{4-prec}; compare in log2 terms.
    mpfr_t bound;
    mpfr_init2(bound, 64);
    mpfr_set_z(bound, s.get_mpz_t(), MPFR_RNDU);
    mpfr_mul_ui(bound, bound, static_cast<unsigned long>(x.degree() + 2), MPFR_RNDU);
    mpfr_mul_2si(bound, bound, 4 - static_cast<long>(prec), MPFR_RNDU);
    int cmp = mpfr_cmpabs(w.re, bound);
    int sign = mpfr_sgn(w.re);
    mpfr_clear(bound);
    if (cmp > 0) return sign;
    if (prec > (1 << 16)) throw std::runtime_error("real_sign failed to separate from zero");
  }
}

std::optional<CycNumber> try_sqrt(const CycNumber& x) {
  const int n = x.order();
  if (x.is_zero()) return x;
  if (!x.is_real() || real_sign(x) <= 0) return std::nullopt;
  const auto& d = cyclotomic_data(n);
  if (d.phi == 1) {
    Rational q = x.to_rational();
    Integer a = q.get_num(), b = q.get_den();
    if (!mpz_perfect_square_p(a.get_mpz_t()) || !mpz_perfect_square_p(b.get_mpz_t())) return std::nullopt;
    Integer ra, rb;
    mpz_sqrt(ra.get_mpz_t(), a.get_mpz_t());
    mpz_sqrt(rb.get_mpz_t(), b.get_mpz_t());
    return CycNumber(n, Rational(ra, rb));
  }
  // Real subfield: basis b_j = zeta^j + zeta^{-j}, j < h; embeddings m in units, m < N/2.
  const int h = d.phi / 2;
  std::vector<int> emb;
  for (int m : d.units)
    if (2 * m < n) emb.push_back(m);
  const long double two_pi = 2.0L * 3.141592653589793238462643383279502884L;
  std::vector<long double> roots(h);
  for (int t = 0; t < h; ++t) {
    long double re = 0;
    const long double den = x.denominator().get_d();
    for (int j = 0; j < d.phi; ++j) {
      const Integer& a = x.numerators()[j];
      if (a != 0) re += a.get_d() * std::cos(two_pi * emb[t] * j / n);
    }
    re /= den;
    if (re <= 0) return std::nullopt;
    roots[t] = std::sqrt(re);
  }
  // Invert M[t][j] = 2 cos(2 pi m_t j / N) by Gauss-Jordan.
  std::vector<std::vector<long double>> m(h, std::vector<long double>(2 * h, 0));
  for (int t = 0; t < h; ++t) {
    for (int j = 0; j < h; ++j) m[t][j] = 2 * std::cos(two_pi * emb[t] * j / n);
    m[t][h + t] = 1;
  }
  for (int col = 0; col < h; ++col) {
    int piv = col;
    for (int r = col + 1; r < h; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
    std::swap(m[col], m[piv]);
    long double p = m[col][col];
    for (auto& v : m[col]) v /= p;
    for (int r = 0; r < h; ++r) {
      if (r == col) continue;
      long double f = m[r][col];
      if (f == 0) continue;
      for (int c = 0; c < 2 * h; ++c) m[r][c] -= f * m[col][c];
    }
  }
  const std::size_t patterns = std::size_t{1} << (h - 1);
  for (std::size_t mask = 0; mask < patterns; ++mask) {
    std::vector<long double> rhs(h);
    for (int t = 0; t < h; ++t) rhs[t] = (t > 0 && ((mask >> (t - 1)) & 1)) ? -roots[t] : roots[t];
    std::vector<std::pair<long, Rational>> terms;
    bool ok = true;
    for (int j = 0; j < h && ok; ++j) {
      long double b = 0;
      for (int t = 0; t < h; ++t) b += m[j][h + t] * rhs[t];
      auto q = rationalize(b, 1e-11L * std::max(1.0L, std::fabs(b)), 100000000L);
      if (!q) {
        ok = false;
        break;
      }
      if (*q == 0) continue;
      terms.emplace_back(j, *q);
      terms.emplace_back(-j, *q);
    }
    if (!ok) continue;
    CycNumber y = CycNumber::from_exponent_sum(n, terms);
    if (y * y == x) return y;
  }
  return std::nullopt;
}

}  // namespace heckerep
