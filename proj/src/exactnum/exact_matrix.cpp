#include "heckerep/exactnum/exact_matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "heckerep/errors.hpp"
#include "heckerep/exactnum/modular.hpp"

namespace heckerep {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, int order)
    : rows_(rows), cols_(cols), order_(order), data_(rows * cols, CycNumber(order)) {}

ExactMatrix ExactMatrix::identity(std::size_t n, int order) { return scalar(n, CycNumber(order, 1L)); }

ExactMatrix ExactMatrix::scalar(std::size_t n, const CycNumber& c) {
  ExactMatrix m(n, n, c.order());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<CycNumber>& d) {
  if (d.empty()) return ExactMatrix(0, 0, 1);
  ExactMatrix m(d.size(), d.size(), d[0].order());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && order_ == o.order_ && data_ == o.data_;
}

std::optional<std::pair<std::size_t, std::size_t>> ExactMatrix::first_difference(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return std::make_pair(std::size_t{0}, std::size_t{0});
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != o(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  ExactMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  ExactMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

ExactMatrix ExactMatrix::operator*(const CycNumber& c) const {
  ExactMatrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(cols_, rows_, order_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

ExactMatrix ExactMatrix::galois(long m) const {
  ExactMatrix r = *this;
  for (auto& x : r.data_) x = x.galois(m);
  return r;
}

ExactMatrix ExactMatrix::conj_transpose() const { return galois(-1).transpose(); }

CycNumber ExactMatrix::trace() const {
  CycNumber t(order_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool ExactMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool ExactMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::scale_rows(const std::vector<CycNumber>& d) const {
  ExactMatrix r = *this;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = d[i] * r(i, j);
  return r;
}

ExactMatrix ExactMatrix::scale_cols(const std::vector<CycNumber>& d) const {
  ExactMatrix r = *this;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = r(i, j) * d[j];
  return r;
}

std::vector<CycNumber> ExactMatrix::diagonal_entries() const {
  std::vector<CycNumber> d;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
  return d;
}

ExactMatrix multiply_reference(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in matrix product");
  if (a.order() != b.order()) throw FieldMismatch("matrix product across different fields");
  ExactMatrix c(a.rows(), b.cols(), a.order());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const CycNumber& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

ExactMatrix power_reference(const ExactMatrix& m, unsigned e) {
  ExactMatrix result = ExactMatrix::identity(m.rows(), m.order());
  for (unsigned k = 0; k < e; ++k) result = multiply_reference(result, m);
  return result;
}

namespace {

modular::IntegerForm integerize(const ExactMatrix& m) {
  modular::IntegerForm f;
  f.rows = m.rows();
  f.cols = m.cols();
  f.phi = cyclotomic_data(m.order()).phi;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), m(i, j).denominator().get_mpz_t());
  f.coef.resize(f.rows * f.cols * f.phi);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const CycNumber& x = m(i, j);
      Integer scale = f.den / x.denominator();
      for (int c = 0; c < f.phi; ++c) {
        Integer v = x.numerators()[c] * scale;
        if (abs(v) > f.max_abs) f.max_abs = abs(v);
        f.coef[(i * f.cols + j) * f.phi + c] = std::move(v);
      }
    }
  return f;
}

ExactMatrix from_coefficients(int order, std::size_t rows, std::size_t cols, std::vector<Integer>& coef,
                              const Integer& den) {
  const int phi = cyclotomic_data(order).phi;
  ExactMatrix r(rows, cols, order);
#pragma omp parallel for schedule(static)
  for (std::size_t e = 0; e < rows * cols; ++e) {
    std::vector<Integer> num(coef.begin() + e * phi, coef.begin() + (e + 1) * phi);
    r(e / cols, e % cols) = CycNumber::from_integers(order, std::move(num), den);
  }
  return r;
}

}  // namespace

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in matrix product");
  if (a.order() != b.order()) throw FieldMismatch("matrix product across different fields");
  if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0) return ExactMatrix(a.rows(), b.cols(), a.order());
  const auto& cd = cyclotomic_data(a.order());
  auto fa = integerize(a), fb = integerize(b);
  Integer bound = fa.max_abs * fb.max_abs * static_cast<unsigned long>(a.cols()) *
                  static_cast<unsigned long>(cd.phi) * static_cast<unsigned long>(cd.reduction_bound);
  auto coef = modular::evaluate_circuit(a.order(), {&fa, &fb}, a.rows(), b.cols(), bound,
                                        [](const std::vector<modular::ResidueMatrix>& in, std::uint32_t p) {
                                          return modular::multiply_mod(in[0], in[1], p);
                                        });
  return from_coefficients(a.order(), a.rows(), b.cols(), coef, fa.den * fb.den);
}

ExactMatrix power(const ExactMatrix& m, unsigned e) {
  if (m.rows() != m.cols()) throw std::invalid_argument("power of a non-square matrix");
  if (e == 0 || m.rows() == 0) return ExactMatrix::identity(m.rows(), m.order());
  if (e == 1) return m;
  const auto& cd = cyclotomic_data(m.order());
  auto f = integerize(m);
  // |coef(X^{k+1})| <= L n phi |coef(X^k)| |coef(X)|.
  Integer step = Integer(static_cast<unsigned long>(m.rows())) * cd.phi * cd.reduction_bound;
  Integer bound = f.max_abs;
  for (unsigned k = 1; k < e; ++k) bound *= step * f.max_abs;
  auto coef = modular::evaluate_circuit(m.order(), {&f}, m.rows(), m.cols(), bound,
                                        [e](const std::vector<modular::ResidueMatrix>& in, std::uint32_t p) {
                                          return modular::power_mod(in[0], e, p);
                                        });
  Integer den = 1;
  for (unsigned k = 0; k < e; ++k) den *= f.den;
  return from_coefficients(m.order(), m.rows(), m.cols(), coef, den);
}

CycPolynomial::CycPolynomial(int order, std::vector<CycNumber> coeffs) : order_(order), c_(std::move(coeffs)) {
  for (const auto& x : c_)
    if (x.order() != order_) throw FieldMismatch("polynomial coefficient from another field");
  trim();
}

CycPolynomial CycPolynomial::from_rational(int order, const RatPolynomial& p) {
  std::vector<CycNumber> c;
  for (const auto& v : p.coeffs()) c.emplace_back(order, v);
  return CycPolynomial(order, std::move(c));
}

void CycPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycPolynomial CycPolynomial::operator+(const CycPolynomial& o) const {
  std::vector<CycNumber> r(std::max(c_.size(), o.c_.size()), CycNumber(order_));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return CycPolynomial(order_, std::move(r));
}

CycPolynomial CycPolynomial::operator-(const CycPolynomial& o) const {
  std::vector<CycNumber> r(std::max(c_.size(), o.c_.size()), CycNumber(order_));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return CycPolynomial(order_, std::move(r));
}

CycPolynomial CycPolynomial::operator*(const CycPolynomial& o) const {
  if (is_zero() || o.is_zero()) return CycPolynomial(order_, {});
  std::vector<CycNumber> r(c_.size() + o.c_.size() - 1, CycNumber(order_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
  }
  return CycPolynomial(order_, std::move(r));
}

CycPolynomial CycPolynomial::galois(long m) const {
  std::vector<CycNumber> r;
  for (const auto& x : c_) r.push_back(x.galois(m));
  return CycPolynomial(order_, std::move(r));
}

CycPolynomial CycPolynomial::monic() const {
  if (is_zero()) return *this;
  CycNumber inv = leading().inverse();
  std::vector<CycNumber> r;
  for (const auto& x : c_) r.push_back(x * inv);
  return CycPolynomial(order_, std::move(r));
}

std::string CycPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) out << " + ";
    out << "(" << c_[i].to_string() << ")";
    if (i > 0) out << "*x" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return out.str();
}

std::pair<CycPolynomial, CycPolynomial> divmod(const CycPolynomial& a, const CycPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const int order = a.order();
  if (a.degree() < b.degree()) return {CycPolynomial(order, {}), a};
  std::vector<CycNumber> rem = a.coeffs();
  const int db = b.degree();
  std::vector<CycNumber> q(a.degree() - db + 1, CycNumber(order));
  CycNumber inv = b.leading().inverse();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i].is_zero()) continue;
    CycNumber f = rem[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db, CycNumber(order));
  return {CycPolynomial(order, std::move(q)), CycPolynomial(order, std::move(rem))};
}

CycPolynomial gcd(const CycPolynomial& a, const CycPolynomial& b) {
  CycPolynomial x = a, y = b;
  while (!y.is_zero()) {
    CycPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

CycPolynomial char_poly(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly of a non-square matrix");
  const std::size_t n = m.rows();
  const int order = m.order();
  // M_1 = I, c_{n-1} = -tr(M); M_k = M M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(M M_k)/k.
  std::vector<CycNumber> c(n + 1, CycNumber(order));
  c[n] = CycNumber(order, 1L);
  ExactMatrix mk = ExactMatrix::identity(n, order);
  for (std::size_t k = 1; k <= n; ++k) {
    ExactMatrix am = multiply(m, mk);
    c[n - k] = am.trace() * CycNumber(order, Rational(-1, static_cast<long>(k)));
    if (k < n) {
      mk = am;
      for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k];
    }
  }
  return CycPolynomial(order, std::move(c));
}

RatPolynomial rational_char_poly(const ExactMatrix& m) {
  CycPolynomial p = char_poly(m);
  const auto& cd = cyclotomic_data(m.order());
  CycPolynomial prod = CycPolynomial::from_rational(m.order(), RatPolynomial(std::vector<Rational>{1}));
  for (int u : cd.units) prod = prod * p.galois(u);
  std::vector<Rational> coeffs;
  for (const auto& x : prod.coeffs()) coeffs.push_back(x.to_rational());
  return RatPolynomial(std::move(coeffs));
}

}  // namespace heckerep
