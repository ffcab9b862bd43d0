#include "heckerep/spin/spin.hpp"

#include <stdexcept>

#include "heckerep/errors.hpp"
#include "heckerep/recoupling/verlinde.hpp"

namespace heckerep {

QuadraticForm QuadraticForm::from_index(int g, std::uint64_t bits) {
  QuadraticForm q;
  q.g = g;
  q.values.resize(2 * g);
  for (int k = 0; k < 2 * g; ++k) q.values[k] = (bits >> k) & 1;
  return q;
}

int intersection(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
  if (a.size() != b.size() || a.size() % 2) throw std::invalid_argument("vectors must have equal even length");
  const std::size_t g = a.size() / 2;
  int s = 0;
  for (std::size_t i = 0; i < g; ++i) s ^= (a[i] & b[g + i]) ^ (a[g + i] & b[i]);
  return s;
}

int evaluate(const QuadraticForm& q, const std::vector<std::uint8_t>& v) {
  if (v.size() != q.values.size()) throw std::invalid_argument("vector length does not match the genus");
  int s = 0;
  for (std::size_t k = 0; k < v.size(); ++k) s ^= v[k] & q.values[k];
  // Cross terms: only x_i . y_i pairs contribute.
  for (int i = 0; i < q.g; ++i) s ^= v[i] & v[q.g + i];
  return s;
}

int arf(const QuadraticForm& q) {
  int s = 0;
  for (int i = 0; i < q.g; ++i) s ^= q.values[i] & q.values[q.g + i];
  return s;
}

std::pair<std::uint64_t, std::uint64_t> orbit_counts(int g) {
  if (g < 1 || g > 30) throw std::invalid_argument("genus out of range");
  const std::uint64_t h = std::uint64_t{1} << (g - 1), t = std::uint64_t{1} << g;
  return {h * (t + 1), h * (t - 1)};
}

std::pair<std::uint64_t, std::uint64_t> orbit_counts_exhaustive(int g) {
  if (g < 1 || g > 12) throw std::invalid_argument("genus out of range for enumeration");
  std::uint64_t even = 0, odd = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * g)); ++bits)
    (arf(QuadraticForm::from_index(g, bits)) ? odd : even)++;
  return {even, odd};
}

Integer spin_dims(int r, int g, int eps) {
  if ((r + 2) % 4 != 0) throw NotApplicable("spin decomposition needs 4 | r+2, got r = " + std::to_string(r));
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  if (eps != 0 && eps != 1) throw std::invalid_argument("parity must be 0 or 1");
  Integer half_p_pow = 1;
  for (int i = 1; i < g; ++i) half_p_pow *= (r + 2) / 2;
  const Integer two_g = Integer(1) << g;
  Integer num = verlinde_dim(r, g) + half_p_pow * ((eps ? -two_g : two_g) - 1);
  const Integer den = Integer(1) << (2 * g);
  if (num < 0 || num % den != 0)
    throw NotInteger("spin dimension " + num.get_str() + "/" + den.get_str() + " is not a nonnegative integer");
  return num / den;
}

int flat_spin_parity(const std::vector<long>& alpha_index, const std::vector<long>& beta_index) {
  if (alpha_index.size() != beta_index.size() || alpha_index.empty())
    throw std::invalid_argument("index data must cover a symplectic basis");
  QuadraticForm q;
  q.g = static_cast<int>(alpha_index.size());
  for (long i : alpha_index) q.values.push_back(static_cast<std::uint8_t>((((i + 1) % 2) + 2) % 2));
  for (long i : beta_index) q.values.push_back(static_cast<std::uint8_t>((((i + 1) % 2) + 2) % 2));
  return arf(q);
}

std::pair<std::vector<long>, std::vector<long>> flat_indices(int g) {
  std::vector<long> a(g, 0), b(g);
  for (int i = 0; i < g; ++i) b[i] = i;
  return {a, b};
}

ReducibilityReport reducibility_report(int r, int g) {
  if (r < 6 || (r - 2) % 4 != 0) throw NotApplicable("reducibility needs r = 4l + 2 with l >= 1");
  if (g < 2) throw NotApplicable("reducibility needs g >= 2");
  ReducibilityReport rep;
  rep.r = r;
  rep.g = g;
  auto [alpha, beta] = flat_indices(g);
  rep.parity = flat_spin_parity(alpha, beta);
  rep.d_even = spin_dims(r, g, 0);
  rep.d_odd = spin_dims(r, g, 1);
  rep.total = verlinde_dim(r, g);
  auto [n_even, n_odd] = orbit_counts(g);
  const Integer v0 = rep.d_even * Integer(static_cast<unsigned long>(n_even));
  const Integer v1 = rep.d_odd * Integer(static_cast<unsigned long>(n_odd));
  rep.summands[0] = rep.parity ? rep.d_odd : rep.d_even;
  rep.summands[1] = v0 - (rep.parity ? Integer(0) : rep.d_even);
  rep.summands[2] = v1 - (rep.parity ? rep.d_odd : Integer(0));
  rep.all_positive = rep.summands[0] > 0 && rep.summands[1] > 0 && rep.summands[2] > 0;
  rep.sums_to_total = rep.summands[0] + rep.summands[1] + rep.summands[2] == rep.total;
  return rep;
}

}  // namespace heckerep
