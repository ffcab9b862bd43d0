#include "heckerep/exactnum/modular.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "heckerep/exactnum/cyclotomic.hpp"

namespace heckerep::modular {

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u})
    if (n % q == 0) return n == q;
  // Deterministic Miller-Rabin for n < 3.4e14 with these bases.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mul = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u}) {
    std::uint64_t x = 1, b = a, e = d;
    while (e) {
      if (e & 1) x = mul(x, b);
      b = mul(b, b);
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mul(x, x);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::vector<int> prime_factors(int n) {
  std::vector<int> f;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    f.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) f.push_back(n);
  return f;
}

std::vector<std::uint32_t> invert_mod(const std::vector<std::uint32_t>& m, int n, std::uint32_t p) {
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n) * 2 * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i * 2 * n + j] = m[i * n + j];
    a[i * 2 * n + n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv * 2 * n + col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular Vandermonde matrix mod p");
    if (piv != col)
      for (int j = 0; j < 2 * n; ++j) std::swap(a[piv * 2 * n + j], a[col * 2 * n + j]);
    std::uint64_t inv = powmod(static_cast<std::uint32_t>(a[col * 2 * n + col]), p - 2, p);
    for (int j = 0; j < 2 * n; ++j) a[col * 2 * n + j] = a[col * 2 * n + j] * inv % p;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      std::uint64_t f = a[r * 2 * n + col];
      if (!f) continue;
      for (int j = 0; j < 2 * n; ++j) a[r * 2 * n + j] = (a[r * 2 * n + j] + (p - f) * a[col * 2 * n + j]) % p;
    }
  }
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i * n + j] = static_cast<std::uint32_t>(a[i * 2 * n + n + j]);
  return out;
}

std::unique_ptr<PrimeData> build_prime(int order, std::uint32_t p) {
  const auto& cd = cyclotomic_data(order);
  auto pd = std::make_unique<PrimeData>();
  pd->p = p;
  std::uint32_t w = 0;
  const auto factors = prime_factors(order);
  for (std::uint32_t g = 2; g < p; ++g) {
    std::uint32_t cand = powmod(g, (p - 1) / order, p);
    bool primitive = true;
    for (int q : factors)
      if (powmod(cand, order / q, p) == 1) primitive = false;
    if (primitive) {
      w = cand;
      break;
    }
  }
  if (order == 1) w = 1;
  const int phi = cd.phi;
  for (int u : cd.units) pd->roots.push_back(powmod(w, u, p));
  pd->vandermonde.resize(static_cast<std::size_t>(phi) * phi);
  for (int t = 0; t < phi; ++t) {
    std::uint32_t x = 1;
    for (int c = 0; c < phi; ++c) {
      pd->vandermonde[t * phi + c] = x;
      x = mulmod(x, pd->roots[t], p);
    }
  }
  pd->vandermonde_inv = invert_mod(pd->vandermonde, phi, p);
  return pd;
}

}  // namespace

const PrimeData& prime_for(int order, std::size_t index) {
  static std::mutex mu;
  static std::map<int, std::vector<std::unique_ptr<PrimeData>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& list = cache[order];
  while (list.size() <= index) {
    std::uint64_t start = list.empty() ? (std::uint64_t{1} << 30) : list.back()->p;
    // Largest candidate below start with candidate = 1 mod order.
    std::uint64_t c = start - 1;
    c -= (c - 1) % order;
    while (c > static_cast<std::uint64_t>(order) + 1 && !is_prime(c)) c -= order;
    if (c <= static_cast<std::uint64_t>(order) + 1) throw std::runtime_error("ran out of primes");
    list.push_back(build_prime(order, static_cast<std::uint32_t>(c)));
  }
  return *list[index];
}

ResidueMatrix multiply_mod(const ResidueMatrix& a, const ResidueMatrix& b, std::uint32_t p) {
  if (a.cols != b.rows) throw std::invalid_argument("dimension mismatch");
  const std::size_t n = a.rows, m = a.cols, l = b.cols;
  std::vector<std::uint32_t> bt(m * l);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < l; ++j) bt[j * m + k] = b.v[k * l + j];
  ResidueMatrix c{n, l, std::vector<std::uint32_t>(n * l)};
  // p < 2^30, so sixteen products fit in 64 bits before a reduction.
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t* ar = &a.v[i * m];
    for (std::size_t j = 0; j < l; ++j) {
      const std::uint32_t* br = &bt[j * m];
      std::uint64_t acc = 0;
      std::size_t k = 0;
      while (k < m) {
        std::size_t stop = std::min(m, k + 16);
        std::uint64_t blk = 0;
        for (; k < stop; ++k) blk += static_cast<std::uint64_t>(ar[k]) * br[k];
        acc = (acc + blk % p) % p;
      }
      c.v[i * l + j] = static_cast<std::uint32_t>(acc);
    }
  }
  return c;
}

ResidueMatrix power_mod(const ResidueMatrix& a, unsigned e, std::uint32_t p) {
  ResidueMatrix result{a.rows, a.cols, std::vector<std::uint32_t>(a.rows * a.cols, 0)};
  for (std::size_t i = 0; i < a.rows; ++i) result.v[i * a.cols + i] = 1 % p;
  ResidueMatrix base = a;
  bool first = true;
  while (e) {
    if (e & 1) {
      result = first ? base : multiply_mod(result, base, p);
      first = false;
    }
    e >>= 1;
    if (e) base = multiply_mod(base, base, p);
  }
  return result;
}

std::vector<Integer> evaluate_circuit(
    int order, const std::vector<const IntegerForm*>& inputs, std::size_t out_rows, std::size_t out_cols,
    const Integer& bound,
    const std::function<ResidueMatrix(const std::vector<ResidueMatrix>&, std::uint32_t)>& op) {
  const int phi = cyclotomic_data(order).phi;
  const std::size_t out_coefs = out_rows * out_cols * phi;
  std::vector<std::vector<std::uint32_t>> residues;
  std::vector<std::uint32_t> primes;
  Integer modulus = 1;
  const Integer target = 2 * bound + 1;

  while (modulus <= target) {
    const PrimeData& pd = prime_for(order, primes.size());
    const std::uint32_t p = pd.p;
    // Values of each input at each root: evals[t][input].
    std::vector<std::vector<ResidueMatrix>> evals(phi, std::vector<ResidueMatrix>(inputs.size()));
    for (std::size_t in = 0; in < inputs.size(); ++in) {
      const IntegerForm& f = *inputs[in];
      const std::size_t entries = f.rows * f.cols;
      for (int t = 0; t < phi; ++t) evals[t][in] = ResidueMatrix{f.rows, f.cols, std::vector<std::uint32_t>(entries)};
#pragma omp parallel for schedule(static)
      for (std::size_t e = 0; e < entries; ++e) {
        std::vector<std::uint32_t> r(phi);
        bool any = false;
        for (int c = 0; c < phi; ++c) {
          const Integer& z = f.coef[e * phi + c];
          if (z == 0) continue;
          r[c] = static_cast<std::uint32_t>(mpz_fdiv_ui(z.get_mpz_t(), p));
          any = true;
        }
        if (!any) continue;
        for (int t = 0; t < phi; ++t) {
          std::uint64_t acc = 0;
          for (int c = 0; c < phi; ++c) acc = (acc + static_cast<std::uint64_t>(r[c]) * pd.vandermonde[t * phi + c]) % p;
          evals[t][in].v[e] = static_cast<std::uint32_t>(acc);
        }
      }
    }
    std::vector<ResidueMatrix> outs(phi);
    for (int t = 0; t < phi; ++t) outs[t] = op(evals[t], p);
    std::vector<std::uint32_t> res(out_coefs);
#pragma omp parallel for schedule(static)
    for (std::size_t e = 0; e < out_rows * out_cols; ++e) {
      for (int c = 0; c < phi; ++c) {
        std::uint64_t acc = 0;
        for (int t = 0; t < phi; ++t)
          acc = (acc + static_cast<std::uint64_t>(pd.vandermonde_inv[c * phi + t]) * outs[t].v[e]) % p;
        res[e * phi + c] = static_cast<std::uint32_t>(acc);
      }
    }
    residues.push_back(std::move(res));
    primes.push_back(p);
    modulus *= p;
  }

  // Garner: x = r_0 + p_0 (t_1 + p_1 (t_2 + ...)), then symmetric lift.
  const std::size_t s = primes.size();
  std::vector<Integer> partial(s);  // product of the first k primes
  std::vector<std::uint32_t> inv(s);
  partial[0] = 1;
  for (std::size_t k = 1; k < s; ++k) partial[k] = partial[k - 1] * primes[k - 1];
  for (std::size_t k = 1; k < s; ++k)
    inv[k] = powmod(static_cast<std::uint32_t>(mpz_fdiv_ui(partial[k].get_mpz_t(), primes[k])), primes[k] - 2, primes[k]);
  const Integer half = modulus / 2;
  std::vector<Integer> out(out_coefs);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < out_coefs; ++i) {
    Integer x = residues[0][i];
    for (std::size_t k = 1; k < s; ++k) {
      const std::uint32_t pk = primes[k];
      std::uint32_t xm = static_cast<std::uint32_t>(mpz_fdiv_ui(x.get_mpz_t(), pk));
      std::uint32_t diff = (residues[k][i] + pk - xm) % pk;
      std::uint32_t t = mulmod(diff, inv[k], pk);
      if (t) mpz_addmul_ui(x.get_mpz_t(), partial[k].get_mpz_t(), t);
    }
    if (x > half) x -= modulus;
    out[i] = std::move(x);
  }
  return out;
}

}  // namespace heckerep::modular
