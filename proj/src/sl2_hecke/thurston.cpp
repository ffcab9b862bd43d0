#include "heckerep/sl2_hecke/thurston.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "heckerep/errors.hpp"

namespace heckerep {

MulticurveData parse_multicurve(std::istream& in) {
  MulticurveData d;
  long rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows < 1 || cols < 1) throw std::invalid_argument("graph file: bad dimensions");
  d.n.assign(rows, std::vector<long>(cols));
  for (auto& row : d.n)
    for (auto& x : row)
      if (!(in >> x)) throw std::invalid_argument("graph file: truncated matrix");
  d.p.resize(rows);
  d.q.resize(cols);
  for (auto& x : d.p)
    if (!(in >> x)) throw std::invalid_argument("graph file: truncated p multiplicities");
  for (auto& x : d.q)
    if (!(in >> x)) throw std::invalid_argument("graph file: truncated q multiplicities");
  return d;
}

MulticurveData parse_multicurve(const std::string& text) {
  std::istringstream in(text);
  return parse_multicurve(in);
}

MulticurveData type_a_path(int length) {
  if (length < 2) throw std::invalid_argument("path needs at least two vertices");
  const int n = (length + 1) / 2, m = length / 2;
  MulticurveData d;
  d.n.assign(n, std::vector<long>(m, 0));
  // Vertex t (0-based) is alpha_{t/2} for even t, beta_{t/2} for odd t.
  for (int t = 0; t + 1 < length; ++t) {
    const int a = (t % 2 == 0 ? t : t + 1) / 2;
    const int b = (t % 2 == 0 ? t + 1 : t) / 2;
    d.n[a][b] = 1;
  }
  d.p.assign(n, 1);
  d.q.assign(m, 1);
  return d;
}

double coxeter_b_norm(int n) { return 2 * std::cos(std::numbers::pi / (2 * n)); }

namespace {

void validate(const MulticurveData& d) {
  const std::size_t n = d.n.size();
  if (n == 0 || d.p.size() != n) throw std::invalid_argument("multicurve data: row count mismatch");
  const std::size_t m = d.n[0].size();
  if (m == 0 || d.q.size() != m) throw std::invalid_argument("multicurve data: column count mismatch");
  for (const auto& row : d.n) {
    if (row.size() != m) throw std::invalid_argument("multicurve data: ragged matrix");
    for (long x : row)
      if (x < 0) throw std::invalid_argument("multicurve data: negative intersection number");
  }
  for (long x : d.p)
    if (x < 1) throw std::invalid_argument("multicurve data: multiplicities must be positive");
  for (long x : d.q)
    if (x < 1) throw std::invalid_argument("multicurve data: multiplicities must be positive");
  // Connectivity of the bipartite graph (vertices 0..n-1 alpha, n..n+m-1 beta).
  std::vector<bool> seen(n + m, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n + m; ++w) {
      if (seen[w]) continue;
      bool edge = u < n ? (w >= n && d.n[u][w - n] > 0) : (w < n && d.n[w][u - n] > 0);
      if (edge) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (bool s : seen)
    if (!s) throw NotPrimitive("intersection graph is disconnected");
}

// Vertex order along the path if the data is a type-A path with unit multiplicities.
std::optional<std::vector<std::size_t>> path_order(const MulticurveData& d) {
  const std::size_t n = d.n.size(), m = d.n[0].size();
  for (long x : d.p)
    if (x != 1) return std::nullopt;
  for (long x : d.q)
    if (x != 1) return std::nullopt;
  std::vector<std::vector<std::size_t>> adj(n + m);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (d.n[i][j] > 1) return std::nullopt;
      if (d.n[i][j] == 1) {
        adj[i].push_back(n + j);
        adj[n + j].push_back(i);
        ++edges;
      }
    }
  if (edges + 1 != n + m) return std::nullopt;
  std::size_t start = n + m;
  for (std::size_t v = 0; v < n + m; ++v) {
    if (adj[v].size() > 2) return std::nullopt;
    if (adj[v].size() == 1 && start == n + m) start = v;
  }
  std::vector<std::size_t> order{start};
  std::size_t prev = start, cur = adj[start][0];
  while (true) {
    order.push_back(cur);
    std::size_t next = n + m;
    for (std::size_t w : adj[cur])
      if (w != prev) next = w;
    if (next == n + m) break;
    prev = cur;
    cur = next;
  }
  return order;
}

void exact_path(const MulticurveData& d, const std::vector<std::size_t>& order, ThurstonRep& rep) {
  const std::size_t n = d.n.size(), m = d.n[0].size();
  const int length = static_cast<int>(order.size());
  const int big = 2 * (length + 1);
  const RealCycNumber mu = RealCycNumber::two_cos_pi_over(length + 1);
  // u_t = [t] = zeta^{t-1} + zeta^{t-3} + ... + zeta^{1-t}, zeta = zeta_{2(L+1)}.
  std::vector<RealCycNumber> u(length + 2, RealCycNumber(big, 0));
  for (int t = 1; t <= length; ++t) {
    CycNumber s(big);
    for (int k = 0; k < t; ++k) s += CycNumber::zeta(big, t - 1 - 2 * k);
    u[t] = RealCycNumber(s);
  }
  std::vector<RealCycNumber> val(n + m, RealCycNumber(big, 0));
  for (int t = 0; t < length; ++t) val[order[t]] = u[t + 1];
  bool ok = true;
  for (std::size_t i = 0; i < n && ok; ++i) {
    RealCycNumber acc(big, 0);
    for (std::size_t j = 0; j < m; ++j)
      if (d.n[i][j]) acc = acc + val[n + j];
    ok = acc == mu * val[i];
  }
  for (std::size_t j = 0; j < m && ok; ++j) {
    RealCycNumber acc(big, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (d.n[i][j]) acc = acc + val[i];
    ok = acc == mu * val[n + j];
  }
  rep.exact_eigenvector = ok;
  if (!ok) return;
  rep.mu_exact = mu;
  rep.ta_exact = upper_translation(mu);
  rep.tb_exact = lower_translation(mu);
}

}  // namespace

ThurstonRep thurston_rep(const MulticurveData& d) {
  validate(d);
  const std::size_t n = d.n.size(), m = d.n[0].size();
  ThurstonRep rep;
  // Power iteration on P N Q N^T (n x n, primitive since every alpha meets some beta).
  std::vector<long double> v(n, 1.0L), w(m);
  long double mu2 = 0;
  auto step = [&](const std::vector<long double>& x) {
    for (std::size_t j = 0; j < m; ++j) {
      long double acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc += d.n[i][j] * x[i];
      w[j] = d.q[j] * acc;
    }
    std::vector<long double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      long double acc = 0;
      for (std::size_t j = 0; j < m; ++j) acc += d.n[i][j] * w[j];
      y[i] = d.p[i] * acc;
    }
    return y;
  };
  auto residual = [&](long double mu) {
    // v' = Q N^T v / mu, residual of P N v' = mu v.
    std::vector<long double> vp(m);
    for (std::size_t j = 0; j < m; ++j) {
      long double acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc += d.n[i][j] * v[i];
      vp[j] = d.q[j] * acc / mu;
    }
    long double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      long double acc = 0;
      for (std::size_t j = 0; j < m; ++j) acc += d.n[i][j] * vp[j];
      worst = std::max(worst, std::fabs(d.p[i] * acc - mu * v[i]));
    }
    return std::make_pair(worst, vp);
  };
  const int max_iter = 200000;
  for (rep.iterations = 1; rep.iterations <= max_iter; ++rep.iterations) {
    std::vector<long double> y = step(v);
    long double norm = 0;
    for (long double x : y) norm = std::max(norm, x);
    for (auto& x : y) x /= norm;
    mu2 = norm;
    v = std::move(y);
    if (rep.iterations % 16 == 0 && residual(std::sqrt(mu2)).first <= 1e-13L) break;
  }
  const long double mu = std::sqrt(mu2);
  auto [res, vp] = residual(mu);
  rep.mu = static_cast<double>(mu);
  rep.residual = static_cast<double>(res);
  rep.v.assign(v.begin(), v.end());
  rep.v_prime.assign(vp.begin(), vp.end());
  rep.ta = {1, rep.mu, 0, 1};
  rep.tb = {1, 0, -rep.mu, 1};
  if (auto order = path_order(d)) exact_path(d, *order, rep);
  return rep;
}

}  // namespace heckerep
