#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace oracle {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

std::uint64_t Rng::next() {
  s_ ^= s_ >> 12;
  s_ ^= s_ << 25;
  s_ ^= s_ >> 27;
  return s_ * 0x2545F4914F6CDD1DULL;
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

int Rng::below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

cplx evalTrig(const Coeffs& c, double x) {
  cplx s = 0.0;
  for (const auto& [k, v] : c) s += v * std::polar(1.0, kTwoPi * std::fmod(k * x, 1.0));
  return s;
}

double gridSup(const Coeffs& c, int n) {
  double m = 0.0;
  for (int i = 0; i < n; ++i) m = std::max(m, std::abs(evalTrig(c, static_cast<double>(i) / n)));
  return m;
}

double tridiagMaxEig(const std::vector<double>& d, const std::vector<double>& e2) {
  const std::size_t n = d.size();
  double lo = d[0], hi = d[0];
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::sqrt(e2[i - 1]) : 0.0) + (i + 1 < n ? std::sqrt(e2[i]) : 0.0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  // Number of eigenvalues below t.
  auto below = [&](double t) {
    int count = 0;
    double q = d[0] - t;
    if (q < 0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
      if (q == 0.0) q = 1e-300;
      q = d[i] - t - e2[i - 1] / q;
      if (q < 0) ++count;
    }
    return count;
  };
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (below(mid) == static_cast<int>(n)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double bidiagNorm(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  const std::size_t n = a.size();
  // (M*M)[c][c] = |a_c|^2 + |b_c|^2, (M*M)[c][c+1] = conj(b_c) a_{c+1}.
  std::vector<double> d(n), e2(n > 0 ? n - 1 : 0);
  for (std::size_t c = 0; c < n; ++c) d[c] = std::norm(a[c]) + (c + 1 < n ? std::norm(b[c]) : 0.0);
  for (std::size_t c = 0; c + 1 < n; ++c) e2[c] = std::norm(b[c]) * std::norm(a[c + 1]);
  return std::sqrt(std::max(0.0, tridiagMaxEig(d, e2)));
}

double denseNorm(const std::vector<std::vector<cplx>>& m, int iterations) {
  const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  std::vector<cplx> v(cols);
  double nv = 0.0;
  for (std::size_t j = 0; j < cols; ++j) {
    v[j] = cplx(1.0 + 0.1 * j, 0.3 * j);
    nv += std::norm(v[j]);
  }
  for (auto& z : v) z /= std::sqrt(nv);
  double sigma = 0.0;
  for (int it = 0; it < iterations; ++it) {
    std::vector<cplx> w(rows, 0.0), u(cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) w[i] += m[i][j] * v[j];
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t i = 0; i < rows; ++i) u[j] += std::conj(m[i][j]) * w[i];
    double nu = 0.0;
    for (auto z : u) nu += std::norm(z);
    nu = std::sqrt(nu);
    if (nu == 0.0) return 0.0;
    sigma = std::sqrt(nu);
    for (std::size_t j = 0; j < cols; ++j) v[j] = u[j] / nu;
  }
  return sigma;
}

double doublingBandOneNorm(const Coeffs& f0, const Coeffs& f1, int points, int n, std::uint64_t seed) {
  Rng rng(seed);
  double best = 0.0;
  std::vector<int> bits(static_cast<std::size_t>(n) + 64);
  for (int s = 0; s < points; ++s) {
    for (auto& b : bits) b = static_cast<int>(rng.next() >> 63);
    std::vector<cplx> a(n), b(n > 0 ? n - 1 : 0);
    for (int c = 0; c < n; ++c) {
      // x_c = 0.b_c b_{c+1} ... in binary, 60 bits.
      double x = 0.0, w = 0.5;
      for (int i = 0; i < 60; ++i, w *= 0.5) x += w * bits[static_cast<std::size_t>(c + i)];
      a[c] = evalTrig(f0, x);
      if (c + 1 < n) b[c] = evalTrig(f1, x);
    }
    best = std::max(best, bidiagNorm(a, b));
  }
  return best;
}

Frac reduce(long long p, long long q) {
  p %= q;
  if (p < 0) p += q;
  const long long g = std::gcd(p, q);
  return p == 0 ? Frac{0, 1} : Frac{p / g, q / g};
}

Frac timesK(Frac x, int k) { return reduce(x.p * k, x.q); }

int period(Frac x, int k) {
  Frac y = x;
  for (long long n = 1; n <= x.q + 1; ++n) {
    y = timesK(y, k);
    if (y == x) return static_cast<int>(n);
  }
  return 0;
}

bool stronglyConnected(const Graph& t) {
  const int n = static_cast<int>(t.size());
  for (int s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (t[u][v] && !seen[v]) {
          seen[v] = true;
          q.push(v);
        }
      }
    }
    if (std::count(seen.begin(), seen.end(), true) != n) return false;
  }
  return true;
}

long long wordCount(const Graph& t, int n) {
  const std::size_t s = t.size();
  std::vector<long long> ends(s, 1);
  for (int len = 1; len < n; ++len) {
    std::vector<long long> next(s, 0);
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t b = 0; b < s; ++b)
        if (t[a][b]) next[b] += ends[a];
    ends = next;
  }
  return std::accumulate(ends.begin(), ends.end(), 0LL);
}

bool singleCycle(const Graph& t) {
  for (const auto& row : t) {
    if (std::count(row.begin(), row.end(), 1) != 1) return false;
  }
  return stronglyConnected(t);
}

bool everyEdgeOnCycle(const Graph& t) {
  const int n = static_cast<int>(t.size());
  auto reaches = [&](int from, int to) {
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(from);
    seen[from] = true;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      if (u == to) return true;
      for (int v = 0; v < n; ++v) {
        if (t[u][v] && !seen[v]) {
          seen[v] = true;
          q.push(v);
        }
      }
    }
    return false;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t[a][b] && !reaches(b, a)) return false;
  return true;
}

}  // namespace oracle
