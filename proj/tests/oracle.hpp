#pragma once

// Reference computations for the tests. Nothing here calls into the library:
// orbits are plain doubles or machine-integer fractions, norms come from
// Sturm bisection or brute-force power iteration, graph facts from BFS.

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Coeffs = std::map<int, cplx>;
using Graph = std::vector<std::vector<int>>;

/// xorshift64*; deliberately not the library generator.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next();
  double unit();  // [0, 1)
  int below(int n);

 private:
  std::uint64_t s_;
};

cplx evalTrig(const Coeffs& c, double x);

/// Max of |p| on an n-point uniform grid.
double gridSup(const Coeffs& c, int n);

/// Largest eigenvalue of the real symmetric / Hermitian tridiagonal matrix
/// with diagonal d and squared off-diagonal moduli e2, by Sturm bisection.
double tridiagMaxEig(const std::vector<double>& d, const std::vector<double>& e2);

/// Spectral norm of the n x n lower bidiagonal matrix with diagonal a and
/// subdiagonal b (b.size() == a.size() - 1).
double bidiagNorm(const std::vector<cplx>& a, const std::vector<cplx>& b);

/// Spectral norm of a small dense matrix by power iteration on M*M.
double denseNorm(const std::vector<std::vector<cplx>>& m, int iterations = 2000);

/// max over `points` random binary expansions of the truncation-n norm of
/// the orbit representation of f0 + U f1 under x -> 2x mod 1.
double doublingBandOneNorm(const Coeffs& f0, const Coeffs& f1, int points, int n, std::uint64_t seed);

/// Reduced fraction arithmetic for x -> kx mod 1 on machine integers.
struct Frac {
  long long p = 0, q = 1;
  friend bool operator==(const Frac&, const Frac&) = default;
};
Frac reduce(long long p, long long q);
Frac timesK(Frac x, int k);
/// Smallest n >= 1 with phi^n(x) = x, or 0 when x is not periodic.
int period(Frac x, int k);

// Shift-space facts from the transition graph.
bool stronglyConnected(const Graph& t);
/// Number of admissible words of length n.
long long wordCount(const Graph& t, int n);
bool singleCycle(const Graph& t);
/// Every edge lies on a closed walk.
bool everyEdgeOnCycle(const Graph& t);

}  // namespace oracle
