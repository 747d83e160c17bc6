#include "semicrossed/norms.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

#include "detail.hpp"
#include "semicrossed/error.hpp"

namespace semicrossed {

namespace {

double bandedNorm(const Matrix& a, int kl, int ku) {
  const int n = static_cast<int>(a.rows());
  const int ldab = kl + ku + 1;
  std::vector<std::complex<double>> ab(static_cast<std::size_t>(ldab) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    for (int i = std::max(0, j - ku); i <= std::min(n - 1, j + kl); ++i) ab[(ku + i - j) + static_cast<std::size_t>(j) * ldab] = a(i, j);
  }
  std::vector<double> d(n), e(std::max(1, n - 1));
  std::complex<double> dummy = 0.0;
  lapack_int info = LAPACKE_zgbbrd(LAPACK_COL_MAJOR, 'N', n, n, 0, kl, ku, ab.data(), ldab, d.data(), e.data(), &dummy, 1,
                                   &dummy, 1, &dummy, 1);
  if (info != 0) throw Error(Errc::NonFinite, "banded bidiagonalization failed (info " + std::to_string(info) + ")");
  double rdummy = 0.0;
  info = LAPACKE_dbdsqr(LAPACK_COL_MAJOR, 'U', n, 0, 0, 0, d.data(), e.data(), &rdummy, 1, &rdummy, 1, &rdummy, 1);
  if (info != 0) throw Error(Errc::NonFinite, "bidiagonal SVD did not converge (info " + std::to_string(info) + ")");
  double top = 0.0;
  for (double v : d) top = std::max(top, std::abs(v));
  return top;
}

double denseNorm(const Matrix& a) {
  const Matrix g = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

bool isPeriodic(const DynamicalSystem& sys, const Point& x) {
  if (std::holds_alternative<ProceduralWord>(x)) return false;
  return classify(sys, x, std::int64_t{1} << 24).isPeriodic();
}

double lipschitzConstant(const Element& f) {
  double l = 0.0;
  for (const auto& [n, g] : f.coeffs) l += static_cast<double>(n < 0 ? -n : n) * supNorm(g).upper;
  return l;
}

std::vector<int> truncations(int nMax) {
  std::vector<int> out;
  for (int n = 1; n < nMax; n *= 2) out.push_back(n);
  out.push_back(nMax);
  return out;
}

}  // namespace

double spectralNorm(const Matrix& m) {
  if (m.size() == 0) throw Error(Errc::BadInput, "empty matrix");
  if (!m.allFinite()) throw Error(Errc::NonFinite, "matrix has non-finite entries");
  if (m.rows() != m.cols()) return denseNorm(m);
  const int n = static_cast<int>(m.rows());
  int kl = 0, ku = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (m(i, j) == cplx(0.0, 0.0)) continue;
      kl = std::max(kl, i - j);
      ku = std::max(ku, j - i);
    }
  }
  if (n >= 32 && 4 * (kl + ku + 1) <= n) return bandedNorm(m, kl, ku);
  return denseNorm(m);
}

std::vector<Point> defaultSamples(const DynamicalSystem& sys, const Budget& budget) {
  std::vector<Point> out;
  switch (sys.kind()) {
    case DynamicalSystem::Kind::CircleTimesK: {
      for (int q = 1; q <= budget.maxDenominator; ++q) {
        if (std::gcd(q, sys.multiplier()) != 1) continue;
        for (int p = 0; p < q; ++p) {
          if (std::gcd(p, q) == 1) out.push_back(Rational::make(p, q));
        }
      }
      break;
    }
    case DynamicalSystem::Kind::Sft: {
      const int s = sys.alphabetSize();
      std::vector<Word> seen;
      std::vector<std::vector<int>> frontier{{}};
      for (int len = 1; len <= 6; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier) {
          for (int a = 0; a < s; ++a) {
            if (!w.empty() && !sys.allowed(w.back(), a)) continue;
            next.push_back(w);
            next.back().push_back(a);
          }
        }
        frontier = next;
        for (const auto& w : frontier) {
          if (!sys.allowed(w.back(), w.front())) continue;
          Word word = Word::make({}, w);
          if (std::find(seen.begin(), seen.end(), word) == seen.end()) seen.push_back(word);
        }
      }
      for (auto& w : seen) out.push_back(std::move(w));
      break;
    }
    case DynamicalSystem::Kind::Permutation:
      for (int s = 0; s < sys.alphabetSize(); ++s) out.push_back(FiniteState{s});
      return out;
  }
  for (int i = 0; i < budget.proceduralSamples; ++i) {
    out.push_back(proceduralPoint(sys, detail::mix(budget.seed, static_cast<std::uint64_t>(i))));
  }
  return out;
}

NormEstimate estimateA(const DynamicalSystem& sys, const Element& f, const std::vector<Point>& points, int nMax) {
  requireSemicrossed(f);
  if (points.empty()) throw Error(Errc::BadInput, "estimateA needs at least one sample point");
  if (nMax < std::max<std::int64_t>(1, f.band())) throw Error(Errc::BadInput, "nMax is smaller than the band of F");
  NormEstimate est;
  est.bracket.upper = ell1Upper(f);
  est.bracket.upperMethod = "l1 norm";
  std::string best;
  for (const auto& x : points) {
    const Matrix full = orbitRepMatrix(sys, x, f, nMax);
    const std::string label = toString(x);
    for (int n : truncations(nMax)) {
      const double v = spectralNorm(full.topLeftCorner(n, n));
      est.traces.push_back({"orbit", label, static_cast<double>(n), v});
      if (v > est.bracket.lower) {
        est.bracket.lower = v;
        best = label + " n=" + std::to_string(n);
      }
    }
  }
  est.bracket.lowerWitness = "orbit " + best;
  est.bracket.upper = std::max(est.bracket.upper, est.bracket.lower);
  est.witness = "orbit";
  return est;
}

NormEstimate estimateB(const DynamicalSystem& sys, const Element& f, const std::vector<Point>& periodicPoints,
                       int gridSize) {
  requireSemicrossed(f);
  if (gridSize < 8) throw Error(Errc::BadInput, "gridSize must be >= 8");
  std::map<std::string, PeriodicLift> cycles;
  for (const auto& y : periodicPoints) {
    const ExtPoint yt = extendPeriodic(sys, y);
    const auto& lift = std::get<PeriodicLift>(yt);
    const auto& coords = lift.coords();
    const auto first = std::min_element(coords.begin(), coords.end(), pointLess);
    cycles.emplace(toString(*first), lift);
  }
  NormEstimate est;
  est.witness = "periodic";
  const double ell1 = ell1Upper(f);
  double gridMax = 0.0;
  std::string best;
  for (const auto& [label, lift] : cycles) {
    std::vector<std::pair<std::int64_t, Matrix>> parts;
    for (const auto& [k, g] : f.coeffs) parts.emplace_back(k, periodicRepMatrix(sys, lift, 1.0, monomial(k, g)));
    const auto p = static_cast<Eigen::Index>(lift.period());
    double cycleMax = -1.0, argMax = 0.0;
    for (int j = 0; j < gridSize; ++j) {
      const double t = static_cast<double>(j) / gridSize;
      const cplx lambda = std::polar(1.0, 2.0 * std::numbers::pi * t);
      Matrix m = Matrix::Zero(p, p);
      for (const auto& [k, a] : parts) m += std::pow(lambda, static_cast<int>(k)) * a;
      const double v = spectralNorm(m);
      if (v > cycleMax) {
        cycleMax = v;
        argMax = t;
      }
    }
    est.traces.push_back({"periodic", label, argMax, cycleMax});
    if (cycleMax > gridMax) {
      gridMax = cycleMax;
      best = label + " lambda=e^(2 pi i " + std::to_string(argMax) + ")";
    }
  }
  est.bracket.lower = gridMax;
  est.bracket.lowerWitness = cycles.empty() ? "no periodic samples" : "periodic " + best;
  const double certificate = gridMax + lipschitzConstant(f) * std::numbers::pi / gridSize;
  if (cycles.empty() || ell1 <= certificate) {
    est.bracket.upper = ell1;
    est.bracket.upperMethod = "l1 norm";
  } else {
    est.bracket.upper = certificate;
    est.bracket.upperMethod = "lambda grid + Lipschitz";
  }
  est.bracket.upper = std::max(est.bracket.upper, est.bracket.lower);
  return est;
}

NormEstimate semicrossedNorm(const DynamicalSystem& sys, const Element& f, const std::vector<Point>& samples, int nMax,
                             int gridSize) {
  std::vector<Point> periodic;
  for (const auto& x : samples) {
    if (isPeriodic(sys, x)) periodic.push_back(x);
  }
  const NormEstimate a = estimateA(sys, f, samples, nMax);
  const NormEstimate b = estimateB(sys, f, periodic, gridSize);
  NormEstimate out;
  out.traces = a.traces;
  out.traces.insert(out.traces.end(), b.traces.begin(), b.traces.end());
  const bool periodicWins = b.bracket.lower >= a.bracket.lower;
  out.witness = periodicWins ? "periodic" : "orbit";
  out.bracket.lower = std::max(a.bracket.lower, b.bracket.lower);
  out.bracket.lowerWitness = periodicWins ? b.bracket.lowerWitness : a.bracket.lowerWitness;
  // The periodic certificate only covers the sampled cycles; an orbit sample
  // above it refutes it.
  if (b.bracket.upper < a.bracket.upper && b.bracket.upper >= out.bracket.lower) {
    out.bracket.upper = b.bracket.upper;
    out.bracket.upperMethod = b.bracket.upperMethod;
  } else {
    out.bracket.upper = a.bracket.upper;
    out.bracket.upperMethod = a.bracket.upperMethod;
  }
  return out;
}

std::vector<cplx> lemma5Vector(const std::vector<cplx>& xi, cplx lambda, int N) {
  if (xi.empty() || N < 1) throw Error(Errc::BadInput, "need a nonempty xi and N >= 1");
  if (!(std::abs(std::abs(lambda) - 1.0) <= 1e-12)) throw Error(Errc::BadInput, "|lambda| must be 1");
  double norm2 = 0.0;
  for (cplx v : xi) norm2 += std::norm(v);
  if (!(std::abs(std::sqrt(norm2) - 1.0) <= 1e-12)) throw Error(Errc::BadInput, "xi must have norm 1");
  const std::size_t p = xi.size();
  std::vector<cplx> eta(p * static_cast<std::size_t>(N));
  const double s = 1.0 / std::sqrt(static_cast<double>(N));
  for (int j = 0; j < N; ++j) {
    const cplx lj = std::pow(lambda, N - j);
    for (std::size_t i = 0; i < p; ++i) eta[i + j * p] = lj * xi[i] * s;
  }
  return eta;
}

Lemma5Result lemma5Check(const DynamicalSystem& sys, const Point& y, cplx lambda, const Element& f, int N) {
  requireSemicrossed(f);
  const auto lift = std::get<PeriodicLift>(extendPeriodic(sys, y));
  const Matrix pi = periodicRepMatrix(sys, lift, lambda, f);
  Eigen::JacobiSVD<Matrix> svd(pi, Eigen::ComputeFullV);
  const Eigen::VectorXcd top = svd.matrixV().col(0);
  const auto p = static_cast<int>(lift.period());
  // lambda C is conjugate, via D = diag(lambda^{-(i-1)}), to the cycle that
  // carries lambda^p on its wrap-around entry, which is the form the eta
  // construction is written for.
  std::vector<cplx> xi(p);
  for (int i = 0; i < p; ++i) xi[i] = std::pow(std::conj(lambda), i) * top(i);
  const double xiNorm = std::sqrt(std::accumulate(xi.begin(), xi.end(), 0.0, [](double s, cplx v) { return s + std::norm(v); }));
  for (auto& v : xi) v /= xiNorm;
  const auto eta = lemma5Vector(xi, std::pow(lambda, p), N);

  Lemma5Result r;
  r.truncation = N * p + static_cast<int>(f.band());
  r.rhs = (pi * top).norm();
  const Matrix trunc = orbitRepMatrix(sys, y, f, r.truncation);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(r.truncation);
  for (std::size_t i = 0; i < eta.size(); ++i) v(static_cast<Eigen::Index>(i)) = eta[i];
  r.lhs = (trunc * v).norm();
  return r;
}

Lemma6Result lemma6Check(const DynamicalSystem& sys, const ExtPoint& xt, const Element& f, int M) {
  requireSemicrossed(f);
  Lemma6Result r;
  r.bilateral = spectralNorm(bilateralRepMatrix(sys, xt, f, M));
  std::map<std::string, double> seen;
  for (int k = 0; k <= 2 * M; ++k) {
    const Point y = project(tildePower(xt, -k));
    const std::string key = toString(y);
    if (seen.count(key)) continue;
    const double v = spectralNorm(orbitRepMatrix(sys, y, f, 2 * M + 1));
    seen.emplace(key, v);
    r.orbitSup = std::max(r.orbitSup, v);
  }
  return r;
}

Theorem3Result theorem3Check(const DynamicalSystem& sys, const Element& f, const Budget& budget) {
  const auto samples = defaultSamples(sys, budget);
  Theorem3Result r;
  r.semicrossed = semicrossedNorm(sys, f, samples, budget.nMax, budget.gridSize);
  r.crossed.upper = ell1Upper(f);
  r.crossed.upperMethod = "l1 norm";
  const int window = std::max<int>(budget.window, static_cast<int>(f.band()));
  for (const auto& x : samples) {
    const ExtPoint xt = isPeriodic(sys, x) ? extendPeriodic(sys, x) : liftPoint(sys, x, SeededRandom{budget.seed});
    const double v = spectralNorm(bilateralRepMatrix(sys, xt, f, window));
    if (v > r.crossed.lower) {
      r.crossed.lower = v;
      r.crossed.lowerWitness = "bilateral " + toString(xt, 2) + " M=" + std::to_string(window);
    }
  }
  r.crossed.upper = std::max(r.crossed.upper, r.crossed.lower);
  return r;
}

}  // namespace semicrossed
