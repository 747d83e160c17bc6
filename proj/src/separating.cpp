#include "semicrossed/separating.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "semicrossed/error.hpp"

namespace semicrossed {

namespace {

constexpr std::size_t kSymbolScan = 4096;

double circularDistance(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, 1.0 - d);
}

/// Normalized Fejer kernel of order L centred at c: equals 1 at c and
/// (sin(pi (L+1) t) / ((L+1) sin(pi t)))^2 at distance t.
double fejer(double x, double c, std::int64_t L) {
  const double t = x - c;
  const double s = std::sin(std::numbers::pi * t);
  if (std::abs(s) < 1e-300) return 1.0;
  const double r = std::sin(std::numbers::pi * static_cast<double>(L + 1) * t) / (static_cast<double>(L + 1) * s);
  return r * r;
}

BaseFunction circleBump(const DynamicalSystem& sys, const std::vector<Point>& pts, std::size_t target) {
  std::vector<double> t(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) t[i] = circleValue(sys, pts[i]);
  double delta = 0.5;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i != target) delta = std::min(delta, circularDistance(t[i], t[target]));
  }
  if (pts.size() == 1) return constantBase(sys, 1.0);
  // (L+1) sin(pi delta) >= 4: every other bump value is at most 1/16.
  const auto L = static_cast<std::int64_t>(std::ceil(2.0 / delta));
  std::vector<double> level;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i != target) level.push_back(fejer(t[i], t[target], L));
  }
  std::sort(level.begin(), level.end());
  level.erase(std::unique(level.begin(), level.end()), level.end());

  const std::int64_t degree = 2 * L * static_cast<std::int64_t>(level.size());
  std::size_t grid = 64;
  while (grid < static_cast<std::size_t>(2 * degree + 1)) grid *= 2;
  std::vector<cplx> samples(grid), spectrum;
  for (std::size_t j = 0; j < grid; ++j) {
    const double u = fejer(static_cast<double>(j) / static_cast<double>(grid), t[target], L);
    double f = 1.0;
    for (double v : level) {
      const double q = (u - v) / (1.0 - v);
      f *= q * q;
    }
    samples[j] = f;
  }
  Eigen::FFT<double> fft;
  fft.fwd(spectrum, samples);
  std::map<std::int64_t, cplx> coeffs;
  const double inv = 1.0 / static_cast<double>(grid);
  coeffs[0] = spectrum[0].real() * inv;
  for (std::int64_t k = 1; k <= degree; ++k) {
    const cplx c = spectrum[k] * inv;
    coeffs[k] = c;
    coeffs[-k] = std::conj(c);
  }
  return trig(std::move(coeffs));
}

}  // namespace

BaseFunction separatingFunction(const DynamicalSystem& sys, const std::vector<Point>& orbit, int n, int m) {
  if (n < 1 || m < n || static_cast<std::size_t>(m) > orbit.size()) {
    throw Error(Errc::BadInput, "need 1 <= n <= m <= orbit length");
  }
  const std::vector<Point> pts(orbit.begin(), orbit.begin() + m);
  const auto target = static_cast<std::size_t>(n - 1);
  for (const auto& p : pts) validatePoint(sys, p);
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (j != target && samePoint(sys, pts[j], pts[target], kSymbolScan)) {
      throw Error(Errc::SeparationImpossible, "orbit position " + std::to_string(j + 1) + " equals position " +
                                                  std::to_string(n) + " (" + toString(pts[target]) + ")");
    }
  }
  switch (sys.kind()) {
    case DynamicalSystem::Kind::CircleTimesK: return circleBump(sys, pts, target);
    case DynamicalSystem::Kind::Sft: {
      int depth = 1;
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (j == target) continue;
        std::size_t i = 0;
        while (symbolAt(pts[j], i) == symbolAt(pts[target], i)) ++i;
        depth = std::max(depth, static_cast<int>(i) + 1);
      }
      std::vector<int> word(depth);
      for (int i = 0; i < depth; ++i) word[i] = symbolAt(pts[target], static_cast<std::size_t>(i));
      return cylinder(sys, depth, {{word, 1.0}});
    }
    case DynamicalSystem::Kind::Permutation: {
      Tabular t{std::vector<cplx>(sys.alphabetSize(), 0.0)};
      t.values[std::get<FiniteState>(pts[target]).state] = 1.0;
      return t;
    }
  }
  return TrigPoly{};
}

}  // namespace semicrossed
