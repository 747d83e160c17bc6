#include "semicrossed/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>

#include "semicrossed/error.hpp"
#include "semicrossed/expr.hpp"
#include "semicrossed/separating.hpp"

namespace semicrossed {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
int uniformInt(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
cplx randomScalar(Rng& rng, double r) { return {uniform(rng, -r, r), uniform(rng, -r, r)}; }
cplx randomUnit(Rng& rng) { return std::polar(1.0, uniform(rng, 0.0, 2.0 * std::numbers::pi)); }

CheckRow row(const std::string& check, std::string item, double measured, double tolerance) {
  return {check, std::move(item), measured, tolerance, measured <= tolerance};
}

struct NamedSystem {
  std::string name;
  DynamicalSystem sys;
};

std::vector<NamedSystem> corpusSystems() {
  return {{"circle2", DynamicalSystem::circle(2)},
          {"circle3", DynamicalSystem::circle(3)},
          {"golden", DynamicalSystem::sft({{1, 1}, {1, 0}})},
          {"sft3", DynamicalSystem::sft({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})},
          {"perm5", DynamicalSystem::permutation({1, 2, 0, 4, 3})}};
}

bool isCircle(const DynamicalSystem& sys) { return sys.kind() == DynamicalSystem::Kind::CircleTimesK; }

BaseFunction randomBase(const DynamicalSystem& sys, Rng& rng, double radius = 1.0) {
  switch (sys.kind()) {
    case DynamicalSystem::Kind::CircleTimesK: {
      std::map<std::int64_t, cplx> c;
      const int degree = uniformInt(rng, 0, 3);
      for (int k = -degree; k <= degree; ++k) c[k] = randomScalar(rng, radius / (2 * degree + 1));
      return trig(std::move(c));
    }
    case DynamicalSystem::Kind::Sft: {
      const int depth = uniformInt(rng, 1, 2);
      std::map<std::vector<int>, cplx> values;
      for (const auto& w : admissibleWords(sys, depth)) values[w] = randomScalar(rng, radius);
      return cylinder(sys, depth, std::move(values));
    }
    case DynamicalSystem::Kind::Permutation: {
      Tabular t;
      for (int s = 0; s < sys.alphabetSize(); ++s) t.values.push_back(randomScalar(rng, radius));
      return t;
    }
  }
  throw Error(Errc::InvalidSystem, "unknown system kind");
}

Element randomElement(const DynamicalSystem& sys, Rng& rng, int minPower, int maxPower, int maxDepth) {
  Element e;
  for (int n = minPower; n <= maxPower; ++n) {
    if (uniformInt(rng, 0, 3) == 0 && n != maxPower) continue;
    ExtFunction f{uniformInt(rng, 1, maxDepth), randomBase(sys, rng)};
    e = add(sys, e, monomial(n, f));
  }
  return pruned(e);
}

Point randomPoint(const DynamicalSystem& sys, Rng& rng) {
  switch (sys.kind()) {
    case DynamicalSystem::Kind::CircleTimesK: {
      if (uniformInt(rng, 0, 1) == 0) return proceduralPoint(sys, rng());
      const int q = uniformInt(rng, 2, 400);
      return Rational::make(uniformInt(rng, 0, q - 1), q);
    }
    case DynamicalSystem::Kind::Sft: return proceduralPoint(sys, rng());
    case DynamicalSystem::Kind::Permutation: return FiniteState{uniformInt(rng, 0, sys.alphabetSize() - 1)};
  }
  throw Error(Errc::InvalidSystem, "unknown system kind");
}

std::vector<Point> periodicPoints(const DynamicalSystem& sys, int maxDenominator) {
  Budget b;
  b.proceduralSamples = 0;
  b.maxDenominator = maxDenominator;
  return defaultSamples(sys, b);
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniformInt(rng, 0, static_cast<int>(v.size()) - 1))];
}

ExtPoint randomLift(const DynamicalSystem& sys, const Point& x, Rng& rng) {
  if (!std::holds_alternative<ProceduralWord>(x) && classify(sys, x, 1 << 20).isPeriodic()) return extendPeriodic(sys, x);
  return liftPoint(sys, x, SeededRandom{rng()});
}

// ---------------------------------------------------------------------------

std::vector<CheckRow> checkCovariance(const VerifyOptions& opt) {
  Rng rng(opt.budget.seed);
  const auto systems = corpusSystems();
  std::vector<std::vector<Point>> periodic;
  for (const auto& s : systems) periodic.push_back(periodicPoints(s.sys, 15));
  std::vector<CheckRow> rows;
  for (int i = 0; i < 200; ++i) {
    const std::size_t si = static_cast<std::size_t>(i) % systems.size();
    const auto& [name, sys] = systems[si];
    const BaseFunction f = randomBase(sys, rng);
    std::string label = "#" + std::to_string(i) + " " + name;
    RepSpec spec;
    switch ((i / static_cast<int>(systems.size())) % 4) {
      case 0: {
        const Point x = randomPoint(sys, rng);
        const int n = uniformInt(rng, 2, 12);
        label += " orbit " + toString(x) + " n=" + std::to_string(n);
        spec = OrbitTrunc{x, n};
        break;
      }
      case 1: {
        const Point y = pick(rng, periodic[si]);
        label += " periodic " + toString(y);
        spec = PeriodicSpec{y, randomUnit(rng)};
        break;
      }
      case 2: {
        const ExtPoint xt = randomLift(sys, randomPoint(sys, rng), rng);
        const int m = uniformInt(rng, 1, 6);
        label += " bilateral " + toString(xt, 2) + " M=" + std::to_string(m);
        spec = BilateralWindow{xt, m};
        break;
      }
      default: {
        const ExtPoint xt = randomLift(sys, randomPoint(sys, rng), rng);
        const int n = uniformInt(rng, 2, 12);
        label += " backward " + toString(xt, 2) + " n=" + std::to_string(n);
        spec = BackwardOrbit{xt, n};
        break;
      }
    }
    rows.push_back(row("covariance", label, covarianceDefect(sys, spec, f), isCircle(sys) ? 1e-12 : 0.0));
  }
  return rows;
}

std::vector<CheckRow> checkLemma3(const VerifyOptions&) {
  const auto sys = DynamicalSystem::circle(2);
  std::vector<CheckRow> rows;
  for (int q = 1; q <= 63; q += 2) {
    for (int p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Point x = Rational::make(p, q);
      const Classification base = classify(sys, x, 1 << 20);
      const Classification ext = classifyExt(sys, extendPeriodic(sys, x), 128);
      const bool ok = base.isPeriodic() && ext == Classification::periodic(base.period);
      rows.push_back({"lemma3", toString(x) + " " + toString(ext), ok ? 0.0 : 1.0, 0.0, ok});
    }
  }
  const Point half = Rational::make(1, 2);
  std::vector<Chooser> choosers{AlwaysMin{}, ExplicitTail{{1}}, ExplicitTail{{0, 1}}, ExplicitTail{{1, 1, 0}}};
  for (std::uint64_t s = 1; s <= 8; ++s) choosers.push_back(SeededRandom{s});
  for (const auto& ch : choosers) {
    const Classification c = classifyExt(sys, liftPoint(sys, half, ch), 128);
    const bool ok = !c.isPeriodic();
    rows.push_back({"lemma3", "1/2 " + toString(ch) + " " + toString(c), ok ? 0.0 : 1.0, 0.0, ok});
  }
  return rows;
}

std::vector<CheckRow> checkThm1(const VerifyOptions&) {
  std::vector<CheckRow> rows;
  const SftProperty props[] = {SftProperty::Transitive, SftProperty::DensePeriodic, SftProperty::Minimal,
                               SftProperty::DenseRecurrent};
  for (int s = 1; s <= 3; ++s) {
    for (std::uint32_t bits = 0; bits < (1U << (s * s)); ++bits) {
      TransitionMatrix t(s, std::vector<int>(s));
      std::string label;
      for (int i = 0; i < s; ++i) {
        if (i) label += ' ';
        for (int j = 0; j < s; ++j) {
          t[i][j] = static_cast<int>((bits >> (i * s + j)) & 1U);
          label += static_cast<char>('0' + t[i][j]);
        }
      }
      try {
        validateTransition(t);
      } catch (const Error&) {
        continue;
      }
      const auto sys = DynamicalSystem::sft(t);
      for (auto p : props) {
        const TransferResult r = verifyTransfer(sys, p);
        const bool ok = r.base == r.extension;
        rows.push_back({"thm1",
                        label + " " + propertyName(p) + " " + (r.base ? "true" : "false") + "/" +
                            (r.extension ? "true" : "false"),
                        ok ? 0.0 : 1.0, 0.0, ok});
      }
    }
  }
  return rows;
}

std::vector<CheckRow> checkMonotone(const VerifyOptions& opt) {
  Rng rng(opt.budget.seed + 4);
  const auto systems = corpusSystems();
  std::vector<std::vector<Point>> periodic;
  for (const auto& s : systems) periodic.push_back(periodicPoints(s.sys, 15));
  std::vector<CheckRow> rows;
  for (int i = 0; i < 100; ++i) {
    const std::size_t si = static_cast<std::size_t>(i) % systems.size();
    const auto& [name, sys] = systems[si];
    const Element f = randomElement(sys, rng, 0, 3, 1);
    const double ell1 = ell1Upper(f);
    std::vector<Point> pts{randomPoint(sys, rng), randomPoint(sys, rng), pick(rng, periodic[si])};
    const NormEstimate a = estimateA(sys, f, pts, opt.budget.nMax);
    double drop = 0.0, excess = 0.0;
    for (std::size_t k = 1; k < a.traces.size(); ++k) {
      const auto& prev = a.traces[k - 1];
      const auto& cur = a.traces[k];
      if (prev.point != cur.point || cur.parameter <= prev.parameter) continue;
      drop = std::max(drop, (prev.value - cur.value) / std::max(1.0, prev.value));
    }
    for (const auto& t : a.traces) excess = std::max(excess, t.value - ell1);
    const Point& y = pts.back();
    excess = std::max(excess, spectralNorm(periodicRepMatrix(sys, y, randomUnit(rng), f)) - ell1);
    const ExtPoint xt = randomLift(sys, pts.front(), rng);
    const int m = std::max<int>(8, static_cast<int>(f.band()));
    excess = std::max(excess, spectralNorm(bilateralRepMatrix(sys, xt, f, m)) - ell1);
    const std::string label = "#" + std::to_string(i) + " " + name;
    rows.push_back(row("monotone", label + " trace-drop", drop, 1e-9));
    rows.push_back(row("monotone", label + " l1-excess", excess, 1e-10));
  }
  return rows;
}

std::vector<std::pair<std::string, Element>> cor5Elements(std::uint64_t seed) {
  const auto sys = DynamicalSystem::circle(2);
  Rng rng(seed + 5);
  auto randomTrig = [&] {
    std::map<std::int64_t, cplx> c;
    for (int k = -2; k <= 2; ++k) c[k] = randomScalar(rng, 0.5);
    return ExtFunction{1, trig(std::move(c))};
  };
  const ExtFunction f0 = randomTrig(), f1 = randomTrig();
  Element mixed = add(sys, fromFunction(f0), monomial(1, f1));
  return {{"U", parseElement(sys, "U")},
          {"1+U", parseElement(sys, "1 + U")},
          {"U*cos(1)", parseElement(sys, "U*cos(1)")},
          {"f0+U*f1", mixed}};
}

std::vector<CheckRow> checkCor5(const VerifyOptions& opt) {
  const auto sys = DynamicalSystem::circle(2);
  const auto samples = defaultSamples(sys, opt.budget);
  std::vector<CheckRow> rows;
  for (const auto& [name, f] : cor5Elements(opt.budget.seed)) {
    const NormEstimate est = semicrossedNorm(sys, f, samples, opt.budget.nMax, opt.budget.gridSize);
    const auto& b = est.bracket;
    rows.push_back(row("cor5", name + " width", b.upper - b.lower, 5e-2));
    double brute = 0.0;
    for (int i = 0; i < 64; ++i) {
      const Point x = proceduralPoint(sys, opt.budget.seed * 7919 + static_cast<std::uint64_t>(i));
      brute = std::max(brute, spectralNorm(orbitRepMatrix(sys, x, f, 512)));
    }
    rows.push_back(row("cor5", name + " sampled-truncation-512 above upper", brute - b.upper, 1e-9));
    if (name == "1+U") {
      rows.push_back(row("cor5", "1+U lower vs 2", std::abs(b.lower - 2.0), 1e-12));
      rows.push_back(row("cor5", "1+U upper vs 2", b.upper - 2.0, 1e-6));
      const bool periodic = est.witness == "periodic";
      rows.push_back({"cor5", "1+U witness " + est.witness, periodic ? 0.0 : 1.0, 0.0, periodic});
    }
  }
  return rows;
}

std::vector<CheckRow> checkLemma5(const VerifyOptions& opt) {
  const auto sys = DynamicalSystem::circle(2);
  Rng rng(opt.budget.seed + 6);
  const auto periodic = periodicPoints(sys, 15);
  std::vector<CheckRow> rows;
  for (int i = 0; i < 50; ++i) {
    const Point y = pick(rng, periodic);
    const cplx lambda = randomUnit(rng);
    const Element f = randomElement(sys, rng, 0, 2, 1);
    const Lemma5Result r64 = lemma5Check(sys, y, lambda, f, 64);
    const Lemma5Result r128 = lemma5Check(sys, y, lambda, f, 128);
    const std::string label = "#" + std::to_string(i) + " " + toString(y);
    const double d64 = r64.rhs - r64.lhs, d128 = r128.rhs - r128.lhs;
    rows.push_back(row("lemma5", label + " deficit N=64", d64, 0.1));
    if (d64 <= 1e-9 && d128 <= 1e-9) {
      rows.push_back(row("lemma5", label + " no deficit", std::max(d64, d128), 1e-9));
    } else {
      const double ratio = d128 / d64;
      rows.push_back({"lemma5", label + " deficit ratio 128/64", ratio, 0.6, ratio >= 0.4 && ratio <= 0.6});
    }
  }
  return rows;
}

std::vector<CheckRow> checkLemma6(const VerifyOptions& opt) {
  Rng rng(opt.budget.seed + 7);
  const double tol = opt.tolerance.value_or(1e-2);
  const int w = opt.budget.window;
  const std::vector<int> windows{std::max(1, w / 4), std::max(1, w / 2), w};
  std::vector<std::pair<std::string, DynamicalSystem>> systems{
      {"perm3", DynamicalSystem::permutation({1, 2, 0})},
      {"perm5", DynamicalSystem::permutation({1, 0, 3, 4, 2})},
      {"circle2", DynamicalSystem::circle(2)}};
  std::vector<CheckRow> rows;
  for (const auto& [name, sys] : systems) {
    std::vector<Point> pts;
    if (isCircle(sys)) {
      pts = {Rational::make(1, 3), Rational::make(1, 7), Rational::make(3, 5), Rational::make(1, 9)};
    } else {
      pts = {FiniteState{0}, FiniteState{sys.alphabetSize() - 1}};
    }
    for (const auto& y : pts) {
      const ExtPoint yt = extendPeriodic(sys, y);
      std::vector<Element> fs{powerOfU(sys, 1), randomElement(sys, rng, 0, 2, 1)};
      if (isCircle(sys)) fs.push_back(parseElement(sys, "1 + U*cos(1)"));
      const int p = static_cast<int>(std::get<PeriodicLift>(yt).period());
      // The window centred at phase M mod p is one of the orbit truncations,
      // so the trend in M is only visible along windows in one residue class.
      std::vector<int> aligned;
      for (int m : windows) aligned.push_back(p * ((m + p - 1) / p));
      for (std::size_t k = 0; k < fs.size(); ++k) {
        const std::string label = name + " " + toString(y) + " F" + std::to_string(k);
        const Lemma6Result r = lemma6Check(sys, yt, fs[k], w);
        rows.push_back(row("lemma6", label + " M=" + std::to_string(w), std::abs(r.bilateral - r.orbitSup), tol));
        double prev = 0.0;
        for (std::size_t j = 0; j < aligned.size(); ++j) {
          const Lemma6Result a = lemma6Check(sys, yt, fs[k], aligned[j]);
          const double diff = std::abs(a.bilateral - a.orbitSup);
          if (j > 0) rows.push_back(row("lemma6", label + " increase M=" + std::to_string(aligned[j]), diff - prev, 1e-9));
          prev = diff;
        }
      }
    }
  }
  return rows;
}

std::vector<CheckRow> checkLemma7(const VerifyOptions& opt) {
  Rng rng(opt.budget.seed + 8);
  const auto systems = corpusSystems();
  std::vector<CheckRow> rows;
  for (int i = 0; i < 100; ++i) {
    const auto& [name, sys] = systems[static_cast<std::size_t>(i) % systems.size()];
    const Element f = randomElement(sys, rng, -2, 2, 3);
    const Element af = alphaElement(sys, f);
    const std::string label = "#" + std::to_string(i) + " " + name;

    double structural = 0.0;
    bool samePowers = af.coeffs.size() == f.coeffs.size();
    std::vector<ExtPoint> pts;
    for (int k = 0; k < 4; ++k) pts.push_back(randomLift(sys, randomPoint(sys, rng), rng));
    for (const auto& [n, g] : f.coeffs) {
      const auto it = af.coeffs.find(n);
      if (it == af.coeffs.end()) {
        samePowers = false;
        continue;
      }
      for (const auto& xt : pts) {
        structural = std::max(structural, std::abs(evaluate(sys, it->second, xt) - evaluate(sys, g, tildeApply(xt))));
      }
    }
    if (!samePowers) structural = 1.0;
    rows.push_back(row("lemma7", label + " coefficients", structural, isCircle(sys) ? 1e-12 : 0.0));

    const int m = std::max<int>(4, static_cast<int>(f.band()));
    const ExtPoint& xt = pts.front();
    const Matrix mf = bilateralRepMatrix(sys, xt, f, m);
    const Matrix maf = bilateralRepMatrix(sys, xt, af, m);
    const Matrix u = bilateralRepMatrix(sys, xt, powerOfU(sys, 1), m);
    const Matrix conj = u.adjoint() * mf * u;
    const auto inner = 2 * m;
    const double err = (conj.topLeftCorner(inner, inner) - maf.topLeftCorner(inner, inner)).cwiseAbs().maxCoeff();
    rows.push_back(row("lemma7", label + " interior block", err, 1e-12));
  }
  return rows;
}

std::vector<CheckRow> checkPushdown(const VerifyOptions& opt) {
  Rng rng(opt.budget.seed + 9);
  const auto systems = corpusSystems();
  std::vector<std::vector<Point>> periodic;
  for (const auto& s : systems) periodic.push_back(periodicPoints(s.sys, 15));
  std::vector<CheckRow> rows;
  for (int i = 0; i < 50; ++i) {
    const std::size_t si = static_cast<std::size_t>(i) % systems.size();
    const auto& [name, sys] = systems[si];
    Element g = randomElement(sys, rng, 0, 2, 4);
    const int d = g.maxDepth();
    for (int j = 0; j <= 2; ++j) {
      const std::string label = "#" + std::to_string(i) + " " + name + " d=" + std::to_string(d) + " m=" +
                                std::to_string(d - 1 + j);
      const Element h = pushdown(sys, g, d - 1 + j);
      rows.push_back({"thm4-pushdown", label + " semicrossed", h.isSemicrossed() ? 0.0 : 1.0, 0.0, h.isSemicrossed()});
      double dev = 0.0;
      for (int k = 0; k < 4; ++k) {
        const Point& y = pick(rng, periodic[si]);
        const cplx lambda = randomUnit(rng);
        dev = std::max(dev, std::abs(spectralNorm(periodicRepMatrix(sys, y, lambda, h)) -
                                     spectralNorm(periodicRepMatrix(sys, y, lambda, g))));
      }
      rows.push_back(row("thm4-pushdown", label + " periodic norms", dev, 1e-10));
    }
  }
  return rows;
}

std::vector<CheckRow> checkThm3(const VerifyOptions& opt) {
  std::vector<std::tuple<std::string, DynamicalSystem, Element>> corpus;
  const auto circle = DynamicalSystem::circle(2);
  for (const auto& [name, f] : cor5Elements(opt.budget.seed)) corpus.emplace_back("circle2 " + name, circle, f);
  Rng rng(opt.budget.seed + 10);
  for (const auto& [name, sys] : corpusSystems()) {
    Element g = randomElement(sys, rng, 0, 2, 3);
    corpus.emplace_back(name + " pushdown", sys, pushdown(sys, g, g.maxDepth() - 1));
  }
  std::vector<CheckRow> rows;
  for (const auto& [name, sys, f] : corpus) {
    const Theorem3Result r = theorem3Check(sys, f, opt.budget);
    const auto& s = r.semicrossed.bracket;
    const auto& c = r.crossed;
    rows.push_back(row("thm3", name + " bracket gap", std::max({0.0, c.lower - s.upper, s.lower - c.upper}), 1e-9));
  }
  return rows;
}

std::vector<CheckRow> checkProp1(const VerifyOptions& opt) {
  const auto sys = DynamicalSystem::circle(2);
  Rng rng(opt.budget.seed + 11);
  std::vector<Point> orbits;
  while (orbits.size() < 10) {
    const int q = 2 * uniformInt(rng, 50, 500) + 1;
    const Point x = Rational::make(uniformInt(rng, 1, q - 1), q);
    const auto c = classify(sys, x, 1 << 20);
    if (c.period + c.preperiod > 10) orbits.push_back(x);
  }
  for (int i = 0; i < 10; ++i) orbits.push_back(proceduralPoint(sys, rng()));
  std::vector<CheckRow> rows;
  for (const auto& x : orbits) {
    for (int n = 4; n <= 10; ++n) {
      const TailReport t = invariantTailCheck(sys, x, n);
      const bool ok = t.tailsOnly && t.diagonalSeparates;
      rows.push_back({"prop1", toString(x) + " n=" + std::to_string(n) + " subspaces=" + std::to_string(t.invariantSubspaces),
                      t.separationDefect, 1e-12, ok});
    }
  }
  return rows;
}

using CheckFn = std::function<std::vector<CheckRow>(const VerifyOptions&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r{
      {"covariance", checkCovariance}, {"lemma3", checkLemma3}, {"thm1", checkThm1},
      {"monotone", checkMonotone},     {"cor5", checkCor5},     {"lemma5", checkLemma5},
      {"lemma6", checkLemma6},         {"lemma7", checkLemma7}, {"thm4-pushdown", checkPushdown},
      {"thm3", checkThm3},             {"prop1", checkProp1}};
  return r;
}

}  // namespace

const std::vector<std::string>& checkNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

std::vector<CheckRow> runCheck(const std::string& name, const VerifyOptions& options) {
  for (const auto& [n, f] : registry()) {
    if (n == name) return f(options);
  }
  throw Error(Errc::BadInput, "unknown check '" + name + "'");
}

}  // namespace semicrossed
