#include "semicrossed/funcalg.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "detail.hpp"
#include "semicrossed/error.hpp"

namespace semicrossed {

namespace {

constexpr std::size_t kMaxWords = std::size_t{1} << 20;

[[noreturn]] void wrongKind(const DynamicalSystem& sys, const char* what) {
  throw Error(Errc::TypeMismatch, std::string(what) + " does not belong to " + sys.describe());
}

cplx unitPhase(double t) {
  const double a = 2.0 * std::numbers::pi * t;
  return {std::cos(a), std::sin(a)};
}

/// Evaluates frac(k * x) for many k at one point; rationals stay exact
/// before the final division.
class PhaseOf {
 public:
  PhaseOf(const DynamicalSystem& sys, const Point& x) {
    if (const auto* r = std::get_if<Rational>(&x)) {
      if (r->den() < (BigInt(1) << 62)) {
        kind_ = Kind::Small;
        num_ = static_cast<std::uint64_t>(r->num());
        den_ = static_cast<std::uint64_t>(r->den());
      } else {
        kind_ = Kind::Big;
        big_ = r;
      }
      return;
    }
    if (const auto* p = std::get_if<ProceduralWord>(&x)) {
      kind_ = Kind::Digits;
      long double scale = 1.0L;
      const long double base = sys.multiplier();
      for (std::size_t i = 0; i < 80 && scale > 1e-24L; ++i) {
        scale /= base;
        value_ += scale * p->symbol(i);
      }
      return;
    }
    wrongKind(sys, ("point " + toString(x)).c_str());
  }

  double operator()(std::int64_t k) const {
    if (k == 0) return 0.0;
    switch (kind_) {
      case Kind::Small: {
        if (num_ == 0) return 0.0;
        using u128 = unsigned __int128;
        const std::uint64_t kk = static_cast<std::uint64_t>(k < 0 ? -(k + 1) : k - 1) + 1;
        std::uint64_t m = static_cast<std::uint64_t>((static_cast<u128>(kk % den_) * num_) % den_);
        if (k < 0 && m != 0) m = den_ - m;
        return static_cast<double>(m) / static_cast<double>(den_);
      }
      case Kind::Big: {
        BigInt m = (BigInt(k) * big_->num()) % big_->den();
        if (m < 0) m += big_->den();
        return Rational::make(m, big_->den()).toDouble();
      }
      case Kind::Digits: {
        long double t = value_ * static_cast<long double>(k);
        t -= std::floor(t);
        return static_cast<double>(t);
      }
    }
    return 0.0;
  }

 private:
  enum class Kind { Small, Big, Digits };
  Kind kind_ = Kind::Small;
  std::uint64_t num_ = 0, den_ = 1;
  const Rational* big_ = nullptr;
  long double value_ = 0.0L;
};

std::vector<int> firstSymbols(const Point& x, int d) {
  std::vector<int> w(d);
  for (int i = 0; i < d; ++i) w[i] = symbolAt(x, static_cast<std::size_t>(i));
  return w;
}

Cylinder refine(const DynamicalSystem& sys, const Cylinder& c, int depth) {
  if (depth == c.depth) return c;
  Cylinder out{depth, {}};
  for (auto& w : admissibleWords(sys, depth)) {
    std::vector<int> head(w.begin(), w.begin() + c.depth);
    out.values.emplace(std::move(w), c.values.at(head));
  }
  return out;
}

void pruneZeros(TrigPoly& p) {
  std::erase_if(p.coeffs, [](const auto& kv) { return kv.second == cplx(0.0, 0.0); });
}

std::string formatComplex(cplx c) {
  char buf[96];
  if (c.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", c.real());
  } else {
    std::snprintf(buf, sizeof buf, "(%.17g,%.17g)", c.real(), c.imag());
  }
  return buf;
}

template <class Op>
BaseFunction combine(const DynamicalSystem& sys, const BaseFunction& a, const BaseFunction& b, Op op) {
  if (a.index() != b.index()) throw Error(Errc::TypeMismatch, "base functions of different kinds");
  if (const auto* ca = std::get_if<Cylinder>(&a)) {
    const auto& cb = std::get<Cylinder>(b);
    const int d = std::max(ca->depth, cb.depth);
    Cylinder ra = refine(sys, *ca, d);
    const Cylinder rb = refine(sys, cb, d);
    for (auto& [w, v] : ra.values) v = op(v, rb.values.at(w));
    return ra;
  }
  const auto& ta = std::get<Tabular>(a);
  const auto& tb = std::get<Tabular>(b);
  if (ta.values.size() != tb.values.size()) throw Error(Errc::TypeMismatch, "tabular functions of different sizes");
  Tabular out = ta;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = op(ta.values[i], tb.values[i]);
  return out;
}

}  // namespace

std::int64_t TrigPoly::degree() const {
  std::int64_t d = 0;
  for (const auto& [k, c] : coeffs) d = std::max(d, k < 0 ? -k : k);
  return d;
}

std::vector<std::vector<int>> admissibleWords(const DynamicalSystem& sys, int d) {
  if (sys.kind() != DynamicalSystem::Kind::Sft) wrongKind(sys, "cylinder function");
  if (d < 1) throw Error(Errc::BadInput, "cylinder depth must be >= 1");
  const int s = sys.alphabetSize();
  std::vector<std::vector<int>> words;
  for (int a = 0; a < s; ++a) words.push_back({a});
  for (int len = 1; len < d; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words) {
      for (int a = 0; a < s; ++a) {
        if (!sys.allowed(w.back(), a)) continue;
        next.push_back(w);
        next.back().push_back(a);
      }
    }
    if (next.size() > kMaxWords) throw Error(Errc::BadInput, "too many admissible words at depth " + std::to_string(d));
    words = std::move(next);
  }
  return words;
}

TrigPoly trig(std::map<std::int64_t, cplx> coeffs) {
  TrigPoly p{std::move(coeffs)};
  for (const auto& [k, c] : p.coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw Error(Errc::NonFinite, "non-finite coefficient");
  }
  pruneZeros(p);
  return p;
}

Cylinder cylinder(const DynamicalSystem& sys, int depth, std::map<std::vector<int>, cplx> values) {
  Cylinder out{depth, {}};
  for (auto& w : admissibleWords(sys, depth)) out.values.emplace(std::move(w), cplx(0.0, 0.0));
  for (auto& [w, v] : values) {
    auto it = out.values.find(w);
    if (it == out.values.end()) {
      std::string text;
      for (int a : w) text += std::to_string(a);
      throw Error(Errc::InvalidPoint, "word " + text + " is not admissible at depth " + std::to_string(depth));
    }
    it->second = v;
  }
  return out;
}

BaseFunction constantBase(const DynamicalSystem& sys, cplx c) {
  switch (sys.kind()) {
    case DynamicalSystem::Kind::CircleTimesK: return trig({{0, c}});
    case DynamicalSystem::Kind::Sft: {
      std::map<std::vector<int>, cplx> v;
      for (int a = 0; a < sys.alphabetSize(); ++a) v[{a}] = c;
      return cylinder(sys, 1, std::move(v));
    }
    case DynamicalSystem::Kind::Permutation: return Tabular{std::vector<cplx>(sys.alphabetSize(), c)};
  }
  return TrigPoly{};
}

TrigPoly cosine(std::int64_t k) {
  if (k == 0) return trig({{0, 1.0}});
  return trig({{k, 0.5}, {-k, 0.5}});
}

TrigPoly sine(std::int64_t k) {
  if (k == 0) return TrigPoly{};
  return trig({{k, cplx(0.0, -0.5)}, {-k, cplx(0.0, 0.5)}});
}

void validateBase(const DynamicalSystem& sys, const BaseFunction& g) {
  using K = DynamicalSystem::Kind;
  std::visit(detail::Overloaded{
                 [&](const TrigPoly&) {
                   if (sys.kind() != K::CircleTimesK) wrongKind(sys, "trigonometric polynomial");
                 },
                 [&](const Cylinder& c) {
                   if (sys.kind() != K::Sft) wrongKind(sys, "cylinder function");
                   const auto words = admissibleWords(sys, c.depth);
                   bool ok = words.size() == c.values.size();
                   for (std::size_t i = 0; ok && i < words.size(); ++i) ok = c.values.count(words[i]) == 1;
                   if (!ok) throw Error(Errc::TypeMismatch, "cylinder values do not match the admissible words");
                 },
                 [&](const Tabular& t) {
                   if (sys.kind() != K::Permutation) wrongKind(sys, "tabular function");
                   if (static_cast<int>(t.values.size()) != sys.alphabetSize()) {
                     throw Error(Errc::TypeMismatch, "tabular function has the wrong number of states");
                   }
                 },
             },
             g);
}

cplx evaluate(const DynamicalSystem& sys, const BaseFunction& g, const Point& x) {
  return std::visit(detail::Overloaded{
                        [&](const TrigPoly& p) {
                          cplx sum = 0.0;
                          const PhaseOf phase(sys, x);
                          for (const auto& [k, c] : p.coeffs) sum += c * unitPhase(phase(k));
                          return sum;
                        },
                        [&](const Cylinder& c) {
                          const auto it = c.values.find(firstSymbols(x, c.depth));
                          if (it == c.values.end()) throw Error(Errc::InvalidPoint, "point outside the shift space");
                          return it->second;
                        },
                        [&](const Tabular& t) {
                          const auto* f = std::get_if<FiniteState>(&x);
                          if (!f || f->state < 0 || static_cast<std::size_t>(f->state) >= t.values.size()) {
                            throw Error(Errc::TypeMismatch, "tabular function needs a state point");
                          }
                          return t.values[f->state];
                        },
                    },
                    g);
}

cplx evaluate(const DynamicalSystem& sys, const ExtFunction& f, const ExtPoint& xt) {
  return evaluate(sys, f.base, coordinate(xt, f.depth));
}

cplx evaluateShifted(const DynamicalSystem& sys, const ExtFunction& f, const ExtPoint& xt, std::int64_t j) {
  return evaluate(sys, f.base, coordinate(xt, f.depth - j));
}

BaseFunction alphaBase(const DynamicalSystem& sys, const BaseFunction& g) {
  validateBase(sys, g);
  return std::visit(detail::Overloaded{
                        [&](const TrigPoly& p) -> BaseFunction {
                          TrigPoly out;
                          for (const auto& [k, c] : p.coeffs) out.coeffs.emplace(k * sys.multiplier(), c);
                          return out;
                        },
                        [&](const Cylinder& c) -> BaseFunction {
                          Cylinder out{c.depth + 1, {}};
                          for (auto& w : admissibleWords(sys, c.depth + 1)) {
                            std::vector<int> tail(w.begin() + 1, w.end());
                            out.values.emplace(std::move(w), c.values.at(tail));
                          }
                          return out;
                        },
                        [&](const Tabular& t) -> BaseFunction {
                          Tabular out{std::vector<cplx>(t.values.size())};
                          for (std::size_t s = 0; s < t.values.size(); ++s) out.values[s] = t.values[sys.perm()[s]];
                          return out;
                        },
                    },
                    g);
}

BaseFunction alphaBasePower(const DynamicalSystem& sys, const BaseFunction& g, int n) {
  if (n < 0) throw Error(Errc::BadInput, "alpha is not invertible on the base");
  BaseFunction out = g;
  for (int i = 0; i < n; ++i) out = alphaBase(sys, out);
  return out;
}

BaseFunction add(const DynamicalSystem& sys, const BaseFunction& a, const BaseFunction& b) {
  if (const auto* pa = std::get_if<TrigPoly>(&a)) {
    const auto* pb = std::get_if<TrigPoly>(&b);
    if (!pb) throw Error(Errc::TypeMismatch, "base functions of different kinds");
    TrigPoly out = *pa;
    for (const auto& [k, c] : pb->coeffs) out.coeffs[k] += c;
    pruneZeros(out);
    return out;
  }
  return combine(sys, a, b, [](cplx x, cplx y) { return x + y; });
}

BaseFunction multiply(const DynamicalSystem& sys, const BaseFunction& a, const BaseFunction& b) {
  if (const auto* pa = std::get_if<TrigPoly>(&a)) {
    const auto* pb = std::get_if<TrigPoly>(&b);
    if (!pb) throw Error(Errc::TypeMismatch, "base functions of different kinds");
    TrigPoly out;
    for (const auto& [k, c] : pa->coeffs) {
      for (const auto& [l, d] : pb->coeffs) out.coeffs[k + l] += c * d;
    }
    pruneZeros(out);
    return out;
  }
  return combine(sys, a, b, [](cplx x, cplx y) { return x * y; });
}

BaseFunction scale(const BaseFunction& g, cplx c) {
  return std::visit(detail::Overloaded{
                        [&](TrigPoly p) -> BaseFunction {
                          for (auto& [k, v] : p.coeffs) v *= c;
                          pruneZeros(p);
                          return p;
                        },
                        [&](Cylinder cy) -> BaseFunction {
                          for (auto& [w, v] : cy.values) v *= c;
                          return cy;
                        },
                        [&](Tabular t) -> BaseFunction {
                          for (auto& v : t.values) v *= c;
                          return t;
                        },
                    },
                    g);
}

BaseFunction conj(const BaseFunction& g) {
  return std::visit(detail::Overloaded{
                        [](const TrigPoly& p) -> BaseFunction {
                          TrigPoly out;
                          for (const auto& [k, c] : p.coeffs) out.coeffs.emplace(-k, std::conj(c));
                          return out;
                        },
                        [](Cylinder cy) -> BaseFunction {
                          for (auto& [w, v] : cy.values) v = std::conj(v);
                          return cy;
                        },
                        [](Tabular t) -> BaseFunction {
                          for (auto& v : t.values) v = std::conj(v);
                          return t;
                        },
                    },
                    g);
}

bool isZero(const BaseFunction& g) {
  const cplx zero(0.0, 0.0);
  return std::visit(detail::Overloaded{
                        [&](const TrigPoly& p) {
                          return std::all_of(p.coeffs.begin(), p.coeffs.end(),
                                             [&](const auto& kv) { return kv.second == zero; });
                        },
                        [&](const Cylinder& c) {
                          return std::all_of(c.values.begin(), c.values.end(),
                                             [&](const auto& kv) { return kv.second == zero; });
                        },
                        [&](const Tabular& t) {
                          return std::all_of(t.values.begin(), t.values.end(), [&](cplx v) { return v == zero; });
                        },
                    },
                    g);
}

// ---------------------------------------------------------------- ExtFunction

ExtFunction constant(const DynamicalSystem& sys, cplx c) { return {1, constantBase(sys, c)}; }

ExtFunction embed(BaseFunction g) { return {1, std::move(g)}; }

ExtFunction alphaTilde(const DynamicalSystem& sys, const ExtFunction& f) {
  if (f.depth >= 2) return {f.depth - 1, f.base};
  return {1, alphaBase(sys, f.base)};
}

ExtFunction alphaTildeInv(const ExtFunction& f) { return {f.depth + 1, f.base}; }

ExtFunction alphaTildePower(const DynamicalSystem& sys, const ExtFunction& f, std::int64_t n) {
  if (n <= 0) return {static_cast<int>(f.depth - n), f.base};
  if (n < f.depth) return {static_cast<int>(f.depth - n), f.base};
  return {1, alphaBasePower(sys, f.base, static_cast<int>(n - f.depth + 1))};
}

ExtFunction liftTo(const DynamicalSystem& sys, const ExtFunction& f, int m) {
  if (m < f.depth) throw Error(Errc::BadInput, "cannot lower the depth of a function");
  return {m, alphaBasePower(sys, f.base, m - f.depth)};
}

ExtFunction add(const DynamicalSystem& sys, const ExtFunction& a, const ExtFunction& b) {
  const int m = std::max(a.depth, b.depth);
  return {m, add(sys, liftTo(sys, a, m).base, liftTo(sys, b, m).base)};
}

ExtFunction multiply(const DynamicalSystem& sys, const ExtFunction& a, const ExtFunction& b) {
  const int m = std::max(a.depth, b.depth);
  return {m, multiply(sys, liftTo(sys, a, m).base, liftTo(sys, b, m).base)};
}

ExtFunction negate(const ExtFunction& f) { return {f.depth, scale(f.base, -1.0)}; }
ExtFunction scale(const ExtFunction& f, cplx c) { return {f.depth, scale(f.base, c)}; }
ExtFunction conj(const ExtFunction& f) { return {f.depth, conj(f.base)}; }
bool isZero(const ExtFunction& f) { return isZero(f.base); }

// ---------------------------------------------------------------- sup norms

NormBracket supNorm(const BaseFunction& g) {
  auto exact = [](double v) { return NormBracket{v, v, "max over values", "exact"}; };
  if (const auto* c = std::get_if<Cylinder>(&g)) {
    double m = 0.0;
    for (const auto& [w, v] : c->values) m = std::max(m, std::abs(v));
    return exact(m);
  }
  if (const auto* t = std::get_if<Tabular>(&g)) {
    double m = 0.0;
    for (cplx v : t->values) m = std::max(m, std::abs(v));
    return exact(m);
  }
  const auto& p = std::get<TrigPoly>(g);
  double l1 = 0.0;
  for (const auto& [k, c] : p.coeffs) l1 += std::abs(c);
  if (!std::isfinite(l1)) throw Error(Errc::NonFinite, "non-finite trigonometric coefficients");
  const std::int64_t deg = p.degree();
  if (deg == 0) return exact(l1);

  std::size_t grid = 16384;
  while (grid < static_cast<std::size_t>(8 * deg + 64)) grid *= 2;
  std::vector<cplx> spectrum(grid, cplx(0.0, 0.0)), values;
  const auto gi = static_cast<std::int64_t>(grid);
  for (const auto& [k, c] : p.coeffs) spectrum[((k % gi) + gi) % gi] += c;
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  fft.inv(values, spectrum);
  double top = 0.0;
  for (const auto& v : values) top = std::max(top, std::abs(v));

  // |f'| <= 2 pi D S and |f''| <= (2 pi D)^2 S; every point lies within h/2
  // of the grid, and |f|^2 is flat at its maximum.
  const double h = 1.0 / static_cast<double>(grid);
  const double slope = 2.0 * std::numbers::pi * static_cast<double>(deg) * l1;
  const double first = top + slope * h / 2.0;
  const double second = std::sqrt(top * top + 0.5 * slope * slope * h * h);
  NormBracket b;
  b.lower = std::min(top, l1);
  b.upper = std::min({l1, first, second});
  b.upper = std::max(b.upper, b.lower);
  b.lowerWitness = "fft grid " + std::to_string(grid);
  b.upperMethod = b.upper == l1 ? "coefficient l1" : (b.upper == first ? "grid + first derivative" : "grid + second derivative");
  return b;
}

NormBracket supNorm(const ExtFunction& f) { return supNorm(f.base); }

// ---------------------------------------------------------------- text

std::string toString(const BaseFunction& g) {
  return std::visit(detail::Overloaded{
                        [](const TrigPoly& p) {
                          std::string out = "trig(";
                          bool first = true;
                          for (const auto& [k, c] : p.coeffs) {
                            if (!first) out += ", ";
                            first = false;
                            out += std::to_string(k) + ":" + formatComplex(c);
                          }
                          return out + ")";
                        },
                        [](const Cylinder& c) {
                          std::string out = "cyl(";
                          bool first = true;
                          for (const auto& [w, v] : c.values) {
                            if (!first) out += ", ";
                            first = false;
                            for (int a : w) out += std::to_string(a);
                            out += ":" + formatComplex(v);
                          }
                          return out + ")";
                        },
                        [](const Tabular& t) {
                          std::string out = "tab(";
                          for (std::size_t i = 0; i < t.values.size(); ++i) {
                            if (i) out += ", ";
                            out += formatComplex(t.values[i]);
                          }
                          return out + ")";
                        },
                    },
                    g);
}

std::string toString(const ExtFunction& f) {
  return (f.depth > 1 ? "@" + std::to_string(f.depth) + ":" : std::string()) + toString(f.base);
}

}  // namespace semicrossed
