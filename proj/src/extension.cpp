#include "semicrossed/extension.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <sstream>

#include "detail.hpp"
#include "semicrossed/error.hpp"

namespace semicrossed {

namespace {

constexpr std::int64_t kReturnScan = 256;

std::int64_t positiveMod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::size_t primitivePeriod(const std::vector<Point>& c) {
  const std::size_t n = c.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = c[i] == c[i - d];
    if (ok) return d;
  }
  return n;
}

/// Decidable aperiodicity of a base point.
bool exactlyAperiodic(const DynamicalSystem& sys, const Point& x) {
  if (const auto* r = std::get_if<Rational>(&x)) {
    return boost::multiprecision::gcd(r->den(), BigInt(sys.multiplier())) != 1;
  }
  if (const auto* w = std::get_if<Word>(&x)) return !w->preperiod().empty();
  return false;
}

}  // namespace

std::string toString(const Chooser& c) {
  return std::visit(detail::Overloaded{
                        [](const AlwaysMin&) { return std::string("min"); },
                        [](const SeededRandom& s) { return "random:" + std::to_string(s.seed); },
                        [](const ExplicitTail& t) {
                          std::string out = "tail:";
                          for (std::size_t i = 0; i < t.pattern.size(); ++i) {
                            if (i) out += ',';
                            out += std::to_string(t.pattern[i]);
                          }
                          return out;
                        },
                    },
                    c);
}

Chooser parseChooser(const std::string& text) {
  if (text == "min") return AlwaysMin{};
  try {
    if (text.rfind("random:", 0) == 0) return SeededRandom{std::stoull(text.substr(7))};
    if (text.rfind("tail:", 0) == 0) {
      ExplicitTail t;
      std::stringstream ss(text.substr(5));
      for (std::string item; std::getline(ss, item, ',');) {
        const int v = std::stoi(item);
        if (v < 0) throw Error(Errc::Parse, "tail indices must be >= 0");
        t.pattern.push_back(v);
      }
      if (!t.pattern.empty()) return t;
    }
  } catch (const std::logic_error&) {
  }
  throw Error(Errc::Parse, "bad chooser '" + text + "' (expected min | random:<seed> | tail:<i,...>)");
}

// ---------------------------------------------------------------- PeriodicLift

PeriodicLift::PeriodicLift(const DynamicalSystem& sys, std::vector<Point> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(Errc::InvalidPoint, "periodic lift needs at least one coordinate");
  for (const auto& c : coords_) validatePoint(sys, c);
  const std::size_t p = coords_.size();
  for (std::size_t i = 0; i < p; ++i) {
    const Point& next = coords_[(i + 1) % p];
    const Point& expect = coords_[i];
    if (!(semicrossed::apply(sys, next) == expect)) {
      throw Error(Errc::InvalidPoint, "coordinates do not form a backward orbit at position " + std::to_string(i + 2));
    }
  }
  if (primitivePeriod(coords_) != p) throw Error(Errc::InvalidPoint, "periodic lift coordinates are not primitive");
}

// ---------------------------------------------------------------- LazyOrbit

struct LazyOrbit::Cache {
  std::mutex mu;
  std::vector<Point> backward;  // b_1, b_2, ...
  std::vector<Point> forward;   // phi(b_1), phi^2(b_1), ...
};

LazyOrbit::LazyOrbit(DynamicalSystem sys, Point base, Chooser chooser)
    : sys_(std::move(sys)), chooser_(std::move(chooser)), cache_(std::make_unique<Cache>()) {
  validatePoint(sys_, base);
  if (const auto* t = std::get_if<ExplicitTail>(&chooser_); t && t->pattern.empty()) {
    throw Error(Errc::BadInput, "explicit tail pattern is empty");
  }
  cache_->backward.push_back(std::move(base));
}

LazyOrbit::~LazyOrbit() = default;

std::int64_t LazyOrbit::chooserState(std::int64_t d) const {
  return std::visit(detail::Overloaded{
                        [](const AlwaysMin&) -> std::int64_t { return 0; },
                        [&](const SeededRandom&) -> std::int64_t { return d; },
                        [&](const ExplicitTail& t) -> std::int64_t {
                          return positiveMod(d - 1, static_cast<std::int64_t>(t.pattern.size()));
                        },
                    },
                    chooser_);
}

Point LazyOrbit::at(std::int64_t i) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (i >= 1) {
    auto& b = cache_->backward;
    while (static_cast<std::int64_t>(b.size()) < i) {
      const auto d = static_cast<std::int64_t>(b.size());
      auto pre = preimages(sys_, b.back());
      const std::size_t count = pre.size();
      const std::size_t pick = std::visit(
          detail::Overloaded{
              [](const AlwaysMin&) -> std::size_t { return 0; },
              [&](const SeededRandom& s) -> std::size_t {
                return detail::mix(s.seed, static_cast<std::uint64_t>(d)) % count;
              },
              [&](const ExplicitTail& t) -> std::size_t {
                return static_cast<std::size_t>(t.pattern[chooserState(d)]) % count;
              },
          },
          chooser_);
      b.push_back(std::move(pre[pick]));
    }
    return b[i - 1];
  }
  auto& f = cache_->forward;
  const auto k = static_cast<std::size_t>(1 - i);
  while (f.size() < k) f.push_back(semicrossed::apply(sys_, f.empty() ? cache_->backward.front() : f.back()));
  return f[k - 1];
}

namespace {

/// First depth d > 1 at which (b_d, chooser state) returns to (b_1, state 1),
/// i.e. the chosen backward orbit is periodic with period d - 1.
std::optional<std::int64_t> findReturn(const LazyOrbit& orbit, std::int64_t maxDepth) {
  const Point b1 = orbit.at(1);
  if (std::holds_alternative<ProceduralWord>(b1)) return std::nullopt;
  const bool stateless = std::holds_alternative<AlwaysMin>(orbit.chooser());
  bool choiceMade = false;
  for (std::int64_t d = 2; d <= maxDepth + 1; ++d) {
    if (preimages(orbit.system(), orbit.at(d - 1)).size() > 1) choiceMade = true;
    if (!(orbit.at(d) == b1)) continue;
    if (!choiceMade) return d - 1;
    if (std::holds_alternative<SeededRandom>(orbit.chooser())) continue;
    if (stateless || orbit.chooserState(d) == orbit.chooserState(1)) return d - 1;
  }
  return std::nullopt;
}

}  // namespace

ExtPoint liftPoint(const DynamicalSystem& sys, const Point& x, const Chooser& chooser) {
  auto orbit = std::make_shared<const LazyOrbit>(sys, x, chooser);
  if (auto period = findReturn(*orbit, kReturnScan)) {
    std::vector<Point> coords;
    for (std::int64_t i = 1; i <= *period; ++i) coords.push_back(orbit->at(i));
    coords.resize(primitivePeriod(coords));
    return PeriodicLift(sys, std::move(coords));
  }
  return LazyLift(std::move(orbit), 0);
}

ExtPoint extendPeriodic(const DynamicalSystem& sys, const Point& x) {
  validatePoint(sys, x);
  const Classification c = classify(sys, x, std::int64_t{1} << 24);
  if (!c.isPeriodic()) throw Error(Errc::NotPeriodic, toString(x) + " is " + toString(c));
  const auto n = c.period;
  // x_j = phi^{n+1-j}(x): x_1 = x, then phi^{n-1}(x), ..., phi(x).
  const auto orbit = forwardOrbit(sys, x, static_cast<int>(n));
  std::vector<Point> coords{orbit[0]};
  for (std::int64_t j = n - 1; j >= 1; --j) coords.push_back(orbit[j]);
  return PeriodicLift(sys, std::move(coords));
}

// ---------------------------------------------------------------- the shift

ExtPoint tildePower(const ExtPoint& xt, std::int64_t n) {
  if (const auto* p = std::get_if<PeriodicLift>(&xt)) {
    const auto len = static_cast<std::int64_t>(p->period());
    std::vector<Point> c(p->coords().size());
    for (std::int64_t m = 0; m < len; ++m) c[m] = p->coords()[positiveMod(m - n, len)];
    return PeriodicLift(std::move(c));
  }
  const auto& l = std::get<LazyLift>(xt);
  return LazyLift(l.orbit(), l.shift() + n);
}

ExtPoint tildeApply(const ExtPoint& xt) { return tildePower(xt, 1); }
ExtPoint tildeInverse(const ExtPoint& xt) { return tildePower(xt, -1); }

Point coordinate(const ExtPoint& xt, std::int64_t m) {
  if (const auto* p = std::get_if<PeriodicLift>(&xt)) {
    return p->coords()[positiveMod(m - 1, static_cast<std::int64_t>(p->period()))];
  }
  const auto& l = std::get<LazyLift>(xt);
  return l.orbit()->at(m - l.shift());
}

Point project(const ExtPoint& xt) { return coordinate(xt, 1); }

bool sameExtPoint(const DynamicalSystem& sys, const ExtPoint& a, const ExtPoint& b, std::size_t depth) {
  for (std::size_t m = 1; m <= depth; ++m) {
    const auto i = static_cast<std::int64_t>(m);
    if (!samePoint(sys, coordinate(a, i), coordinate(b, i))) return false;
  }
  return true;
}

Classification classifyExt(const DynamicalSystem& sys, const ExtPoint& xt, std::int64_t maxDepth) {
  if (maxDepth < 1) throw Error(Errc::BadInput, "maxDepth must be >= 1");
  if (const auto* p = std::get_if<PeriodicLift>(&xt)) return Classification::periodic(static_cast<std::int64_t>(p->period()));
  // A periodic point of X~ has every coordinate periodic, so one exactly
  // aperiodic coordinate settles the question.
  for (std::int64_t m = 1; m <= maxDepth; ++m) {
    if (exactlyAperiodic(sys, coordinate(xt, m))) return Classification::aperiodic();
  }
  const auto& l = std::get<LazyLift>(xt);
  if (auto period = findReturn(*l.orbit(), maxDepth)) {
    std::vector<Point> coords;
    for (std::int64_t i = 1; i <= *period; ++i) coords.push_back(l.orbit()->at(i));
    return Classification::periodic(static_cast<std::int64_t>(primitivePeriod(coords)));
  }
  return Classification::unresolved(maxDepth);
}

std::string toString(const ExtPoint& xt, std::size_t shown) {
  std::string out;
  if (const auto* p = std::get_if<PeriodicLift>(&xt)) {
    out = "periodic[";
    for (std::size_t i = 0; i < p->period(); ++i) {
      if (i) out += ',';
      out += toString(p->coords()[i]);
    }
    return out + "]";
  }
  out = "lazy[";
  for (std::size_t i = 1; i <= shown; ++i) {
    if (i > 1) out += ',';
    out += toString(coordinate(xt, static_cast<std::int64_t>(i)));
  }
  return out + ",...]";
}

// ---------------------------------------------------------------- transfer

const char* propertyName(SftProperty p) {
  switch (p) {
    case SftProperty::Transitive: return "transitive";
    case SftProperty::DensePeriodic: return "densePeriodic";
    case SftProperty::Minimal: return "minimal";
    case SftProperty::DenseRecurrent: return "denseRecurrent";
  }
  return "?";
}

namespace {

using BoolMatrix = std::vector<std::vector<bool>>;

/// reach[a][b]: a path of length >= 1 from a to b (Warshall).
BoolMatrix reachability(const TransitionMatrix& t) {
  const std::size_t s = t.size();
  BoolMatrix r(s, std::vector<bool>(s));
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < s; ++b) r[a][b] = t[a][b] != 0;
  }
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t a = 0; a < s; ++a) {
      if (!r[a][k]) continue;
      for (std::size_t b = 0; b < s; ++b) {
        if (r[k][b]) r[a][b] = true;
      }
    }
  }
  return r;
}

/// Number of admissible two-sided words of length n.
std::uint64_t wordCount(const TransitionMatrix& t, std::size_t n) {
  const std::size_t s = t.size();
  std::vector<std::uint64_t> ends(s, 1);
  for (std::size_t len = 1; len < n; ++len) {
    std::vector<std::uint64_t> next(s, 0);
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = 0; b < s; ++b) {
        if (t[a][b]) next[b] += ends[a];
      }
    }
    ends = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto v : ends) total += v;
  return total;
}

/// The bi-infinite shift over t: word ab occurs in a periodic orbit iff a
/// closed walk passes through the edge, i.e. (A^j)[b][a] > 0 for some
/// 0 <= j < s.
bool edgesOnClosedWalks(const TransitionMatrix& t) {
  const std::size_t s = t.size();
  BoolMatrix power(s, std::vector<bool>(s)), acc(s, std::vector<bool>(s));
  for (std::size_t i = 0; i < s; ++i) power[i][i] = acc[i][i] = true;
  for (std::size_t j = 1; j < s; ++j) {
    BoolMatrix next(s, std::vector<bool>(s));
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t k = 0; k < s; ++k) {
        if (!power[a][k]) continue;
        for (std::size_t b = 0; b < s; ++b) {
          if (t[k][b]) next[a][b] = true;
        }
      }
    }
    power = std::move(next);
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = 0; b < s; ++b) acc[a][b] = acc[a][b] || power[a][b];
    }
  }
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < s; ++b) {
      if (t[a][b] && !acc[b][a]) return false;
    }
  }
  return true;
}

bool extensionHas(const TransitionMatrix& t, SftProperty property) {
  const std::size_t s = t.size();
  const BoolMatrix reach = reachability(t);
  bool transitive = true;
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < s; ++b) transitive = transitive && reach[a][b];
  }
  switch (property) {
    case SftProperty::Transitive: return transitive;
    case SftProperty::DensePeriodic: {
      for (std::size_t a = 0; a < s; ++a) {
        for (std::size_t b = 0; b < s; ++b) {
          if (t[a][b] && a != b && !reach[b][a]) return false;
        }
      }
      return true;
    }
    case SftProperty::DenseRecurrent: return edgesOnClosedWalks(t);
    case SftProperty::Minimal: {
      // A minimal two-sided SFT is a single periodic orbit of length s,
      // which has exactly s admissible words of every length.
      if (!transitive) return false;
      for (std::size_t n = 1; n <= 2 * s; ++n) {
        if (wordCount(t, n) != s) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

TransferResult verifyTransfer(const DynamicalSystem& sys, SftProperty property) {
  if (sys.kind() != DynamicalSystem::Kind::Sft) throw Error(Errc::TypeMismatch, "verifyTransfer needs an SFT");
  const SftReport base = sftProperties(sys.transition());
  TransferResult r;
  switch (property) {
    case SftProperty::Transitive: r.base = base.transitive; break;
    case SftProperty::DensePeriodic: r.base = base.densePeriodic; break;
    case SftProperty::Minimal: r.base = base.minimal; break;
    case SftProperty::DenseRecurrent: r.base = base.denseRecurrent; break;
  }
  r.extension = extensionHas(sys.transition(), property);
  return r;
}

}  // namespace semicrossed
