#include "semicrossed/dynsys.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>

#include "detail.hpp"
#include "semicrossed/error.hpp"

namespace semicrossed {

namespace {

using detail::Overloaded;
using detail::splitmix64;

[[noreturn]] void mismatch(const DynamicalSystem& sys, const Point& x) {
  throw Error(Errc::TypeMismatch, "point " + toString(x) + " is not a point of " + sys.describe());
}

char symbolChar(int s) { return s < 10 ? char('0' + s) : char('a' + (s - 10)); }

int charSymbol(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
  throw Error(Errc::Parse, std::string("bad symbol character '") + c + "'");
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational Rational::make(BigInt num, BigInt den) {
  if (den <= 0 || num < 0 || num >= den) {
    throw Error(Errc::InvalidPoint, "rational " + num.str() + "/" + den.str() + " is not in [0,1)");
  }
  BigInt g = boost::multiprecision::gcd(num, den);
  if (num == 0) g = den;
  return Rational(num / g, den / g);
}

double Rational::toDouble() const {
  boost::multiprecision::cpp_rational r(num_, den_);
  return r.convert_to<double>();
}

// ---------------------------------------------------------------- Word

Word Word::make(std::vector<int> pre, std::vector<int> cyc) {
  if (cyc.empty()) throw Error(Errc::InvalidPoint, "word cycle must be nonempty");
  const std::size_t n = cyc.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = cyc[i] == cyc[i - d];
    if (periodic) {
      cyc.resize(d);
      break;
    }
  }
  while (!pre.empty() && pre.back() == cyc.back()) {
    pre.pop_back();
    std::rotate(cyc.rbegin(), cyc.rbegin() + 1, cyc.rend());
  }
  return Word(std::move(pre), std::move(cyc));
}

int Word::symbol(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return cyc_[(i - pre_.size()) % cyc_.size()];
}

// ---------------------------------------------------------------- SymbolSource

class SymbolSource {
 public:
  SymbolSource(std::uint64_t seed, int alphabet, std::vector<std::vector<int>> successors)
      : seed_(seed), alphabet_(alphabet), successors_(std::move(successors)) {}

  std::uint64_t seed() const { return seed_; }
  int alphabet() const { return alphabet_; }
  bool isWalk() const { return !successors_.empty(); }

  int symbol(std::uint64_t i) const {
    if (!isWalk()) return static_cast<int>(draw(i) % static_cast<std::uint64_t>(alphabet_));
    std::lock_guard<std::mutex> lock(mu_);
    if (walk_.empty()) walk_.push_back(static_cast<int>(draw(0) % static_cast<std::uint64_t>(alphabet_)));
    while (walk_.size() <= i) {
      const auto& next = successors_[walk_.back()];
      walk_.push_back(next[draw(walk_.size()) % next.size()]);
    }
    return walk_[i];
  }

  bool sameStream(const SymbolSource& o) const {
    return seed_ == o.seed_ && alphabet_ == o.alphabet_ && successors_ == o.successors_;
  }

 private:
  std::uint64_t draw(std::uint64_t i) const { return detail::mix(seed_, i); }

  std::uint64_t seed_;
  int alphabet_;
  std::vector<std::vector<int>> successors_;
  mutable std::mutex mu_;
  mutable std::vector<int> walk_;
};

ProceduralWord::ProceduralWord(std::vector<int> prefix, std::shared_ptr<const SymbolSource> source,
                               std::uint64_t offset)
    : prefix_(std::move(prefix)), source_(std::move(source)), offset_(offset) {
  while (!prefix_.empty() && offset_ > 0 && prefix_.back() == source_->symbol(offset_ - 1)) {
    prefix_.pop_back();
    --offset_;
  }
}

int ProceduralWord::symbol(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return source_->symbol(offset_ + (i - prefix_.size()));
}

std::uint64_t ProceduralWord::seed() const { return source_->seed(); }

bool operator==(const ProceduralWord& a, const ProceduralWord& b) {
  return a.prefix_ == b.prefix_ && a.offset_ == b.offset_ && a.source_->sameStream(*b.source_);
}

// ---------------------------------------------------------------- ordering

namespace {

int compareSymbols(const Point& a, const Point& b, std::size_t depth) {
  for (std::size_t i = 0; i < depth; ++i) {
    const int sa = symbolAt(a, i);
    const int sb = symbolAt(b, i);
    if (sa != sb) return sa < sb ? -1 : 1;
  }
  return 0;
}

std::size_t decisiveDepth(const Word& a, const Word& b) {
  return std::max(a.preperiod().size(), b.preperiod().size()) +
         std::lcm(a.cycle().size(), b.cycle().size());
}

}  // namespace

bool pointLess(const Point& a, const Point& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  return std::visit(
      Overloaded{
          [&](const Rational& r) { return r < std::get<Rational>(b); },
          [&](const Word& w) {
            const Word& v = std::get<Word>(b);
            return compareSymbols(a, b, decisiveDepth(w, v)) < 0;
          },
          [&](const ProceduralWord& p) {
            const int c = compareSymbols(a, b, 256);
            if (c != 0) return c < 0;
            const ProceduralWord& q = std::get<ProceduralWord>(b);
            if (p.seed() != q.seed()) return p.seed() < q.seed();
            if (p.offset() != q.offset()) return p.offset() < q.offset();
            return p.prefix() < q.prefix();
          },
          [&](const FiniteState& s) { return s.state < std::get<FiniteState>(b).state; },
      },
      a);
}

// ---------------------------------------------------------------- systems

void validateTransition(const TransitionMatrix& t) {
  const std::size_t s = t.size();
  if (s == 0) throw Error(Errc::InvalidMatrix, "transition matrix is empty");
  for (std::size_t i = 0; i < s; ++i) {
    if (t[i].size() != s) {
      throw Error(Errc::InvalidMatrix, "transition matrix row " + std::to_string(i) + " has wrong length");
    }
    for (int v : t[i]) {
      if (v != 0 && v != 1) throw Error(Errc::InvalidMatrix, "transition entries must be 0 or 1");
    }
  }
  for (std::size_t i = 0; i < s; ++i) {
    if (std::none_of(t[i].begin(), t[i].end(), [](int v) { return v != 0; })) {
      throw Error(Errc::InvalidMatrix, "row " + std::to_string(i) + " of the transition matrix is zero");
    }
  }
  for (std::size_t j = 0; j < s; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < s; ++i) any = any || t[i][j] != 0;
    if (!any) throw Error(Errc::InvalidMatrix, "column " + std::to_string(j) + " of the transition matrix is zero");
  }
}

DynamicalSystem DynamicalSystem::circle(int k) {
  if (k < 2) throw Error(Errc::InvalidSystem, "circle multiplier must be >= 2, got " + std::to_string(k));
  DynamicalSystem sys;
  sys.kind_ = Kind::CircleTimesK;
  sys.k_ = k;
  return sys;
}

DynamicalSystem DynamicalSystem::sft(TransitionMatrix transition) {
  validateTransition(transition);
  if (transition.size() > 36) throw Error(Errc::InvalidSystem, "alphabets beyond 36 symbols are not supported");
  DynamicalSystem sys;
  sys.kind_ = Kind::Sft;
  sys.transition_ = std::move(transition);
  return sys;
}

DynamicalSystem DynamicalSystem::permutation(std::vector<int> perm) {
  std::vector<bool> seen(perm.size(), false);
  for (int v : perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= perm.size() || seen[v]) {
      throw Error(Errc::InvalidSystem, "permutation is not a bijection");
    }
    seen[v] = true;
  }
  if (perm.empty()) throw Error(Errc::InvalidSystem, "permutation is empty");
  DynamicalSystem sys;
  sys.kind_ = Kind::Permutation;
  sys.perm_ = std::move(perm);
  return sys;
}

int DynamicalSystem::alphabetSize() const {
  switch (kind_) {
    case Kind::CircleTimesK: return k_;
    case Kind::Sft: return static_cast<int>(transition_.size());
    case Kind::Permutation: return static_cast<int>(perm_.size());
  }
  return 0;
}

std::string DynamicalSystem::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::CircleTimesK:
      os << "circle x" << k_;
      break;
    case Kind::Sft:
      os << "sft ";
      for (std::size_t i = 0; i < transition_.size(); ++i) {
        if (i) os << ';';
        for (int v : transition_[i]) os << v;
      }
      break;
    case Kind::Permutation:
      os << "perm";
      for (int v : perm_) os << ' ' << v;
      break;
  }
  return os.str();
}

std::string toString(const Classification& c) {
  switch (c.kind) {
    case Classification::Kind::Periodic: return "periodic " + std::to_string(c.period);
    case Classification::Kind::EventuallyPeriodic:
      return "eventually-periodic " + std::to_string(c.preperiod) + " " + std::to_string(c.period);
    case Classification::Kind::Aperiodic: return "aperiodic";
    case Classification::Kind::Unresolved: return "unresolved " + std::to_string(c.stepsExamined);
  }
  return "?";
}

// ---------------------------------------------------------------- point checks

void validatePoint(const DynamicalSystem& sys, const Point& x) {
  using K = DynamicalSystem::Kind;
  const int s = sys.alphabetSize();
  auto checkSymbols = [&](const std::vector<int>& v) {
    for (int a : v) {
      if (a < 0 || a >= s) throw Error(Errc::InvalidPoint, "symbol out of range in " + toString(x));
    }
  };
  switch (sys.kind()) {
    case K::CircleTimesK:
      if (std::holds_alternative<Rational>(x)) return;
      if (const auto* p = std::get_if<ProceduralWord>(&x)) {
        if (p->source()->isWalk() || p->source()->alphabet() != s) mismatch(sys, x);
        checkSymbols(p->prefix());
        return;
      }
      mismatch(sys, x);
    case K::Sft:
      if (const auto* w = std::get_if<Word>(&x)) {
        checkSymbols(w->preperiod());
        checkSymbols(w->cycle());
        const std::size_t len = w->preperiod().size() + w->cycle().size();
        for (std::size_t i = 0; i < len; ++i) {
          if (!sys.allowed(w->symbol(i), w->symbol(i + 1))) {
            throw Error(Errc::InvalidPoint, "word " + toString(x) + " is not admissible");
          }
        }
        return;
      }
      if (const auto* p = std::get_if<ProceduralWord>(&x)) {
        if (!p->source()->isWalk() || p->source()->alphabet() != s) mismatch(sys, x);
        checkSymbols(p->prefix());
        for (std::size_t i = 0; i < p->prefix().size(); ++i) {
          if (!sys.allowed(p->symbol(i), p->symbol(i + 1))) {
            throw Error(Errc::InvalidPoint, "word " + toString(x) + " is not admissible");
          }
        }
        return;
      }
      mismatch(sys, x);
    case K::Permutation:
      if (const auto* f = std::get_if<FiniteState>(&x)) {
        if (f->state < 0 || f->state >= s) throw Error(Errc::InvalidPoint, "state out of range");
        return;
      }
      mismatch(sys, x);
  }
}

// ---------------------------------------------------------------- dynamics

namespace {

ProceduralWord shifted(const ProceduralWord& p) {
  if (!p.prefix().empty()) {
    return ProceduralWord(std::vector<int>(p.prefix().begin() + 1, p.prefix().end()), p.source(), p.offset());
  }
  return ProceduralWord({}, p.source(), p.offset() + 1);
}

ProceduralWord prepended(const ProceduralWord& p, int a) {
  std::vector<int> prefix;
  prefix.reserve(p.prefix().size() + 1);
  prefix.push_back(a);
  prefix.insert(prefix.end(), p.prefix().begin(), p.prefix().end());
  return ProceduralWord(std::move(prefix), p.source(), p.offset());
}

}  // namespace

Point apply(const DynamicalSystem& sys, const Point& x) {
  using K = DynamicalSystem::Kind;
  switch (sys.kind()) {
    case K::CircleTimesK:
      if (const auto* r = std::get_if<Rational>(&x)) {
        BigInt n = (r->num() * sys.multiplier()) % r->den();
        return Rational::make(std::move(n), r->den());
      }
      if (const auto* p = std::get_if<ProceduralWord>(&x)) return shifted(*p);
      break;
    case K::Sft:
      if (const auto* w = std::get_if<Word>(&x)) {
        if (!w->preperiod().empty()) {
          return Word::make(std::vector<int>(w->preperiod().begin() + 1, w->preperiod().end()), w->cycle());
        }
        std::vector<int> c = w->cycle();
        std::rotate(c.begin(), c.begin() + 1, c.end());
        return Word::make({}, std::move(c));
      }
      if (const auto* p = std::get_if<ProceduralWord>(&x)) return shifted(*p);
      break;
    case K::Permutation:
      if (const auto* f = std::get_if<FiniteState>(&x)) return FiniteState{sys.perm().at(f->state)};
      break;
  }
  mismatch(sys, x);
}

std::vector<Point> preimages(const DynamicalSystem& sys, const Point& x) {
  using K = DynamicalSystem::Kind;
  std::vector<Point> out;
  switch (sys.kind()) {
    case K::CircleTimesK:
      if (const auto* r = std::get_if<Rational>(&x)) {
        const int k = sys.multiplier();
        for (int j = 0; j < k; ++j) out.push_back(Rational::make(r->num() + r->den() * j, r->den() * k));
      } else if (const auto* p = std::get_if<ProceduralWord>(&x)) {
        for (int j = 0; j < sys.multiplier(); ++j) out.push_back(prepended(*p, j));
      } else {
        mismatch(sys, x);
      }
      break;
    case K::Sft: {
      if (!std::holds_alternative<Word>(x) && !std::holds_alternative<ProceduralWord>(x)) mismatch(sys, x);
      const int first = symbolAt(x, 0);
      for (int a = 0; a < sys.alphabetSize(); ++a) {
        if (!sys.allowed(a, first)) continue;
        if (const auto* w = std::get_if<Word>(&x)) {
          std::vector<int> pre{a};
          pre.insert(pre.end(), w->preperiod().begin(), w->preperiod().end());
          out.push_back(Word::make(std::move(pre), w->cycle()));
        } else {
          out.push_back(prepended(std::get<ProceduralWord>(x), a));
        }
      }
      break;
    }
    case K::Permutation: {
      const auto* f = std::get_if<FiniteState>(&x);
      if (!f) mismatch(sys, x);
      const auto& perm = sys.perm();
      const auto it = std::find(perm.begin(), perm.end(), f->state);
      out.push_back(FiniteState{static_cast<int>(it - perm.begin())});
      break;
    }
  }
  std::sort(out.begin(), out.end(), pointLess);
  return out;
}

Classification classify(const DynamicalSystem& sys, const Point& x, std::int64_t maxSteps) {
  if (maxSteps < 1) throw Error(Errc::BadInput, "maxSteps must be >= 1");
  using K = DynamicalSystem::Kind;
  switch (sys.kind()) {
    case K::CircleTimesK: {
      if (std::holds_alternative<ProceduralWord>(x)) return Classification::unresolved(maxSteps);
      const auto* r = std::get_if<Rational>(&x);
      if (!r) mismatch(sys, x);
      // The reduced denominator of phi^t(x) is q_t = q_{t-1}/gcd(q_{t-1}, k);
      // a reduced a/b is periodic exactly when gcd(b, k) = 1.
      const BigInt k = sys.multiplier();
      BigInt q = r->den();
      std::int64_t pre = 0;
      for (BigInt g = boost::multiprecision::gcd(q, k); g != 1; g = boost::multiprecision::gcd(q, k)) {
        q /= g;
        ++pre;
      }
      // Period = multiplicative order of k modulo q.
      std::int64_t period = 1;
      if (q > 1) {
        BigInt power = k % q;
        while (power != 1) {
          if (period >= maxSteps) return Classification::unresolved(maxSteps);
          power = (power * k) % q;
          ++period;
        }
      }
      return pre == 0 ? Classification::periodic(period) : Classification::eventuallyPeriodic(pre, period);
    }
    case K::Sft: {
      if (std::holds_alternative<ProceduralWord>(x)) return Classification::unresolved(maxSteps);
      const auto* w = std::get_if<Word>(&x);
      if (!w) mismatch(sys, x);
      const auto p = static_cast<std::int64_t>(w->cycle().size());
      const auto q = static_cast<std::int64_t>(w->preperiod().size());
      return q == 0 ? Classification::periodic(p) : Classification::eventuallyPeriodic(q, p);
    }
    case K::Permutation: {
      const auto* f = std::get_if<FiniteState>(&x);
      if (!f) mismatch(sys, x);
      std::int64_t p = 1;
      for (int s = sys.perm()[f->state]; s != f->state; s = sys.perm()[s]) ++p;
      return Classification::periodic(p);
    }
  }
  return Classification::unresolved(maxSteps);
}

std::vector<Point> forwardOrbit(const DynamicalSystem& sys, const Point& x, int n) {
  if (n < 1) throw Error(Errc::BadInput, "orbit length must be >= 1");
  std::vector<Point> orbit;
  orbit.reserve(n);
  orbit.push_back(x);
  for (int i = 1; i < n; ++i) orbit.push_back(semicrossed::apply(sys, orbit.back()));
  return orbit;
}

// ---------------------------------------------------------------- SFT graph properties

SftReport sftProperties(const TransitionMatrix& t) {
  validateTransition(t);
  const int s = static_cast<int>(t.size());
  // Tarjan's strongly connected components.
  std::vector<int> index(s, -1), low(s, 0), comp(s, -1), stack;
  std::vector<bool> onStack(s, false);
  int counter = 0, components = 0;
  auto strong = [&](auto&& self, int v) -> void {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    onStack[v] = true;
    for (int w = 0; w < s; ++w) {
      if (!t[v][w]) continue;
      if (index[w] < 0) {
        self(self, w);
        low[v] = std::min(low[v], low[w]);
      } else if (onStack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        onStack[w] = false;
        comp[w] = components;
      } while (w != v);
      ++components;
    }
  };
  for (int v = 0; v < s; ++v) {
    if (index[v] < 0) strong(strong, v);
  }

  SftReport r;
  r.transitive = components == 1;
  // An admissible word w_0..w_l returns to its first symbol iff w_l reaches
  // w_0, i.e. every edge stays inside one component.
  r.densePeriodic = true;
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) {
      if (t[a][b] && comp[a] != comp[b]) r.densePeriodic = false;
    }
  }
  r.denseRecurrent = r.densePeriodic;
  bool singleSuccessor = true;
  for (int a = 0; a < s; ++a) singleSuccessor = singleSuccessor && std::count(t[a].begin(), t[a].end(), 1) == 1;
  r.minimal = r.transitive && singleSuccessor;
  return r;
}

// ---------------------------------------------------------------- helpers

bool samePoint(const DynamicalSystem& sys, const Point& a, const Point& b, std::size_t depth) {
  if (a.index() == b.index() && !std::holds_alternative<ProceduralWord>(a)) return a == b;
  if (sys.kind() == DynamicalSystem::Kind::CircleTimesK) {
    // Compare base-k digit expansions.
    auto digits = [&](const Point& x) {
      std::vector<int> d(depth);
      if (const auto* r = std::get_if<Rational>(&x)) {
        BigInt num = r->num();
        for (std::size_t i = 0; i < depth; ++i) {
          num *= sys.multiplier();
          d[i] = static_cast<int>(num / r->den());
          num %= r->den();
        }
      } else {
        for (std::size_t i = 0; i < depth; ++i) d[i] = symbolAt(x, i);
      }
      return d;
    };
    return digits(a) == digits(b);
  }
  if (sys.kind() == DynamicalSystem::Kind::Sft) return compareSymbols(a, b, depth) == 0;
  return a == b;
}

double circleValue(const DynamicalSystem& sys, const Point& x) {
  if (const auto* r = std::get_if<Rational>(&x)) return r->toDouble();
  if (const auto* p = std::get_if<ProceduralWord>(&x)) {
    long double v = 0.0L;
    long double scale = 1.0L;
    const long double k = sys.multiplier();
    for (std::size_t i = 0; i < 72; ++i) {
      scale /= k;
      v += scale * p->symbol(i);
      if (scale < 1e-22L) break;
    }
    double out = static_cast<double>(v);
    return out >= 1.0 ? std::nextafter(1.0, 0.0) : out;
  }
  mismatch(sys, x);
}

int symbolAt(const Point& x, std::size_t i) {
  if (const auto* w = std::get_if<Word>(&x)) return w->symbol(i);
  if (const auto* p = std::get_if<ProceduralWord>(&x)) return p->symbol(i);
  throw Error(Errc::TypeMismatch, "point " + toString(x) + " has no symbol expansion");
}

Point proceduralPoint(const DynamicalSystem& sys, std::uint64_t seed) {
  using K = DynamicalSystem::Kind;
  if (sys.kind() == K::CircleTimesK) {
    return ProceduralWord({}, std::make_shared<SymbolSource>(seed, sys.multiplier(), std::vector<std::vector<int>>{}), 0);
  }
  if (sys.kind() == K::Sft) {
    const int s = sys.alphabetSize();
    std::vector<std::vector<int>> succ(s);
    for (int a = 0; a < s; ++a) {
      for (int b = 0; b < s; ++b) {
        if (sys.allowed(a, b)) succ[a].push_back(b);
      }
    }
    return ProceduralWord({}, std::make_shared<SymbolSource>(seed, s, std::move(succ)), 0);
  }
  throw Error(Errc::TypeMismatch, "procedural points need a circle or SFT system");
}

// ---------------------------------------------------------------- text form

std::string toString(const Point& x) {
  return std::visit(
      Overloaded{
          [](const Rational& r) { return r.num() == 0 ? std::string("0") : r.num().str() + "/" + r.den().str(); },
          [](const Word& w) {
            std::string s;
            for (int a : w.preperiod()) s += symbolChar(a);
            s += '(';
            for (int a : w.cycle()) s += symbolChar(a);
            return s + ')';
          },
          [](const ProceduralWord& p) {
            std::string s = "proc(" + std::to_string(p.seed());
            if (p.offset() != 0 || !p.prefix().empty()) s += "," + std::to_string(p.offset());
            if (!p.prefix().empty()) {
              s += ',';
              for (int a : p.prefix()) s += symbolChar(a);
            }
            return s + ')';
          },
          [](const FiniteState& f) { return std::to_string(f.state); },
      },
      x);
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<int> parseSymbols(const std::string& s) {
  std::vector<int> out;
  for (char c : s) out.push_back(charSymbol(c));
  return out;
}

std::uint64_t parseUnsigned(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(Errc::Parse, "expected an unsigned integer, got '" + s + "'");
  }
  return std::stoull(s);
}

}  // namespace

Point parsePoint(const DynamicalSystem& sys, const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw Error(Errc::Parse, "empty point");
  Point out;
  if (text.rfind("proc(", 0) == 0 && text.back() == ')') {
    std::vector<std::string> parts;
    std::stringstream ss(text.substr(5, text.size() - 6));
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(trim(item));
    if (parts.empty() || parts.size() > 3) throw Error(Errc::Parse, "bad procedural point '" + text + "'");
    const auto base = std::get<ProceduralWord>(proceduralPoint(sys, parseUnsigned(parts[0])));
    const std::uint64_t offset = parts.size() > 1 ? parseUnsigned(parts[1]) : 0;
    std::vector<int> prefix = parts.size() > 2 ? parseSymbols(parts[2]) : std::vector<int>{};
    out = ProceduralWord(std::move(prefix), base.source(), offset);
  } else {
    switch (sys.kind()) {
      case DynamicalSystem::Kind::CircleTimesK: {
        const auto slash = text.find('/');
        try {
          if (slash == std::string::npos) {
            out = Rational::make(BigInt(text), 1);
          } else {
            out = Rational::make(BigInt(trim(text.substr(0, slash))), BigInt(trim(text.substr(slash + 1))));
          }
        } catch (const std::runtime_error& e) {
          if (dynamic_cast<const Error*>(&e)) throw;
          throw Error(Errc::Parse, "bad rational '" + text + "'");
        }
        break;
      }
      case DynamicalSystem::Kind::Sft: {
        const auto open = text.find('(');
        if (open == std::string::npos || text.back() != ')') {
          throw Error(Errc::Parse, "word must look like pre(cycle), got '" + text + "'");
        }
        out = Word::make(parseSymbols(text.substr(0, open)), parseSymbols(text.substr(open + 1, text.size() - open - 2)));
        break;
      }
      case DynamicalSystem::Kind::Permutation:
        out = FiniteState{static_cast<int>(parseUnsigned(text))};
        break;
    }
  }
  validatePoint(sys, out);
  return out;
}

}  // namespace semicrossed
