#pragma once

// Computable base systems (X, phi): expanding circle maps on exact
// rationals, one-sided subshifts of finite type, and finite permutations.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace semicrossed {

using BigInt = boost::multiprecision::cpp_int;
using TransitionMatrix = std::vector<std::vector<int>>;

/// Reduced fraction p/q with 0 <= p/q < 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  /// Reduces; throws InvalidPoint unless 0 <= num/den < 1.
  static Rational make(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  double toDouble() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

 private:
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}
  BigInt num_;
  BigInt den_;
};

/// Eventually periodic one-sided sequence preperiod . cycle^inf, stored
/// canonically: the cycle is primitive and the preperiod is as short as
/// possible, so structural equality is sequence equality.
class Word {
 public:
  static Word make(std::vector<int> preperiod, std::vector<int> cycle);

  const std::vector<int>& preperiod() const { return pre_; }
  const std::vector<int>& cycle() const { return cyc_; }
  int symbol(std::size_t i) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Word(std::vector<int> pre, std::vector<int> cyc) : pre_(std::move(pre)), cyc_(std::move(cyc)) {}
  std::vector<int> pre_;
  std::vector<int> cyc_;
};

/// Deterministic symbol stream: i.i.d. digits for circle systems, a seeded
/// walk on the transition graph for SFTs. Thread-safe memoization.
class SymbolSource;

/// prefix followed by source symbols from `offset` on. Used for points
/// with (almost surely) infinite orbits.
class ProceduralWord {
 public:
  ProceduralWord(std::vector<int> prefix, std::shared_ptr<const SymbolSource> source,
                 std::uint64_t offset);

  int symbol(std::size_t i) const;
  const std::vector<int>& prefix() const { return prefix_; }
  std::uint64_t offset() const { return offset_; }
  std::uint64_t seed() const;
  const std::shared_ptr<const SymbolSource>& source() const { return source_; }

  friend bool operator==(const ProceduralWord& a, const ProceduralWord& b);

 private:
  std::vector<int> prefix_;
  std::shared_ptr<const SymbolSource> source_;
  std::uint64_t offset_;
};

struct FiniteState {
  int state = 0;
  friend bool operator==(const FiniteState&, const FiniteState&) = default;
};

using Point = std::variant<Rational, Word, ProceduralWord, FiniteState>;

/// Total order used to sort preimage sets and deduplicate samples: numeric
/// for rationals, lexicographic on the symbol sequence for words.
bool pointLess(const Point& a, const Point& b);

class DynamicalSystem {
 public:
  enum class Kind { CircleTimesK, Sft, Permutation };

  /// x -> kx mod 1, k >= 2.
  static DynamicalSystem circle(int k);
  /// One-sided shift; every row and column needs a 1 (InvalidMatrix otherwise).
  static DynamicalSystem sft(TransitionMatrix transition);
  static DynamicalSystem permutation(std::vector<int> perm);

  Kind kind() const { return kind_; }
  int multiplier() const { return k_; }
  const TransitionMatrix& transition() const { return transition_; }
  const std::vector<int>& perm() const { return perm_; }
  /// Symbols (SFT), digits (circle) or states (permutation).
  int alphabetSize() const;
  bool isHomeomorphism() const { return kind_ == Kind::Permutation; }
  bool allowed(int from, int to) const { return transition_[from][to] != 0; }

  std::string describe() const;

 private:
  Kind kind_ = Kind::CircleTimesK;
  int k_ = 2;
  TransitionMatrix transition_;
  std::vector<int> perm_;
};

/// Throws InvalidMatrix naming the offending row/column.
void validateTransition(const TransitionMatrix& transition);

struct Classification {
  enum class Kind { Periodic, EventuallyPeriodic, Aperiodic, Unresolved };
  Kind kind = Kind::Unresolved;
  std::int64_t period = 0;
  std::int64_t preperiod = 0;
  std::int64_t stepsExamined = 0;

  static Classification periodic(std::int64_t p) { return {Kind::Periodic, p, 0, 0}; }
  static Classification eventuallyPeriodic(std::int64_t q, std::int64_t p) {
    return {Kind::EventuallyPeriodic, p, q, 0};
  }
  static Classification aperiodic() { return {Kind::Aperiodic, 0, 0, 0}; }
  static Classification unresolved(std::int64_t steps) { return {Kind::Unresolved, 0, 0, steps}; }

  bool isPeriodic() const { return kind == Kind::Periodic; }
  friend bool operator==(const Classification&, const Classification&) = default;
};

std::string toString(const Classification& c);

struct SftReport {
  bool transitive = false;
  bool densePeriodic = false;
  bool minimal = false;
  bool denseRecurrent = false;
  friend bool operator==(const SftReport&, const SftReport&) = default;
};

/// Throws TypeMismatch / InvalidPoint when x is not a point of sys.
void validatePoint(const DynamicalSystem& sys, const Point& x);

Point apply(const DynamicalSystem& sys, const Point& x);
/// phi^{-1}{x}, sorted by pointLess; never empty.
std::vector<Point> preimages(const DynamicalSystem& sys, const Point& x);
Classification classify(const DynamicalSystem& sys, const Point& x, std::int64_t maxSteps);
/// [x, phi(x), ..., phi^{n-1}(x)].
std::vector<Point> forwardOrbit(const DynamicalSystem& sys, const Point& x, int n);
SftReport sftProperties(const TransitionMatrix& transition);

/// Exact equality where decidable; procedural words compare by their first
/// `depth` symbols.
bool samePoint(const DynamicalSystem& sys, const Point& a, const Point& b,
               std::size_t depth = 256);

/// Circle coordinate in [0,1) of a Rational or procedural digit expansion.
double circleValue(const DynamicalSystem& sys, const Point& x);
/// Symbol i of a symbolic point (Word / ProceduralWord).
int symbolAt(const Point& x, std::size_t i);

/// Seeded procedural point: random base-k digits (circle) or a random walk
/// on the transition graph (SFT).
Point proceduralPoint(const DynamicalSystem& sys, std::uint64_t seed);

std::string toString(const Point& x);
/// Grammar: circle `p/q` | `0` | `proc(seed[,offset[,prefix]])`;
/// SFT `pre(cycle)` | `proc(...)`; permutation: a state index.
Point parsePoint(const DynamicalSystem& sys, const std::string& text);

}  // namespace semicrossed
