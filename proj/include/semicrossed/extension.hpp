#pragma once

// The canonical homeomorphism extension: points of X~ are backward orbits
// (x_1, x_2, ...) with phi(x_{n+1}) = x_n, and phi~ prepends phi(x_1).

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "semicrossed/dynsys.hpp"

namespace semicrossed {

/// Index into the sorted preimage list.
struct AlwaysMin {};
struct SeededRandom {
  std::uint64_t seed = 0;
};
/// Cyclic pattern of preimage indices (taken modulo the preimage count).
struct ExplicitTail {
  std::vector<int> pattern;
};
using Chooser = std::variant<AlwaysMin, SeededRandom, ExplicitTail>;

std::string toString(const Chooser& c);
/// `min` | `random:<seed>` | `tail:<i,j,...>`.
Chooser parseChooser(const std::string& text);

class LazyOrbit;

/// One full period of coordinates, read cyclically.
class PeriodicLift {
 public:
  /// Checks phi(coords[i+1]) = coords[i], phi(coords[0]) = coords.back()
  /// and primitivity.
  PeriodicLift(const DynamicalSystem& sys, std::vector<Point> coords);

  const std::vector<Point>& coords() const { return coords_; }
  std::size_t period() const { return coords_.size(); }

 private:
  friend std::variant<PeriodicLift, class LazyLift> tildePower(const std::variant<PeriodicLift, class LazyLift>&, std::int64_t);
  explicit PeriodicLift(std::vector<Point> coords) : coords_(std::move(coords)) {}
  std::vector<Point> coords_;
};

/// phi~^shift applied to the lift of b_1 built by a chooser.
class LazyLift {
 public:
  LazyLift(std::shared_ptr<const LazyOrbit> orbit, std::int64_t shift) : orbit_(std::move(orbit)), shift_(shift) {}

  const std::shared_ptr<const LazyOrbit>& orbit() const { return orbit_; }
  std::int64_t shift() const { return shift_; }

 private:
  std::shared_ptr<const LazyOrbit> orbit_;
  std::int64_t shift_;
};

using ExtPoint = std::variant<PeriodicLift, LazyLift>;

/// Memoized two-sided sequence: b_i (i >= 1) chosen backwards from b_1 and
/// phi^{1-i}(b_1) for i <= 0. Safe for concurrent readers.
class LazyOrbit {
 public:
  LazyOrbit(DynamicalSystem sys, Point base, Chooser chooser);
  ~LazyOrbit();

  const DynamicalSystem& system() const { return sys_; }
  const Chooser& chooser() const { return chooser_; }
  Point at(std::int64_t i) const;
  /// Chooser state used to pick b_{d+1}; equal states pick the same way.
  std::int64_t chooserState(std::int64_t d) const;

 private:
  DynamicalSystem sys_;
  Chooser chooser_;
  struct Cache;
  std::unique_ptr<Cache> cache_;
};

ExtPoint liftPoint(const DynamicalSystem& sys, const Point& x, const Chooser& chooser);
/// Throws NotPeriodic unless classify(x) is Periodic.
ExtPoint extendPeriodic(const DynamicalSystem& sys, const Point& x);

ExtPoint tildeApply(const ExtPoint& xt);
ExtPoint tildeInverse(const ExtPoint& xt);
ExtPoint tildePower(const ExtPoint& xt, std::int64_t n);

Point project(const ExtPoint& xt);
/// Coordinate m of x~ for m >= 1; for m <= 0 the forward image
/// phi^{1-m}(x_1), so that coordinate(phi~^j x~, m) = coordinate(x~, m - j).
Point coordinate(const ExtPoint& xt, std::int64_t m);

/// Equal first `depth` coordinates.
bool sameExtPoint(const DynamicalSystem& sys, const ExtPoint& a, const ExtPoint& b, std::size_t depth);

Classification classifyExt(const DynamicalSystem& sys, const ExtPoint& xt, std::int64_t maxDepth);

std::string toString(const ExtPoint& xt, std::size_t shown = 4);

enum class SftProperty { Transitive, DensePeriodic, Minimal, DenseRecurrent };
const char* propertyName(SftProperty p);

struct TransferResult {
  bool base = false;
  bool extension = false;
};

/// Base side from sftProperties; extension side recomputed on the two-sided
/// shift over the same graph.
TransferResult verifyTransfer(const DynamicalSystem& sys, SftProperty property);

}  // namespace semicrossed
