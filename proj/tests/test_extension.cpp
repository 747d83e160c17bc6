#include <doctest.h>

#include "oracle.hpp"
#include "semicrossed/error.hpp"
#include "semicrossed/extension.hpp"

using namespace semicrossed;

namespace {
const auto doubling = DynamicalSystem::circle(2);
Point q(long p, long d) { return Rational::make(p, d); }
std::string coord(const ExtPoint& x, std::int64_t m) { return toString(coordinate(x, m)); }
}  // namespace

TEST_CASE("liftPoint") {
  // Choosing 2/3 then 1/3 alternately closes the backward orbit.
  const auto cyc = liftPoint(doubling, q(1, 3), ExplicitTail{{1, 0}});
  REQUIRE(std::holds_alternative<PeriodicLift>(cyc));
  CHECK(std::get<PeriodicLift>(cyc).period() == 2);
  CHECK(coord(cyc, 1) == "1/3");
  CHECK(coord(cyc, 2) == "2/3");

  const auto halving = liftPoint(doubling, q(1, 3), AlwaysMin{});
  CHECK(std::holds_alternative<LazyLift>(halving));
  CHECK(coord(halving, 1) == "1/3");
  CHECK(coord(halving, 2) == "1/6");
  CHECK(coord(halving, 3) == "1/12");
  CHECK(coord(halving, 4) == "1/24");

  const auto perm = DynamicalSystem::permutation({1, 2, 0});
  const auto lift = liftPoint(perm, FiniteState{0}, AlwaysMin{});
  CHECK(coord(lift, 2) == "2");
  CHECK(coord(lift, 3) == "1");
  CHECK(coord(lift, 4) == "0");
}

TEST_CASE("extendPeriodic") {
  auto x = extendPeriodic(doubling, q(1, 3));
  CHECK(coord(x, 1) == "1/3");
  CHECK(coord(x, 2) == "2/3");
  x = extendPeriodic(doubling, q(1, 7));
  CHECK(coord(x, 1) == "1/7");
  CHECK(coord(x, 2) == "4/7");
  CHECK(coord(x, 3) == "2/7");
  CHECK(coord(x, 4) == "1/7");
  try {
    extendPeriodic(doubling, q(1, 2));
    FAIL("expected NotPeriodic");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPeriodic);
  }
}

TEST_CASE("tildeApply and tildeInverse") {
  const auto x = extendPeriodic(doubling, q(1, 3));
  const auto y = tildeApply(x);
  CHECK(coord(y, 1) == "2/3");
  CHECK(coord(y, 2) == "1/3");
  CHECK(sameExtPoint(doubling, tildeInverse(y), x, 16));

  const auto half = liftPoint(doubling, q(1, 2), AlwaysMin{});
  const auto shifted = tildeApply(half);
  CHECK(coord(shifted, 1) == "0");
  CHECK(coord(shifted, 2) == "1/2");
  CHECK(coord(shifted, 3) == "1/4");
}

TEST_CASE("project") {
  CHECK(toString(project(extendPeriodic(doubling, q(1, 3)))) == "1/3");
  CHECK(toString(project(liftPoint(doubling, q(1, 2), AlwaysMin{}))) == "1/2");
}

TEST_CASE("classifyExt") {
  CHECK((classifyExt(doubling, extendPeriodic(doubling, q(1, 3)), 64) == Classification::periodic(2)));
  for (std::uint64_t s = 0; s < 10; ++s) {
    CHECK_FALSE(classifyExt(doubling, liftPoint(doubling, q(1, 2), SeededRandom{s}), 128).isPeriodic());
  }
  const auto c = classifyExt(doubling, liftPoint(doubling, proceduralPoint(doubling, 3), AlwaysMin{}), 8);
  CHECK(c.kind == Classification::Kind::Unresolved);
}

TEST_CASE("verifyTransfer examples") {
  const auto golden = DynamicalSystem::sft({{1, 1}, {1, 0}});
  auto r = verifyTransfer(golden, SftProperty::Transitive);
  CHECK(r.base);
  CHECK(r.extension);
  r = verifyTransfer(DynamicalSystem::sft({{1, 1}, {1, 1}}), SftProperty::Minimal);
  CHECK_FALSE(r.base);
  CHECK_FALSE(r.extension);
  r = verifyTransfer(DynamicalSystem::sft({{0, 1}, {1, 0}}), SftProperty::Minimal);
  CHECK(r.base);
  CHECK(r.extension);
}

TEST_CASE("extension side matches graph oracles") {
  const SftProperty props[] = {SftProperty::Transitive, SftProperty::Minimal, SftProperty::DenseRecurrent};
  for (std::uint32_t bits = 0; bits < 512; ++bits) {
    oracle::Graph t(3, std::vector<int>(3));
    for (int i = 0; i < 9; ++i) t[i / 3][i % 3] = static_cast<int>((bits >> i) & 1U);
    try {
      validateTransition(t);
    } catch (const Error&) {
      continue;
    }
    const auto sys = DynamicalSystem::sft(t);
    const bool expected[] = {oracle::stronglyConnected(t), oracle::singleCycle(t), oracle::everyEdgeOnCycle(t)};
    for (int k = 0; k < 3; ++k) CHECK(verifyTransfer(sys, props[k]).extension == expected[k]);
  }
}

TEST_CASE("choosers parse") {
  CHECK(toString(parseChooser("min")) == "min");
  CHECK(toString(parseChooser("random:5")) == "random:5");
  CHECK(toString(parseChooser("tail:1,0")) == "tail:1,0");
  CHECK_THROWS_AS(parseChooser("sometimes"), Error);
}
