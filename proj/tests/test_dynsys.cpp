#include <doctest.h>

#include "oracle.hpp"
#include "semicrossed/dynsys.hpp"
#include "semicrossed/error.hpp"
#include "semicrossed/separating.hpp"
#include "semicrossed/funcalg.hpp"

using namespace semicrossed;

namespace {
const auto doubling = DynamicalSystem::circle(2);
const auto golden = DynamicalSystem::sft({{1, 1}, {1, 0}});
const auto full2 = DynamicalSystem::sft({{1, 1}, {1, 1}});
Point q(long p, long d) { return Rational::make(p, d); }
Point word(std::vector<int> pre, std::vector<int> cyc) { return Word::make(std::move(pre), std::move(cyc)); }
}  // namespace

TEST_CASE("apply on the three system kinds") {
  CHECK(samePoint(doubling, semicrossed::apply(doubling, q(1, 3)), q(2, 3)));
  CHECK(toString(semicrossed::apply(doubling, q(1, 2))) == "0");
  CHECK(toString(semicrossed::apply(golden, word({}, {0, 1}))) == "(10)");
  const auto swap = DynamicalSystem::permutation({1, 0});
  CHECK(std::get<FiniteState>(semicrossed::apply(swap, FiniteState{0})).state == 1);
}

TEST_CASE("apply rejects a point of the wrong kind") {
  CHECK_THROWS_AS(semicrossed::apply(doubling, FiniteState{0}), Error);
  CHECK_THROWS_AS(semicrossed::apply(golden, q(1, 3)), Error);
}

TEST_CASE("preimages") {
  auto pre = preimages(doubling, q(1, 3));
  REQUIRE(pre.size() == 2);
  CHECK(toString(pre[0]) == "1/6");
  CHECK(toString(pre[1]) == "2/3");
  pre = preimages(doubling, q(0, 1));
  REQUIRE(pre.size() == 2);
  CHECK(toString(pre[0]) == "0");
  CHECK(toString(pre[1]) == "1/2");
  // Only symbol 0 may precede a 1 in the golden-mean shift.
  pre = preimages(golden, word({}, {1, 0}));
  REQUIRE(pre.size() == 1);
  CHECK(toString(pre[0]) == "(01)");
}

TEST_CASE("classify") {
  CHECK((classify(doubling, q(1, 3), 100) == Classification::periodic(2)));
  CHECK((classify(doubling, q(1, 2), 100) == Classification::eventuallyPeriodic(1, 1)));
  CHECK((classify(doubling, q(1, 7), 100) == Classification::periodic(3)));
  CHECK((classify(golden, word({0}, {1, 0}), 100) == Classification::periodic(2)));
  CHECK((classify(full2, word({0, 0}, {1}), 100) == Classification::eventuallyPeriodic(2, 1)));
}

TEST_CASE("classify agrees with machine-integer orbits") {
  for (int d = 1; d <= 60; ++d) {
    for (int p = 0; p < d; ++p) {
      const oracle::Frac f = oracle::reduce(p, d);
      const int per = oracle::period(f, 3);
      const auto c = classify(DynamicalSystem::circle(3), Rational::make(p, d), 1 << 12);
      CHECK(c.isPeriodic() == (per > 0));
      if (per > 0) CHECK(c.period == per);
    }
  }
}

TEST_CASE("forwardOrbit") {
  auto o = forwardOrbit(doubling, q(1, 3), 4);
  REQUIRE(o.size() == 4);
  CHECK(toString(o[0]) == "1/3");
  CHECK(toString(o[1]) == "2/3");
  CHECK(toString(o[2]) == "1/3");
  CHECK(toString(o[3]) == "2/3");
  const auto swap = DynamicalSystem::permutation({1, 0});
  o = forwardOrbit(swap, FiniteState{0}, 3);
  CHECK(std::get<FiniteState>(o[2]).state == 0);
  o = forwardOrbit(full2, word({0}, {1}), 3);
  CHECK(toString(o[0]) == "0(1)");
  CHECK(toString(o[1]) == "(1)");
  CHECK(toString(o[2]) == "(1)");
}

TEST_CASE("words are canonical") {
  CHECK(Word::make({}, {0, 1, 0, 1}) == Word::make({}, {0, 1}));
  CHECK(Word::make({1}, {0, 1}) == Word::make({}, {1, 0}));
  CHECK(toString(word({0, 1, 1}, {1})) == "0(1)");
}

TEST_CASE("invalid systems and points") {
  CHECK_THROWS_AS(DynamicalSystem::circle(1), Error);
  CHECK_THROWS_AS(DynamicalSystem::sft({{1, 0}, {1, 0}}), Error);
  CHECK_THROWS_AS(DynamicalSystem::permutation({0, 0}), Error);
  CHECK_THROWS_AS(validatePoint(golden, word({}, {1})), Error);
  try {
    DynamicalSystem::sft({{1, 0}, {1, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidMatrix);
    CHECK(std::string(e.what()).find("column 1") != std::string::npos);
  }
}

TEST_CASE("sftProperties") {
  auto r = sftProperties({{1, 1}, {1, 1}});
  CHECK(r.transitive);
  CHECK(r.densePeriodic);
  CHECK_FALSE(r.minimal);
  CHECK(r.denseRecurrent);
  r = sftProperties({{1, 1}, {1, 0}});
  CHECK(r.transitive);
  CHECK(r.densePeriodic);
  CHECK_FALSE(r.minimal);
  CHECK(r.denseRecurrent);
  r = sftProperties({{0, 1}, {1, 0}});
  CHECK(r.transitive);
  CHECK(r.minimal);
  r = sftProperties({{1, 1}, {0, 1}});
  CHECK_FALSE(r.transitive);
  CHECK_FALSE(r.densePeriodic);
}

TEST_CASE("separatingFunction") {
  const std::vector<Point> orbit{q(1, 3), q(2, 3)};
  const auto f = separatingFunction(doubling, orbit, 1, 2);
  CHECK(std::abs(evaluate(doubling, f, orbit[0]) - 1.0) <= 1e-12);
  CHECK(std::abs(evaluate(doubling, f, orbit[1])) <= 1e-12);
  for (int i = 0; i < 200; ++i) {
    const cplx v = evaluate(doubling, f, Rational::make(i, 200));
    CHECK(std::abs(v.imag()) <= 1e-12);
    CHECK(v.real() >= -1e-12);
    CHECK(v.real() <= 1.0 + 1e-12);
  }

  // The orbit of (01) is (01), (10); they first differ at the first symbol,
  // and the target starts with 0.
  const auto g = separatingFunction(golden, forwardOrbit(golden, word({}, {0, 1}), 2), 1, 2);
  const auto& cyl = std::get<Cylinder>(g);
  CHECK(cyl.depth == 1);
  CHECK(cyl.values.at({0}) == cplx(1.0));
  CHECK(cyl.values.at({1}) == cplx(0.0));

  CHECK_THROWS_AS(separatingFunction(doubling, {q(1, 3), q(2, 3), q(1, 3)}, 1, 3), Error);
}

TEST_CASE("parsePoint round trips") {
  for (const char* text : {"1/3", "0", "5/12"}) CHECK(toString(parsePoint(doubling, text)) == text);
  CHECK(toString(parsePoint(golden, "0(10)")) == "(01)");
  CHECK(toString(parsePoint(doubling, "proc(7)")) == "proc(7)");
  CHECK_THROWS_AS(parsePoint(doubling, "1/"), Error);
}
