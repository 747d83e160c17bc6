#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "semicrossed/expr.hpp"
#include "semicrossed/funcalg.hpp"

using namespace semicrossed;

namespace {
const auto doubling = DynamicalSystem::circle(2);
const auto golden = DynamicalSystem::sft({{1, 1}, {1, 0}});
Point q(long p, long d) { return Rational::make(p, d); }
}  // namespace

TEST_CASE("evaluate on lifts") {
  const auto y = extendPeriodic(doubling, q(1, 3));
  CHECK(std::abs(evaluate(doubling, ExtFunction{1, cosine(1)}, y) - cplx(-0.5)) <= 1e-15);
  CHECK(std::abs(evaluate(doubling, ExtFunction{2, cosine(1)}, y) - cplx(-0.5)) <= 1e-15);
  CHECK(evaluate(doubling, constant(doubling, cplx(2, 3)), y) == cplx(2, 3));
}

TEST_CASE("alphaBase") {
  const auto c2 = std::get<TrigPoly>(alphaBase(doubling, cosine(1)));
  CHECK(c2.coeffs.size() == 2);
  CHECK(c2.coeffs.at(2) == cplx(0.5));
  CHECK(c2.coeffs.at(-2) == cplx(0.5));
  CHECK(std::get<TrigPoly>(alphaBase(doubling, trig({{0, 3.0}}))).coeffs.at(0) == cplx(3.0));

  const cplx a(1, 2), b(-3, 0.5);
  const auto g = std::get<Cylinder>(alphaBase(golden, cylinder(golden, 1, {{{0}, a}, {{1}, b}})));
  CHECK(g.depth == 2);
  CHECK(g.values.size() == 3);  // 00, 01, 10
  CHECK(g.values.at({0, 0}) == a);
  CHECK(g.values.at({0, 1}) == b);
  CHECK(g.values.at({1, 0}) == a);
}

TEST_CASE("alphaTilde and its inverse") {
  const ExtFunction g{1, cosine(1)};
  CHECK(alphaTildeInv(g).depth == 2);
  const auto a = alphaTilde(doubling, g);
  CHECK(a.depth == 1);
  CHECK(std::get<TrigPoly>(a.base).coeffs.count(2) == 1);
  CHECK((alphaTilde(doubling, alphaTildeInv(g)) == g));
}

TEST_CASE("add and multiply at common depth") {
  const ExtFunction two = constant(doubling, 2.0);
  const ExtFunction g{3, cosine(1)};
  const auto p = multiply(doubling, two, g);
  CHECK(p.depth == 3);
  CHECK(isZero(add(doubling, g, negate(g))));

  const ExtFunction f1{1, cosine(1)}, f2{2, cosine(1)};
  const auto prod = multiply(doubling, f1, f2);
  CHECK(prod.depth == 2);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto xt = liftPoint(doubling, Rational::make(static_cast<long>(s) + 1, 41), SeededRandom{s});
    // Oracle: cos(2 pi x_2) cos(2 pi x_1) with x_1 = 2 x_2 mod 1.
    const double x2 = circleValue(doubling, coordinate(xt, 2));
    const double expected = std::cos(2 * std::numbers::pi * x2) * std::cos(4 * std::numbers::pi * x2);
    CHECK(std::abs(evaluate(doubling, prod, xt) - cplx(expected)) <= 1e-12);
  }
}

TEST_CASE("supNorm") {
  const auto c = supNorm(cosine(1));
  CHECK(c.lower <= 1.0);
  CHECK(c.upper >= 1.0);
  CHECK(c.upper - c.lower <= 1e-3);
  const auto cyl = supNorm(cylinder(DynamicalSystem::sft({{1, 1}, {1, 1}}), 1, {{{0}, 0.5}, {{1}, 2.0}}));
  CHECK(cyl.lower == 2.0);
  CHECK(cyl.upper == 2.0);
  const auto k = supNorm(BaseFunction(trig({{0, cplx(3, 4)}})));
  CHECK(k.lower == doctest::Approx(5.0));
  CHECK(k.upper == doctest::Approx(5.0));
}

TEST_CASE("supNorm brackets contain a dense-grid oracle") {
  oracle::Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    std::map<std::int64_t, cplx> c;
    oracle::Coeffs oc;
    const int deg = 1 + rng.below(8);
    for (int k = -deg; k <= deg; ++k) {
      const cplx v(rng.unit() - 0.5, rng.unit() - 0.5);
      c[k] = v;
      oc[k] = v;
    }
    const auto b = supNorm(BaseFunction(trig(c)));
    const double grid = oracle::gridSup(oc, 100000);
    // The true sup lies within half a grid step times the derivative bound
    // 2 pi deg sum|c| of the grid value.
    double l1 = 0.0;
    for (const auto& [k, v] : oc) l1 += std::abs(v);
    const double slack = std::numbers::pi * deg * l1 / 1e5;
    CHECK(b.upper >= grid - 1e-12);
    CHECK(b.lower <= grid + slack + 1e-12);
  }
}

TEST_CASE("text forms") {
  CHECK(toString(BaseFunction(cosine(1))) == "trig(-1:0.5, 1:0.5)");
  const auto f = parseExtFunction(doubling, "@3:cos(2)");
  CHECK(f.depth == 3);
  CHECK(toString(f) == "@3:trig(-2:0.5, 2:0.5)");
  CHECK(std::get<Cylinder>(parseBaseFunction(golden, "cyl(0:1, 1:2)")).values.at({1}) == cplx(2.0));
}
