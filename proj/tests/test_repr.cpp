#include <doctest.h>

#include <complex>

#include "semicrossed/error.hpp"
#include "semicrossed/expr.hpp"
#include "semicrossed/norms.hpp"
#include "semicrossed/repr.hpp"

using namespace semicrossed;

namespace {
const auto doubling = DynamicalSystem::circle(2);
Point q(long p, long d) { return Rational::make(p, d); }
Element parse(const std::string& text, Form form = Form::Left) { return parseElement(doubling, text, form); }
const PeriodicLift third(doubling, {q(1, 3), q(2, 3)});

Matrix shift(int n) {
  Matrix m = Matrix::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  return m;
}
}  // namespace

TEST_CASE("orbitRepMatrix") {
  CHECK((orbitRepMatrix(doubling, q(1, 3), parse("U"), 3) - shift(3)).norm() == 0.0);
  const Matrix m = orbitRepMatrix(doubling, q(1, 3), parse("U*cos(1)"), 3);
  CHECK((m - (-0.5) * shift(3)).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK(spectralNorm(m) == doctest::Approx(0.5).epsilon(1e-12));
  const Matrix c = orbitRepMatrix(doubling, q(1, 5), parse("(2,1)"), 4);
  CHECK((c - cplx(2, 1) * Matrix::Identity(4, 4)).norm() == 0.0);
  CHECK_THROWS_AS(orbitRepMatrix(doubling, q(1, 3), parse("U^-1"), 3), Error);
}

TEST_CASE("periodicRepMatrix") {
  const cplx i(0, 1);
  const Matrix u = periodicRepMatrix(doubling, q(1, 7), i, parse("U"));
  Matrix c = Matrix::Zero(3, 3);
  c(1, 0) = c(2, 1) = c(0, 2) = 1.0;
  CHECK((u - i * c).norm() <= 1e-15);
  CHECK(spectralNorm(u) == doctest::Approx(1.0).epsilon(1e-12));

  const Matrix d = periodicRepMatrix(doubling, q(1, 3), 1.0, parse("cos(1)"));
  CHECK((d - (-0.5) * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-15);

  const Matrix full = periodicRepMatrix(doubling, q(1, 7), 1.0, parse("U^3"));
  CHECK((full - Matrix::Identity(3, 3)).norm() <= 1e-15);

  CHECK_THROWS_AS(periodicRepMatrix(doubling, q(1, 2), 1.0, parse("U")), Error);
  CHECK_THROWS_AS(periodicRepMatrix(doubling, q(1, 3), 2.0, parse("U")), Error);
}

TEST_CASE("bilateralRepMatrix") {
  CHECK((bilateralRepMatrix(doubling, third, parse("U"), 1) - shift(3)).norm() == 0.0);
  CHECK((bilateralRepMatrix(doubling, third, parse("U^-1*U"), 1) - Matrix::Identity(3, 3)).norm() == 0.0);
  const Matrix d = bilateralRepMatrix(doubling, third, parse("cos(1)"), 4);
  CHECK((d - (-0.5) * Matrix::Identity(9, 9)).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK_THROWS_AS(bilateralRepMatrix(doubling, third, parse("U^2"), 1), Error);
}

TEST_CASE("backwardRepMatrix") {
  CHECK((backwardRepMatrix(doubling, third, parse("U", Form::Right), 3) - shift(3)).norm() == 0.0);
  const Matrix g = backwardRepMatrix(doubling, third, parse("cos(1)*U", Form::Right), 3);
  CHECK((g - (-0.5) * shift(3)).cwiseAbs().maxCoeff() <= 1e-15);
  const Matrix c = backwardRepMatrix(doubling, third, parse("3", Form::Right), 3);
  CHECK((c - 3.0 * Matrix::Identity(3, 3)).norm() == 0.0);
  CHECK_THROWS_AS(backwardRepMatrix(doubling, third, parse("U"), 3), Error);
}

TEST_CASE("covarianceDefect") {
  const BaseFunction f = cosine(1);
  CHECK(covarianceDefect(doubling, OrbitTrunc{q(1, 3), 5}, f) <= 1e-12);
  CHECK(covarianceDefect(doubling, PeriodicSpec{q(1, 3), cplx(0, 1)}, sine(3)) <= 1e-12);
  const auto lift = liftPoint(doubling, q(1, 5), AlwaysMin{});
  CHECK(covarianceDefect(doubling, BackwardOrbit{lift, 6}, f) <= 1e-12);
  CHECK(covarianceDefect(doubling, BackwardOrbit{lift, 6}, f, Relation::FU_eq_UFphi) > 0.1);
  CHECK(covarianceDefect(doubling, BilateralWindow{third, 4}, f) <= 1e-12);
}

TEST_CASE("invariantTailCheck") {
  const auto r = invariantTailCheck(doubling, q(1, 5), 3);
  CHECK(r.tailsOnly);
  CHECK(r.diagonalSeparates);
  CHECK(r.invariantSubspaces == 4);
  CHECK(invariantTailCheck(doubling, q(1, 5), 1).tailsOnly);
  try {
    invariantTailCheck(doubling, q(1, 3), 3);
    FAIL("expected OrbitCollision");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OrbitCollision);
  }
}
