#include "semicrossed/repr.hpp"

#include <cmath>

#include "semicrossed/error.hpp"
#include "semicrossed/norms.hpp"
#include "semicrossed/separating.hpp"

namespace semicrossed {

namespace {

cplx unitPower(cplx lambda, std::int64_t n) {
  cplx out = 1.0;
  const cplx step = n >= 0 ? lambda : std::conj(lambda);
  for (std::int64_t i = 0; i < (n >= 0 ? n : -n); ++i) out *= step;
  return out;
}

void checkLambda(cplx lambda) {
  if (!(std::abs(std::abs(lambda) - 1.0) <= 1e-12)) {
    throw Error(Errc::BadLambda, "|lambda| must be 1, got " + std::to_string(std::abs(lambda)));
  }
}

}  // namespace

Matrix orbitRepMatrix(const DynamicalSystem& sys, const Point& x, const Element& f, int n) {
  if (n < 1) throw Error(Errc::BadInput, "truncation must be >= 1");
  if (f.form != Form::Left) throw Error(Errc::WrongForm, "orbit representations take left-form elements");
  requireSemicrossed(f);
  const auto orbit = forwardOrbit(sys, x, n);
  Matrix m = Matrix::Zero(n, n);
  for (const auto& [k, g] : f.coeffs) {
    for (int c = 0; c + k < n; ++c) m(c + k, c) = evaluate(sys, g.base, orbit[c]);
  }
  return m;
}

Matrix periodicRepMatrix(const DynamicalSystem& sys, const PeriodicLift& yt, cplx lambda, const Element& f) {
  checkLambda(lambda);
  if (f.form != Form::Left) throw Error(Errc::WrongForm, "periodic representations take left-form elements");
  const auto p = static_cast<std::int64_t>(yt.period());
  const ExtPoint y = yt;
  Matrix m = Matrix::Zero(p, p);
  for (const auto& [k, g] : f.coeffs) {
    const cplx lk = unitPower(lambda, k);
    for (std::int64_t j = 0; j < p; ++j) {
      const std::int64_t row = ((j + k) % p + p) % p;
      m(row, j) += lk * evaluateShifted(sys, g, y, j);
    }
  }
  return m;
}

Matrix periodicRepMatrix(const DynamicalSystem& sys, const Point& y, cplx lambda, const Element& f) {
  return periodicRepMatrix(sys, std::get<PeriodicLift>(extendPeriodic(sys, y)), lambda, f);
}

Matrix bilateralRepMatrix(const DynamicalSystem& sys, const ExtPoint& xt, const Element& f, int M) {
  if (f.form != Form::Left) throw Error(Errc::WrongForm, "bilateral representations take left-form elements");
  if (M < 0 || M < f.band()) {
    throw Error(Errc::WindowTooSmall, "window " + std::to_string(M) + " is narrower than the band " + std::to_string(f.band()));
  }
  const int size = 2 * M + 1;
  Matrix m = Matrix::Zero(size, size);
  for (const auto& [k, g] : f.coeffs) {
    for (int c = 0; c < size; ++c) {
      const std::int64_t r = c + k;
      if (r < 0 || r >= size) continue;
      m(r, c) = evaluateShifted(sys, g, xt, c - M);
    }
  }
  return m;
}

Matrix backwardRepMatrix(const DynamicalSystem& sys, const ExtPoint& orbit, const Element& g, int n) {
  if (n < 1) throw Error(Errc::BadInput, "truncation must be >= 1");
  if (g.form != Form::Right) throw Error(Errc::WrongForm, "backward-orbit representations take relation-2 elements");
  requireSemicrossed(g);
  Matrix m = Matrix::Zero(n, n);
  for (const auto& [k, h] : g.coeffs) {
    for (int c = 0; c + k < n; ++c) m(c + k, c) = evaluate(sys, h.base, coordinate(orbit, c + k + 1));
  }
  return m;
}

double covarianceDefect(const DynamicalSystem& sys, const RepSpec& spec, const BaseFunction& f,
                        std::optional<Relation> relation) {
  validateBase(sys, f);
  const BaseFunction fphi = alphaBase(sys, f);
  Element ef = fromFunction(embed(f)), efphi = fromFunction(embed(fphi)), eu = powerOfU(sys, 1);
  Matrix F, Fphi, U;
  Relation natural = Relation::FU_eq_UFphi;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, OrbitTrunc>) {
          F = orbitRepMatrix(sys, s.x, ef, s.n);
          Fphi = orbitRepMatrix(sys, s.x, efphi, s.n);
          U = orbitRepMatrix(sys, s.x, eu, s.n);
        } else if constexpr (std::is_same_v<T, PeriodicSpec>) {
          F = periodicRepMatrix(sys, s.y, s.lambda, ef);
          Fphi = periodicRepMatrix(sys, s.y, s.lambda, efphi);
          U = periodicRepMatrix(sys, s.y, s.lambda, eu);
        } else if constexpr (std::is_same_v<T, BilateralWindow>) {
          F = bilateralRepMatrix(sys, s.xt, ef, s.M);
          Fphi = bilateralRepMatrix(sys, s.xt, efphi, s.M);
          U = bilateralRepMatrix(sys, s.xt, eu, s.M);
        } else {
          natural = Relation::UF_eq_FphiU;
          F = backwardRepMatrix(sys, s.orbit, toRelation2(ef), s.n);
          Fphi = backwardRepMatrix(sys, s.orbit, toRelation2(efphi), s.n);
          U = backwardRepMatrix(sys, s.orbit, toRelation2(eu), s.n);
        }
      },
      spec);
  const Relation rel = relation.value_or(natural);
  const Matrix d = rel == Relation::FU_eq_UFphi ? Matrix(F * U - U * Fphi) : Matrix(U * F - Fphi * U);
  return spectralNorm(d);
}

TailReport invariantTailCheck(const DynamicalSystem& sys, const Point& x, int n, const std::vector<Element>& extra) {
  if (n < 1 || n > 20) throw Error(Errc::BadInput, "subset enumeration needs 1 <= n <= 20");
  const auto orbit = forwardOrbit(sys, x, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (samePoint(sys, orbit[i], orbit[j], 4096)) {
        throw Error(Errc::OrbitCollision, "orbit positions " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                              " coincide (" + toString(orbit[i]) + ")");
      }
    }
  }
  std::vector<Matrix> gens{orbitRepMatrix(sys, x, powerOfU(sys, 1), n)};
  TailReport report;
  for (int i = 1; i <= n; ++i) {
    const BaseFunction g = separatingFunction(sys, orbit, i, n);
    for (int j = 1; j <= n; ++j) {
      const double target = i == j ? 1.0 : 0.0;
      report.separationDefect = std::max(report.separationDefect, std::abs(evaluate(sys, g, orbit[j - 1]) - target));
    }
    gens.push_back(orbitRepMatrix(sys, x, fromFunction(embed(g)), n));
  }
  for (const auto& e : extra) gens.push_back(orbitRepMatrix(sys, x, e, n));
  report.diagonalSeparates = report.separationDefect <= 1e-12;

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  bool onlyTails = true;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    bool invariant = true;
    for (const auto& g : gens) {
      for (int c = 0; c < n && invariant; ++c) {
        if (!(mask >> c & 1U)) continue;
        for (int r = 0; r < n; ++r) {
          if (!(mask >> r & 1U) && g(r, c) != cplx(0.0, 0.0)) {
            invariant = false;
            break;
          }
        }
      }
      if (!invariant) break;
    }
    if (!invariant) continue;
    ++report.invariantSubspaces;
    // Tails span{e_k..e_n} are the masks whose set bits form a suffix.
    const bool tail = mask == 0 || ((mask + (mask & (~mask + 1))) & full) == 0;
    onlyTails = onlyTails && tail;
  }
  report.tailsOnly = onlyTails && report.invariantSubspaces == n + 1;
  return report;
}

}  // namespace semicrossed
