#pragma once

// Finite matrices of the representation families: truncated orbit
// representations on l2(N), periodic twisted-cycle representations on C^p,
// windowed bilateral representations on l2(Z) and backward-orbit
// representations for the second covariance relation.

#include <Eigen/Dense>

#include <optional>
#include <variant>
#include <vector>

#include "semicrossed/element.hpp"
#include "semicrossed/extension.hpp"

namespace semicrossed {

using Matrix = Eigen::MatrixXcd;

/// Coordinates 1..n of pi_x: M[j, j-k] = f_k(x_{j-k}).
Matrix orbitRepMatrix(const DynamicalSystem& sys, const Point& x, const Element& f, int n);

/// p x p matrix with rho(U) = lambda C, C e_j = e_{j+1 mod p}, and
/// rho(f) = diag(f(y), f(phi y), ...). Accepts any element: coefficients
/// are evaluated along the periodic lift of y.
Matrix periodicRepMatrix(const DynamicalSystem& sys, const Point& y, cplx lambda, const Element& f);
Matrix periodicRepMatrix(const DynamicalSystem& sys, const PeriodicLift& yt, cplx lambda, const Element& f);

/// Coordinates -M..M: entry [j+k, j] = f_k(phi~^j x~). Throws
/// WindowTooSmall when M < band.
Matrix bilateralRepMatrix(const DynamicalSystem& sys, const ExtPoint& xt, const Element& f, int M);

/// Right-form G = sum g_k U^k on span{e_1..e_n}: entry [j+k, j] = g_k(x_{j+k})
/// with x_i the backward coordinates. Throws WrongForm on left-form input.
Matrix backwardRepMatrix(const DynamicalSystem& sys, const ExtPoint& orbit, const Element& g, int n);

struct OrbitTrunc {
  Point x;
  int n = 1;
};
struct PeriodicSpec {
  Point y;
  cplx lambda = 1.0;
};
struct BilateralWindow {
  ExtPoint xt;
  int M = 1;
};
struct BackwardOrbit {
  ExtPoint orbit;
  int n = 1;
};
using RepSpec = std::variant<OrbitTrunc, PeriodicSpec, BilateralWindow, BackwardOrbit>;

enum class Relation { FU_eq_UFphi, UF_eq_FphiU };

/// ||rho(f) rho(U) - rho(U) rho(f o phi)|| (first relation) or
/// ||rho(U) rho(f) - rho(f o phi) rho(U)|| (second). Defaults to the
/// relation the family is built for.
double covarianceDefect(const DynamicalSystem& sys, const RepSpec& spec, const BaseFunction& f,
                        std::optional<Relation> relation = std::nullopt);

struct TailReport {
  /// Exactly {0} and span{e_k..e_n} are invariant among coordinate subspaces.
  bool tailsOnly = false;
  /// The separating functions act as the coordinate projections on the
  /// truncated diagonal (within 1e-12).
  bool diagonalSeparates = false;
  int invariantSubspaces = 0;
  double separationDefect = 0.0;
};

/// Generators: U and the separating functions of the first n orbit points,
/// plus any extra semicrossed elements. Throws OrbitCollision when the
/// first n orbit points repeat.
TailReport invariantTailCheck(const DynamicalSystem& sys, const Point& x, int n,
                              const std::vector<Element>& extra = {});

}  // namespace semicrossed
