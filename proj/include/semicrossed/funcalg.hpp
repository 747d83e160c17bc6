#pragma once

// Dense function algebras standing in for C(X), the endomorphism
// alpha(g) = g o phi, and depth-tagged functions on X~ realizing the
// inductive limit of alpha~^{-n}(C(X)).

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "semicrossed/dynsys.hpp"
#include "semicrossed/extension.hpp"

namespace semicrossed {

using cplx = std::complex<double>;

/// sum_k c_k e^{2 pi i k x}; zero coefficients are never stored.
struct TrigPoly {
  std::map<std::int64_t, cplx> coeffs;

  std::int64_t degree() const;
  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;
};

/// Function of the first `depth` symbols; keys are exactly the admissible
/// words of that length.
struct Cylinder {
  int depth = 1;
  std::map<std::vector<int>, cplx> values;
  friend bool operator==(const Cylinder&, const Cylinder&) = default;
};

struct Tabular {
  std::vector<cplx> values;
  friend bool operator==(const Tabular&, const Tabular&) = default;
};

using BaseFunction = std::variant<TrigPoly, Cylinder, Tabular>;

/// Value alpha~^{-(depth-1)}(g): evaluates g at coordinate `depth`.
struct ExtFunction {
  int depth = 1;
  BaseFunction base;
  friend bool operator==(const ExtFunction&, const ExtFunction&) = default;
};

struct NormBracket {
  double lower = 0.0;
  double upper = 0.0;
  std::string lowerWitness;
  std::string upperMethod;
};

/// Admissible words of length d, lexicographic. Throws BadInput past 2^20.
std::vector<std::vector<int>> admissibleWords(const DynamicalSystem& sys, int d);

TrigPoly trig(std::map<std::int64_t, cplx> coeffs);
/// Missing admissible words are filled with 0; inadmissible keys throw.
Cylinder cylinder(const DynamicalSystem& sys, int depth, std::map<std::vector<int>, cplx> values);
BaseFunction constantBase(const DynamicalSystem& sys, cplx c);
/// cos(2 pi k x) / sin(2 pi k x).
TrigPoly cosine(std::int64_t k);
TrigPoly sine(std::int64_t k);

/// Throws TypeMismatch if g does not belong to sys.
void validateBase(const DynamicalSystem& sys, const BaseFunction& g);

cplx evaluate(const DynamicalSystem& sys, const BaseFunction& g, const Point& x);
cplx evaluate(const DynamicalSystem& sys, const ExtFunction& f, const ExtPoint& xt);
/// f(phi~^j x~) without materializing the shifted point.
cplx evaluateShifted(const DynamicalSystem& sys, const ExtFunction& f, const ExtPoint& xt, std::int64_t j);

BaseFunction alphaBase(const DynamicalSystem& sys, const BaseFunction& g);
BaseFunction alphaBasePower(const DynamicalSystem& sys, const BaseFunction& g, int n);

BaseFunction add(const DynamicalSystem& sys, const BaseFunction& a, const BaseFunction& b);
BaseFunction multiply(const DynamicalSystem& sys, const BaseFunction& a, const BaseFunction& b);
BaseFunction scale(const BaseFunction& g, cplx c);
/// Pointwise complex conjugate.
BaseFunction conj(const BaseFunction& g);
bool isZero(const BaseFunction& g);

ExtFunction constant(const DynamicalSystem& sys, cplx c);
/// iota: depth 1.
ExtFunction embed(BaseFunction g);
ExtFunction alphaTilde(const DynamicalSystem& sys, const ExtFunction& f);
ExtFunction alphaTildeInv(const ExtFunction& f);
/// alpha~^n for any integer n.
ExtFunction alphaTildePower(const DynamicalSystem& sys, const ExtFunction& f, std::int64_t n);
/// Same function re-expressed at depth m >= f.depth.
ExtFunction liftTo(const DynamicalSystem& sys, const ExtFunction& f, int m);

ExtFunction add(const DynamicalSystem& sys, const ExtFunction& a, const ExtFunction& b);
ExtFunction multiply(const DynamicalSystem& sys, const ExtFunction& a, const ExtFunction& b);
ExtFunction negate(const ExtFunction& f);
ExtFunction scale(const ExtFunction& f, cplx c);
ExtFunction conj(const ExtFunction& f);
bool isZero(const ExtFunction& f);

/// Exact for Cylinder/Tabular; grid bracket for TrigPoly.
NormBracket supNorm(const BaseFunction& g);
NormBracket supNorm(const ExtFunction& f);

std::string toString(const BaseFunction& g);
std::string toString(const ExtFunction& f);

}  // namespace semicrossed
