#pragma once

// Formal Laurent polynomials in U with coefficients in the inductive-limit
// algebra: sum_n U^n f_n (left form, fU = U(f o phi~)) or sum_n g_n U^n
// tagged for the Uf = (f o phi)U relation.

#include <cstdint>
#include <map>
#include <string>

#include "semicrossed/funcalg.hpp"

namespace semicrossed {

enum class Form { Left, Right };

struct Element {
  std::map<std::int64_t, ExtFunction> coeffs;
  Form form = Form::Left;

  /// Largest |n| with a nonzero coefficient.
  std::int64_t band() const;
  int maxDepth() const;
  bool isSemicrossed() const;
  friend bool operator==(const Element&, const Element&) = default;
};

Element zeroElement(Form form = Form::Left);
Element fromFunction(ExtFunction f);
/// U^n.
Element powerOfU(const DynamicalSystem& sys, std::int64_t n);
/// U^n f (left form).
Element monomial(std::int64_t n, ExtFunction f);

/// Drops structurally zero coefficients.
Element pruned(Element e);

Element add(const DynamicalSystem& sys, const Element& a, const Element& b);
Element subtract(const DynamicalSystem& sys, const Element& a, const Element& b);
Element scale(const Element& a, cplx c);
/// (U^m f)(U^n g) = U^{m+n} (alpha~^n(f) g); right-form elements multiply
/// by (g U^m)(h U^n) = g alpha^m(h) U^{m+n} and must be semicrossed.
Element multiply(const DynamicalSystem& sys, const Element& a, const Element& b);
/// (U^n f)* = U^{-n} (conj(f) o phi~^{-n}).
Element adjoint(const DynamicalSystem& sys, const Element& a);
/// U* F U: every coefficient f_n becomes alpha~(f_n).
Element alphaElement(const DynamicalSystem& sys, const Element& a);
/// G U^m = sum U^{n+m} alpha~^m(g_n). Throws DepthTooLarge unless every
/// coefficient depth is at most m + 1.
Element pushdown(const DynamicalSystem& sys, const Element& g, std::int64_t m);

/// sum_n sup|f_n| (upper ends of the brackets).
double ell1Upper(const Element& a);

/// Throws NotSemicrossed when the predicate fails.
void requireSemicrossed(const Element& a);
Element toRelation2(const Element& a);
Element fromRelation2(const Element& a);

std::string toString(const Element& a);

}  // namespace semicrossed
