#include "semicrossed/element.hpp"

#include <algorithm>

#include "semicrossed/error.hpp"

namespace semicrossed {

namespace {

void sameForm(const Element& a, const Element& b) {
  if (a.form != b.form) throw Error(Errc::WrongForm, "elements are in different normal forms");
}

void accumulate(const DynamicalSystem& sys, Element& into, std::int64_t n, const ExtFunction& f) {
  auto it = into.coeffs.find(n);
  if (it == into.coeffs.end()) {
    into.coeffs.emplace(n, f);
  } else {
    it->second = add(sys, it->second, f);
  }
}

}  // namespace

std::int64_t Element::band() const {
  std::int64_t b = 0;
  for (const auto& [n, f] : coeffs) b = std::max(b, n < 0 ? -n : n);
  return b;
}

int Element::maxDepth() const {
  int d = 1;
  for (const auto& [n, f] : coeffs) d = std::max(d, f.depth);
  return d;
}

bool Element::isSemicrossed() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.first >= 0 && kv.second.depth == 1; });
}

Element zeroElement(Form form) { return Element{{}, form}; }

Element fromFunction(ExtFunction f) { return pruned(Element{{{0, std::move(f)}}, Form::Left}); }

Element powerOfU(const DynamicalSystem& sys, std::int64_t n) { return Element{{{n, constant(sys, 1.0)}}, Form::Left}; }

Element monomial(std::int64_t n, ExtFunction f) { return pruned(Element{{{n, std::move(f)}}, Form::Left}); }

Element pruned(Element e) {
  std::erase_if(e.coeffs, [](const auto& kv) { return isZero(kv.second); });
  return e;
}

Element add(const DynamicalSystem& sys, const Element& a, const Element& b) {
  sameForm(a, b);
  Element out = a;
  for (const auto& [n, f] : b.coeffs) accumulate(sys, out, n, f);
  return pruned(std::move(out));
}

Element subtract(const DynamicalSystem& sys, const Element& a, const Element& b) { return add(sys, a, scale(b, -1.0)); }

Element scale(const Element& a, cplx c) {
  Element out = a;
  for (auto& [n, f] : out.coeffs) f = scale(f, c);
  return pruned(std::move(out));
}

Element multiply(const DynamicalSystem& sys, const Element& a, const Element& b) {
  sameForm(a, b);
  Element out = zeroElement(a.form);
  if (a.form == Form::Right) {
    requireSemicrossed(a);
    requireSemicrossed(b);
    for (const auto& [m, g] : a.coeffs) {
      for (const auto& [n, h] : b.coeffs) {
        const ExtFunction moved = embed(alphaBasePower(sys, h.base, static_cast<int>(m)));
        accumulate(sys, out, m + n, multiply(sys, g, moved));
      }
    }
    return pruned(std::move(out));
  }
  for (const auto& [m, f] : a.coeffs) {
    for (const auto& [n, g] : b.coeffs) accumulate(sys, out, m + n, multiply(sys, alphaTildePower(sys, f, n), g));
  }
  return pruned(std::move(out));
}

Element adjoint(const DynamicalSystem& sys, const Element& a) {
  if (a.form != Form::Left) throw Error(Errc::WrongForm, "adjoint is defined on left-form elements");
  Element out = zeroElement(Form::Left);
  for (const auto& [n, f] : a.coeffs) accumulate(sys, out, -n, alphaTildePower(sys, conj(f), -n));
  return pruned(std::move(out));
}

Element alphaElement(const DynamicalSystem& sys, const Element& a) {
  if (a.form != Form::Left) throw Error(Errc::WrongForm, "alpha acts on left-form elements");
  Element out = a;
  for (auto& [n, f] : out.coeffs) f = alphaTilde(sys, f);
  return out;
}

Element pushdown(const DynamicalSystem& sys, const Element& g, std::int64_t m) {
  if (g.form != Form::Left) throw Error(Errc::WrongForm, "pushdown acts on left-form elements");
  if (m < 0) throw Error(Errc::BadInput, "pushdown exponent must be >= 0");
  Element out = zeroElement(Form::Left);
  for (const auto& [n, f] : g.coeffs) {
    if (n < 0) throw Error(Errc::NotSemicrossed, "pushdown needs nonnegative powers, found U^" + std::to_string(n));
    if (f.depth > m + 1) {
      throw Error(Errc::DepthTooLarge, "coefficient at U^" + std::to_string(n) + " has depth " + std::to_string(f.depth) +
                                           " > " + std::to_string(m + 1));
    }
    accumulate(sys, out, n + m, alphaTildePower(sys, f, m));
  }
  return pruned(std::move(out));
}

double ell1Upper(const Element& a) {
  double total = 0.0;
  for (const auto& [n, f] : a.coeffs) total += supNorm(f).upper;
  return total;
}

void requireSemicrossed(const Element& a) {
  for (const auto& [n, f] : a.coeffs) {
    if (n < 0) throw Error(Errc::NotSemicrossed, "negative power U^" + std::to_string(n));
    if (f.depth != 1) {
      throw Error(Errc::NotSemicrossed, "coefficient at U^" + std::to_string(n) + " has depth " + std::to_string(f.depth));
    }
  }
}

Element toRelation2(const Element& a) {
  if (a.form != Form::Left) throw Error(Errc::WrongForm, "element is already in right form");
  requireSemicrossed(a);
  Element out = a;
  out.form = Form::Right;
  return out;
}

Element fromRelation2(const Element& a) {
  if (a.form != Form::Right) throw Error(Errc::WrongForm, "element is not in right form");
  Element out = a;
  out.form = Form::Left;
  return out;
}

std::string toString(const Element& a) {
  if (a.coeffs.empty()) return "0";
  std::string out;
  for (const auto& [n, f] : a.coeffs) {
    if (!out.empty()) out += " + ";
    std::string u;
    if (n == 1) {
      u = "U";
    } else if (n != 0) {
      u = "U^" + std::to_string(n);
    }
    if (u.empty()) {
      out += toString(f);
    } else if (a.form == Form::Left) {
      out += u + "*" + toString(f);
    } else {
      out += toString(f) + "*" + u;
    }
  }
  return out;
}

}  // namespace semicrossed
