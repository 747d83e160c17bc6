#pragma once

// Text syntax for functions and elements.
//
//   element  := term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := 'U' ['^' int] | function | scalar | '(' element ')'
//   function := ['@' depth ':'] ( 'cos(' k ')' | 'sin(' k ')'
//               | 'trig(' k ':' scalar {',' k ':' scalar} ')'
//               | 'cyl(' word ':' scalar {',' word ':' scalar} ')'
//               | 'tab(' scalar {',' scalar} ')' )
//   scalar   := decimal | p '/' q | '(' re ',' im ')'
//
// Factors multiply in the algebra of the requested form, so `f*U` and
// `U*f` differ as they should.

#include <string>

#include "semicrossed/element.hpp"

namespace semicrossed {

BaseFunction parseBaseFunction(const DynamicalSystem& sys, const std::string& text);
ExtFunction parseExtFunction(const DynamicalSystem& sys, const std::string& text);
Element parseElement(const DynamicalSystem& sys, const std::string& text, Form form = Form::Left);
/// decimal | p/q | (re,im).
cplx parseScalar(const std::string& text);

}  // namespace semicrossed
