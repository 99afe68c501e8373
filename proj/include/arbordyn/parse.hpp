#pragma once

#include <string>

#include "arbordyn/intpoly.hpp"
#include "arbordyn/orbit.hpp"
#include "arbordyn/poly.hpp"

namespace arbordyn {

/// Polynomial grammar: integer literals, variable t, operators + - * ^ and
/// parentheses, e.g. "t^4+2*t^3+t^2+t". Throws ParseError with a position.
IntPoly parse_intpoly(const std::string& text);
Poly parse_poly(const std::string& text, const FieldDesc& fd);

/// Map grammar: any expression in x and t that expands to a monic quadratic
/// in x, e.g. "x^2+t", "(x-t)^2+t+1", "(x-(t^2))^2-(t^3+1)". Over Z[t] the
/// linear coefficient must be even (gamma = -b/2 must stay integral).
QuadMap parse_map(const std::string& text);
QuadMap parse_map(const std::string& text, const FieldDesc& fd);

}  // namespace arbordyn
