#pragma once

#include "dua/algebra.hpp"

#include <string>
#include <vector>

namespace dua {

// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' nat]
//   atom   := nat | 'u' | 'd' | 't'NAT | 'H' | 'K' | 'zeta' | '(' expr ')'
// Whitespace is insignificant; products evaluate left to right; '/' needs an
// invertible (coefficient) divisor. Rationals are nat '/' nat.
Element parse_expr(const std::string& text, const SpecPtr& spec);

// Scalar-level parse: zeta allowed, t variables only over function fields.
FieldElem parse_field_elem(const std::string& text, const Field& field);

// Polynomial with scalar coefficients in the given named variables.
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& names,
                     const Field& coeff_field);

// Key/value spec format: n, field.kind (rational | cyclotomic |
// rational_function), field.m, field.arity, alpha, beta, r, s, phi.
SpecPtr spec_load(const std::string& source);
SpecPtr spec_load_file(const std::string& path);

} // namespace dua
