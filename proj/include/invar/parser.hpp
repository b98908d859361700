#pragma once

#include <map>
#include <string>

#include "invar/gmodule.hpp"

namespace invar {

// Context for parsing polynomial/scalar expressions from catalog data. Tokens:
// integers, zN (the canonical primitive N-th root of unity), named constants,
// variables, named polynomials, + - * / ^ and parentheses. Division and
// negative exponents are only valid on constant subexpressions.
struct ParseContext {
    int nvars = 0;
    std::map<std::string, int> variables;            // name -> variable index
    std::map<std::string, Scalar> constants;         // named scalar constants
    std::map<std::string, SparsePolynomial> named;   // named polynomials
};

SparsePolynomial parse_polynomial(const std::string& text, const ParseContext& ctx);
Scalar parse_scalar(const std::string& text, const ParseContext& ctx);

// group word like "a^3*b*c^-1" or "e"; returns the element index
int parse_group_word(const std::string& text, const FiniteGroup& group);

} // namespace invar
