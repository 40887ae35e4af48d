#pragma once

// Text front end for elements of H(m,1,n).
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'|'/'] factor)*     juxtaposition multiplies
//   factor  := primary ('^' ['-'] INT)*
//   primary := INT | q | v<k> | alpha | beta | gamma | delta
//            | t | s<k> | '(' expr ')' | '[' expr? ']'
//
// Letters tokenize one at a time, so "ts1" reads as t s1. The divisor of '/'
// must be a scalar. Negative powers apply to scalars, s<k> and (when
// allowed) t. Element::to_string output parses back to the same element.

#include <string_view>

#include "hecke/algebra.hpp"

namespace hecke {

struct ExpressionOptions {
  // t^-1 needs every v_j to be invertible, which holds for indeterminates
  // but not for every specialization.
  bool allow_tau_inverse = false;
};

// Throws Parse with the byte offset for syntax errors and OutOfRange for
// s<k>, v<k> or t outside the algebra.
Element parse_expression(const Algebra& h, std::string_view text, const ExpressionOptions& options = {});

}  // namespace hecke
