#pragma once

#include <string>

namespace latsqm {

/// Evaluates a rational expression in one variable `a`: numbers, + - * /,
/// integer powers with ^, parentheses and unary sign.  Used by the model
/// configuration format for parameter-dependent coefficients and rest
/// functions.  Throws BadConfig on malformed input.
double eval_rational_expr(const std::string& expr, double a);

} // namespace latsqm
