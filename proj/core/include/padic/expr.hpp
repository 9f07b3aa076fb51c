#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "padic/context.hpp"
#include "padic/number.hpp"
#include "padic/rational.hpp"
#include "padic/valuation.hpp"

namespace padic {

// A calculator result: a p-adic number, or the non-p-adic outputs of
// val(.) and absval(.).
using EvalValue = std::variant<PadicNumber, Valuation, Rational>;

// Evaluates an arithmetic expression over QQ_p in the given context.
//
// Grammar: integer literals, parentheses, binary + - * /, unary -,
// integer powers x^k (k a possibly negated integer literal; binds
// tighter than unary minus), and the functions sqrt, exp, log, teich,
// val, absval.  val and absval results are terminal: using them as
// operands is a SyntaxError.
//
// Malformed input throws SyntaxError; domain failures propagate from
// the underlying operations (DivisionByZero, NotASquare, ...).
EvalValue evaluate(std::string_view text, const ContextPtr& ctx);

// Renders an evaluation result; numbers use the given mode, val(.)
// prints its exponent or "infinity", absval(.) prints a rational.
std::string format_value(const EvalValue& v, PrintMode mode);

} // namespace padic
