#pragma once

#include <string>
#include <string_view>

#include "padic/number.hpp"

namespace padic {

// Conversions between QQ_p and exact integers/rationals, and the three
// text formats.

PadicNumber from_integer(const mpz_class& n, const ContextPtr& ctx);

// Embeds num/den by stripping the powers of p from both parts and
// inverting the residual denominator modulo p^N.
PadicNumber from_rational(const Rational& q, const ContextPtr& ctx);

// The canonical nonnegative integer lift u * p^v in [0, p^(v+N)).
// Throws NegativeValuation when v < 0; returns 0 for zero.
mpz_class to_integer(const PadicNumber& x);

// The exact rational u * p^v of the canonical representation (u over
// p^-v in lowest terms when v < 0); 0/1 for zero.  from_rational of the
// result recovers x exactly; the other direction, to_rational after
// from_rational, is the identity on rationals of the form u * p^v with
// 0 <= u < p^N.
Rational to_rational(const PadicNumber& x);

// Renders x in the requested mode (or the context's default mode).
//   Series:  nonzero digits as "d", "d*p", "d*p^k" joined by " + ";
//            zero renders as "0"
//   Terse:   decimal string of to_rational(x)
//   ValUnit: "u" when v = 0, otherwise "u*p^v"; zero renders as "0"
std::string format(const PadicNumber& x, PrintMode mode);
std::string format(const PadicNumber& x);

// Parses any of the three formats: a series of "+"-joined terms
// (integer, int*base, int*base^exp with the context prime as base), a
// single fraction "a/b", or a plain integer.  Whitespace insensitive.
// Throws SyntaxError with the byte position of the offending token.
PadicNumber parse(std::string_view text, const ContextPtr& ctx);

} // namespace padic
