#pragma once

#include "padic/number.hpp"

namespace padic {

// Field arithmetic on QQ_p at fixed precision.  Binary operations
// require both operands to share a context instance and throw
// ContextMismatch otherwise.  Sums are computed on exact integer lifts
// (balanced, so x + neg(x) is exactly zero) and then recanonicalized;
// adding numbers of different valuations keeps full unit precision at
// the smaller valuation.

PadicNumber neg(const PadicNumber& x);
PadicNumber add(const PadicNumber& x, const PadicNumber& y);
PadicNumber sub(const PadicNumber& x, const PadicNumber& y);
PadicNumber mul(const PadicNumber& x, const PadicNumber& y);

// Multiplicative inverse; throws DivisionByZero on zero.
PadicNumber inv(const PadicNumber& x);

// div(x, y) computes mul(x, inv(y)); throws DivisionByZero when y = 0.
PadicNumber div(const PadicNumber& x, const PadicNumber& y);

// x^n for any integer n; pow_int(x, 0) = 1 including x = 0, and
// negative n inverts first (so throws DivisionByZero on x = 0).
PadicNumber pow_int(const PadicNumber& x, long n);

// Representational equality (same unit and valuation, or both zero).
// Canonical form makes this value equality at context precision.
bool equal(const PadicNumber& x, const PadicNumber& y);
bool is_zero(const PadicNumber& x);

PadicNumber one(const ContextPtr& ctx);

inline PadicNumber operator-(const PadicNumber& x) { return neg(x); }
inline PadicNumber operator+(const PadicNumber& x, const PadicNumber& y) { return add(x, y); }
inline PadicNumber operator-(const PadicNumber& x, const PadicNumber& y) { return sub(x, y); }
inline PadicNumber operator*(const PadicNumber& x, const PadicNumber& y) { return mul(x, y); }
inline PadicNumber operator/(const PadicNumber& x, const PadicNumber& y) { return div(x, y); }
inline bool operator==(const PadicNumber& x, const PadicNumber& y) { return equal(x, y); }
inline bool operator!=(const PadicNumber& x, const PadicNumber& y) { return !equal(x, y); }

} // namespace padic
