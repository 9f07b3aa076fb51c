#pragma once

#include <optional>

#include "padic/number.hpp"

namespace padic {

// Analytic functions on QQ_p.  Series are evaluated as exact rational
// partial sums out to provably negligible tails, then embedded at
// context precision, so results are exact truncations of the limit.

// Square root.  Defined for zero and for x with even valuation whose
// unit part is a square modulo p (for p = 2: modulo 2^min(3,N)).  Of
// all square roots at context precision, returns the one with the
// smallest unit lift.  Throws NotASquare otherwise, with the reason
// (odd valuation or non-residue unit).
PadicNumber sqrt(const PadicNumber& x);

// As sqrt, but returns nullopt instead of throwing NotASquare.
std::optional<PadicNumber> try_sqrt(const PadicNumber& x);

// exp_p, the sum of x^n / n!.  Converges iff nu(x) >= 1 (p odd) or
// nu(x) >= 2 (p = 2); throws OutsideDomain elsewhere.  The result is a
// unit congruent to 1 mod p.
PadicNumber exp(const PadicNumber& x);

// log_p, the sum of -(-z)^n / n for z = x - 1.  Requires nu(x-1) >= 1
// (p odd) or nu(x-1) >= 2 (p = 2); throws OutsideDomain elsewhere.
// log(1) = 0; otherwise nu(log x) = nu(x-1).
PadicNumber log(const PadicNumber& x);

// The Teichmuller lift: the unique (p-1)-th root of unity congruent to
// x modulo p, i.e. the fixed point of t -> t^p near x.  Requires
// nu(x) = 0; throws OutsideDomain elsewhere (including zero).
PadicNumber teichmuller(const PadicNumber& x);

} // namespace padic
