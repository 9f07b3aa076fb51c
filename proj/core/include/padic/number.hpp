#pragma once

#include <gmpxx.h>

#include <vector>

#include "padic/context.hpp"
#include "padic/rational.hpp"
#include "padic/valuation.hpp"

namespace padic {

// The base-p digit expansion of a number: digits[i] is the coefficient
// of p^(start + i).  A nonzero number at precision N has exactly N
// digits, the first of which is nonzero; zero has N zero digits.
struct Expansion {
    mpz_class prime;
    long start;
    std::vector<mpz_class> digits;
};

// An element of QQ_p at the fixed precision of its context, stored in
// canonical form u * p^v with p coprime to u and 0 < u < p^N.  Zero is
// stored as (u, v) = (0, 0).  The value is determined modulo p^(v+N).
//
// Instances are created by canonicalize, by the conversion functions,
// or by the validating from_parts factory; the representation is
// canonical by construction.
class PadicNumber {
public:
    static PadicNumber zero(const ContextPtr& ctx);

    // Builds a number from an already canonical (unit, val) pair.
    // Validation failures throw std::invalid_argument.
    static PadicNumber from_parts(const ContextPtr& ctx, mpz_class unit, long val);

    const ContextPtr& context() const { return ctx_; }

    // Canonical unit part, 0 for zero.
    const mpz_class& unit() const { return unit_; }

    // Raw valuation exponent; 0 for zero (whose true valuation is
    // infinite, see valuation()).
    long val() const { return val_; }

    bool is_zero() const { return unit_ == 0; }

    Valuation valuation() const {
        return is_zero() ? Valuation::infinite() : Valuation::finite(val_);
    }

    // The representative of the unit part with smallest absolute value,
    // in (-p^N/2, p^N/2); 0 for zero.  This is the lift under which
    // exact integer arithmetic on values respects negation.
    mpz_class balanced_unit() const;

private:
    PadicNumber(ContextPtr ctx, mpz_class unit, long val);
    friend PadicNumber canonicalize(const mpz_class&, long, const ContextPtr&);

    ContextPtr ctx_;
    mpz_class unit_;
    long val_;
};

// Reduces an integer pair (u, v) meaning u * p^v to canonical form:
// factors every power of p out of u into v, then reduces u modulo p^N.
// u may be any integer, including 0, negatives, and multiples of p.
// Idempotent on canonical inputs.
PadicNumber canonicalize(const mpz_class& u, long v, const ContextPtr& ctx);

// nu_p(x); infinite for zero.
Valuation valuation(const PadicNumber& x);

// |x|_p = p^(-nu(x)) as an exact rational; 0 for zero.
Rational abs_p(const PadicNumber& x);

// Base-p digits of the unit part, least significant first, starting at
// exponent val().  Always exactly N digits (zero padded at the top).
Expansion digits(const PadicNumber& x);

// Rebuilds the number sum(digits[i] * p^(start+i)) in the given
// context.  Inverse of digits for numbers of that context.
PadicNumber reassemble(const Expansion& e, const ContextPtr& ctx);

} // namespace padic
