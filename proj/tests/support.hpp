#pragma once

// Shared helpers for the test suites: deterministic random generators
// for rationals and p-adic numbers, and guard-digit comparison.

#include <gmpxx.h>

#include <random>

#include "padic/padic.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline long random_long(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Nonzero integer in [-bound, bound].
inline mpz_class random_nonzero(Rng& rng, long bound) {
    long k;
    do {
        k = random_long(rng, -bound, bound);
    } while (k == 0);
    return mpz_class(k);
}

// Rational with numerator in [-10^6, 10^6] and denominator in [1, 10^6].
inline padic::Rational random_rational(Rng& rng) {
    return padic::Rational(random_nonzero(rng, 1000000),
                           mpz_class(random_long(rng, 1, 1000000)));
}

inline mpq_class to_mpq(const padic::Rational& q) {
    mpq_class r(q.num());
    r /= mpq_class(q.den());
    return r;
}

// Uniform-ish canonical number: N random base-p digits with a nonzero
// low digit, valuation in [-6, 6]; returns zero with probability ~1/16.
inline padic::PadicNumber random_number(Rng& rng, const padic::ContextPtr& ctx) {
    if (random_long(rng, 0, 15) == 0) return padic::PadicNumber::zero(ctx);
    const mpz_class& p = ctx->prime();
    // digits drawn via a 64-bit residue per digit; exact uniformity is
    // irrelevant here
    unsigned long pw = p.fits_ulong_p() ? p.get_ui() : 0;
    mpz_class u = 0, pk = 1;
    for (long i = 0; i < ctx->precision(); ++i) {
        unsigned long digit;
        if (pw)
            digit = static_cast<unsigned long>(
                random_long(rng, i == 0 ? 1 : 0, static_cast<long>(pw) - 1));
        else
            digit = static_cast<unsigned long>(random_long(rng, i == 0 ? 1 : 0, 1000000));
        u += digit * pk;
        pk *= p;
    }
    return padic::canonicalize(u, random_long(rng, -6, 6), ctx);
}

// Point in the convergence domain of exp: valuation at least 1 (odd p)
// or 2 (p = 2), at most three above the minimum.
inline padic::PadicNumber random_exp_point(Rng& rng, const padic::ContextPtr& ctx) {
    long vmin = ctx->prime() == 2 ? 2 : 1;
    return padic::canonicalize(random_nonzero(rng, 1000000),
                               random_long(rng, vmin, vmin + 3), ctx);
}

// Point in the convergence domain of log: 1 + (exp-domain point).
inline padic::PadicNumber random_log_point(Rng& rng, const padic::ContextPtr& ctx) {
    return padic::add(padic::one(ctx), random_exp_point(rng, ctx));
}

// True when x and y agree as values modulo p^(N - drop), N the context
// precision.  Identities that pass through a unit-valued intermediate
// (exp outputs, products near 1) are determined modulo p^N and no
// further; drop = 2 leaves two digits of slack below that boundary.
inline bool equal_discarding(const padic::PadicNumber& x, const padic::PadicNumber& y,
                             long drop) {
    padic::PadicNumber d = padic::sub(x, y);
    if (d.is_zero()) return true;
    return d.val() >= x.context()->precision() - drop;
}

} // namespace testsupport
