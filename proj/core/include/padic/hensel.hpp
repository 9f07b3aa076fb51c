#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "padic/arith.hpp"
#include "padic/number.hpp"

namespace padic {

// A polynomial with integer coefficients, stored dense by degree with
// no trailing zero coefficients.  The zero polynomial has an empty
// coefficient vector and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    // Parses e.g. "x^3 - 2", "2*x^5-x^2+7", "-x + 3", "5".  Exponents
    // are nonnegative decimal integers; coefficients are optionally
    // signed.  Throws SyntaxError on malformed input.
    static IntPolynomial parse(std::string_view text);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of x^k; 0 beyond the degree.
    const mpz_class& coeff(long k) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    mpz_class eval_integer(const mpz_class& x) const;
    mpz_class eval_mod(const mpz_class& x, const mpz_class& m) const;

    std::string str() const;

private:
    std::vector<mpz_class> coeffs_;
};

// Evaluates f at a p-adic point by Horner's rule in the point's context.
PadicNumber poly_eval(const IntPolynomial& f, const PadicNumber& x);

IntPolynomial poly_derivative(const IntPolynomial& f);

// Result of a Hensel lift.  trace holds every iterate starting with the
// embedded seed; the final two entries are equal (the fixed point).
struct HenselResult {
    PadicNumber root;
    long iterations;
    std::vector<PadicNumber> trace;
};

// Lifts a simple root of f modulo p to a root at context precision by
// Newton's iteration a -> a - f(a)/f'(a), run to an exact fixed point.
// Requires f(seed) = 0 mod p (else SeedNotRoot) and f'(seed) != 0 mod p
// (else SingularSeed).  The iteration doubles correct digits per step,
// so the fixed point arrives within ceil(log2 N) + 2 steps; exceeding
// that budget throws NoConvergence.
HenselResult hensel_lift(const IntPolynomial& f, const mpz_class& seed,
                         const ContextPtr& ctx);

} // namespace padic
