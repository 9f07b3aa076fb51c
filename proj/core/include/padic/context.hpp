#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>

#include "padic/error.hpp"

namespace padic {

// How a number renders by default.
//   Series:  digit expansion, e.g. "3 + 2*5^2"
//   Terse:   decimal of the exact rational value, e.g. "53"
//   ValUnit: unit and valuation, e.g. "2*5^2"
enum class PrintMode { Series, Terse, ValUnit };

PrintMode print_mode_from_string(std::string_view name);
std::string to_string(PrintMode mode);

// Shared state of a fixed-precision QQ_p: the prime p, the number N of
// stored unit digits, and a default print mode.  Contexts are immutable
// and interned: make_context returns the same instance for equal
// (p, N, mode) keys, so numbers agree on a context iff they hold the
// same instance.
class PadicContext {
public:
    const mpz_class& prime() const { return prime_; }
    long precision() const { return precision_; }
    PrintMode print_mode() const { return print_mode_; }

    // p^N, the modulus of unit parts.
    const mpz_class& unit_modulus() const { return unit_modulus_; }

    PadicContext(const PadicContext&) = delete;
    PadicContext& operator=(const PadicContext&) = delete;

private:
    PadicContext(mpz_class p, long n, PrintMode mode);
    friend std::shared_ptr<const PadicContext>
    make_context(const mpz_class&, long, PrintMode);

    mpz_class prime_;
    long precision_;
    PrintMode print_mode_;
    mpz_class unit_modulus_;
};

using ContextPtr = std::shared_ptr<const PadicContext>;

// Returns the unique context for (p, precision, mode).  Throws
// PrimalityError when p fails a primality check (deterministic for
// p < 2^64) and PrecisionError when precision < 1.  Thread safe.
ContextPtr make_context(const mpz_class& p, long precision = 20,
                        PrintMode mode = PrintMode::Series);

} // namespace padic
