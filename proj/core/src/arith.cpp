#include "padic/arith.hpp"

#include <algorithm>
#include <stdexcept>

#include "padic/error.hpp"

namespace padic {

namespace {

void require_same_context(const PadicNumber& x, const PadicNumber& y) {
    if (x.context().get() != y.context().get())
        throw ContextMismatch("operands belong to different contexts");
}

long checked_add(long a, long b) {
    long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("valuation overflow");
    return r;
}

long checked_mul(long a, long b) {
    long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("valuation overflow");
    return r;
}

mpz_class pow_p(const ContextPtr& ctx, long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), ctx->prime().get_mpz_t(),
               static_cast<unsigned long>(e));
    return r;
}

} // namespace

PadicNumber one(const ContextPtr& ctx) {
    return PadicNumber::from_parts(ctx, 1, 0);
}

PadicNumber neg(const PadicNumber& x) {
    if (x.is_zero()) return x;
    return PadicNumber::from_parts(x.context(), x.context()->unit_modulus() - x.unit(),
                                   x.val());
}

PadicNumber add(const PadicNumber& x, const PadicNumber& y) {
    require_same_context(x, y);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    // Exact integer sum of the balanced lifts, relative to p^m.
    long m = std::min(x.val(), y.val());
    mpz_class s = x.balanced_unit() * pow_p(x.context(), x.val() - m) +
                  y.balanced_unit() * pow_p(x.context(), y.val() - m);
    return canonicalize(s, m, x.context());
}

PadicNumber sub(const PadicNumber& x, const PadicNumber& y) {
    require_same_context(x, y);
    if (y.is_zero()) return x;
    if (x.is_zero()) return neg(y);
    long m = std::min(x.val(), y.val());
    mpz_class s = x.balanced_unit() * pow_p(x.context(), x.val() - m) -
                  y.balanced_unit() * pow_p(x.context(), y.val() - m);
    return canonicalize(s, m, x.context());
}

PadicNumber mul(const PadicNumber& x, const PadicNumber& y) {
    require_same_context(x, y);
    if (x.is_zero() || y.is_zero()) return PadicNumber::zero(x.context());
    mpz_class u = x.unit() * y.unit();
    mpz_mod(u.get_mpz_t(), u.get_mpz_t(), x.context()->unit_modulus().get_mpz_t());
    return PadicNumber::from_parts(x.context(), std::move(u),
                                   checked_add(x.val(), y.val()));
}

PadicNumber inv(const PadicNumber& x) {
    if (x.is_zero()) throw DivisionByZero("inverse of zero");
    mpz_class u;
    // u is coprime to the p-power modulus, so the inverse exists.
    mpz_invert(u.get_mpz_t(), x.unit().get_mpz_t(),
               x.context()->unit_modulus().get_mpz_t());
    return PadicNumber::from_parts(x.context(), std::move(u), -x.val());
}

PadicNumber div(const PadicNumber& x, const PadicNumber& y) {
    require_same_context(x, y);
    return mul(x, inv(y));
}

PadicNumber pow_int(const PadicNumber& x, long n) {
    if (n == 0) return one(x.context());
    if (x.is_zero()) {
        if (n < 0) throw DivisionByZero("negative power of zero");
        return x;
    }
    const mpz_class& modulus = x.context()->unit_modulus();
    mpz_class base = x.unit();
    if (n < 0) mpz_invert(base.get_mpz_t(), base.get_mpz_t(), modulus.get_mpz_t());
    // |n| without overflow on LONG_MIN
    unsigned long a =
        n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    mpz_class u;
    mpz_class e(a);
    mpz_powm(u.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
    return PadicNumber::from_parts(x.context(), std::move(u), checked_mul(x.val(), n));
}

bool equal(const PadicNumber& x, const PadicNumber& y) {
    require_same_context(x, y);
    if (x.is_zero() || y.is_zero()) return x.is_zero() == y.is_zero();
    return x.val() == y.val() && x.unit() == y.unit();
}

bool is_zero(const PadicNumber& x) { return x.is_zero(); }

} // namespace padic
