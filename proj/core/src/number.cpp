#include "padic/number.hpp"

#include <stdexcept>
#include <utility>

#include "padic/convert.hpp"

namespace padic {

PadicNumber::PadicNumber(ContextPtr ctx, mpz_class unit, long val)
    : ctx_(std::move(ctx)), unit_(std::move(unit)), val_(val) {}

PadicNumber PadicNumber::zero(const ContextPtr& ctx) {
    if (!ctx) throw std::invalid_argument("null context");
    return PadicNumber(ctx, 0, 0);
}

PadicNumber PadicNumber::from_parts(const ContextPtr& ctx, mpz_class unit, long val) {
    if (!ctx) throw std::invalid_argument("null context");
    if (unit == 0) {
        if (val != 0) throw std::invalid_argument("zero must carry valuation 0");
        return PadicNumber(ctx, 0, 0);
    }
    if (unit < 0 || unit >= ctx->unit_modulus())
        throw std::invalid_argument("unit part out of range [0, p^N)");
    if (mpz_divisible_p(unit.get_mpz_t(), ctx->prime().get_mpz_t()))
        throw std::invalid_argument("unit part divisible by p");
    return PadicNumber(ctx, std::move(unit), val);
}

mpz_class PadicNumber::balanced_unit() const {
    if (is_zero()) return 0;
    // p^N is never exactly 2u (u is coprime to p), so ties cannot occur.
    if (2 * unit_ < ctx_->unit_modulus()) return unit_;
    return unit_ - ctx_->unit_modulus();
}

PadicNumber canonicalize(const mpz_class& u, long v, const ContextPtr& ctx) {
    if (!ctx) throw std::invalid_argument("null context");
    if (u == 0) return PadicNumber::zero(ctx);
    mpz_class unit;
    mp_bitcnt_t shifted = mpz_remove(unit.get_mpz_t(), u.get_mpz_t(),
                                     ctx->prime().get_mpz_t());
    mpz_mod(unit.get_mpz_t(), unit.get_mpz_t(), ctx->unit_modulus().get_mpz_t());
    // unit was coprime to p and p^N is a p-power, so the residue is nonzero
    return PadicNumber(ctx, std::move(unit), v + static_cast<long>(shifted));
}

Valuation valuation(const PadicNumber& x) { return x.valuation(); }

Rational abs_p(const PadicNumber& x) {
    if (x.is_zero()) return Rational(0);
    mpz_class pk;
    unsigned long e = static_cast<unsigned long>(x.val() < 0 ? -x.val() : x.val());
    mpz_pow_ui(pk.get_mpz_t(), x.context()->prime().get_mpz_t(), e);
    if (x.val() > 0) return Rational(mpz_class(1), pk);
    return Rational(pk);
}

Expansion digits(const PadicNumber& x) {
    const ContextPtr& ctx = x.context();
    Expansion e;
    e.prime = ctx->prime();
    e.start = x.val();
    e.digits.reserve(static_cast<std::size_t>(ctx->precision()));
    mpz_class rest = x.unit(), d;
    for (long i = 0; i < ctx->precision(); ++i) {
        mpz_fdiv_qr(rest.get_mpz_t(), d.get_mpz_t(), rest.get_mpz_t(),
                    ctx->prime().get_mpz_t());
        e.digits.push_back(d);
    }
    return e;
}

PadicNumber reassemble(const Expansion& e, const ContextPtr& ctx) {
    if (!ctx) throw std::invalid_argument("null context");
    // Horner from the most significant digit, tracking p^start separately.
    mpz_class acc = 0;
    for (auto it = e.digits.rbegin(); it != e.digits.rend(); ++it)
        acc = acc * ctx->prime() + *it;
    if (e.start >= 0) {
        mpz_class shift;
        mpz_pow_ui(shift.get_mpz_t(), ctx->prime().get_mpz_t(),
                   static_cast<unsigned long>(e.start));
        return from_rational(Rational(acc * shift), ctx);
    }
    mpz_class shift;
    mpz_pow_ui(shift.get_mpz_t(), ctx->prime().get_mpz_t(),
               static_cast<unsigned long>(-e.start));
    return from_rational(Rational(acc, shift), ctx);
}

} // namespace padic
