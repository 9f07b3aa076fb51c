#include "padic/analytic.hpp"

#include <algorithm>
#include <utility>

#include "padic/arith.hpp"
#include "padic/convert.hpp"
#include "padic/error.hpp"

namespace padic {

namespace {

mpz_class pow_p(const ContextPtr& ctx, long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), ctx->prime().get_mpz_t(),
               static_cast<unsigned long>(e));
    return r;
}

// Any square root of a modulo an odd prime p, or nullopt when a is a
// non-residue.  a must be in [1, p).
std::optional<mpz_class> sqrt_mod_prime(const mpz_class& a, const mpz_class& p) {
    mpz_class e = (p - 1) / 2, t;
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if (t != 1) return std::nullopt; // Euler's criterion
    if (mpz_tstbit(p.get_mpz_t(), 1)) {
        // p = 3 mod 4: a^((p+1)/4) squares to a^((p+1)/2) = a
        mpz_class r;
        e = (p + 1) / 4;
        mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    }
    // Tonelli-Shanks for p = 1 mod 4.  Write p - 1 = q * 2^s, q odd.
    mpz_class q = p - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
    // Find a quadratic non-residue z.
    mpz_class z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    mpz_class c, r, t2, b;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    unsigned long m = s;
    while (t != 1) {
        // Find least i with t^(2^i) = 1; 0 < i < m.
        unsigned long i = 0;
        t2 = t;
        while (t2 != 1) {
            t2 = (t2 * t2) % p;
            ++i;
        }
        b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = (b * b) % p;
        m = i;
        c = (b * b) % p;
        r = (r * b) % p;
        t = (t * c) % p;
    }
    return r;
}

// Smallest square root of the unit u modulo p^N, p odd, or nullopt.
std::optional<mpz_class> unit_sqrt_odd(const mpz_class& u, const ContextPtr& ctx) {
    const mpz_class& p = ctx->prime();
    const long N = ctx->precision();
    auto r0 = sqrt_mod_prime(u % p, p);
    if (!r0) return std::nullopt;
    // Newton lift r -> r - (r^2 - u) / 2r, doubling the modulus each step.
    mpz_class r = *r0;
    long a = 1;
    while (a < N) {
        long a2 = std::min(2 * a, N);
        mpz_class modulus = pow_p(ctx, a2);
        mpz_class d = 2 * r, w;
        mpz_invert(w.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
        r = r - (r * r - u) * w;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
        a = a2;
    }
    return std::min(r, mpz_class(ctx->unit_modulus() - r));
}

// Smallest square root of the odd unit u modulo 2^N, or nullopt.
// Solvable iff u = 1 mod 2^min(3,N); for N >= 3 there are four roots
// {r, -r, r + 2^(N-1), -r + 2^(N-1)}.
std::optional<mpz_class> unit_sqrt_two(const mpz_class& u, const ContextPtr& ctx) {
    const long N = ctx->precision();
    long k = std::min(3L, N);
    mpz_class rem;
    mpz_fdiv_r_2exp(rem.get_mpz_t(), u.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    if (rem != 1) return std::nullopt;
    if (N <= 3) return mpz_class(1);
    // Lift bit by bit: r correct mod 2^(k+1) after step k.
    mpz_class r = 1, diff;
    for (long i = 3; i < N; ++i) {
        diff = r * r - u;
        mpz_fdiv_r_2exp(diff.get_mpz_t(), diff.get_mpz_t(),
                        static_cast<mp_bitcnt_t>(i + 1));
        if (diff != 0) mpz_setbit(r.get_mpz_t(), static_cast<mp_bitcnt_t>(i - 1));
    }
    // Reduce mod 2^(N-1), then the minimum over all four roots.
    mpz_class half;
    mpz_fdiv_r_2exp(half.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(N - 1));
    mpz_class mirrored;
    mpz_setbit(mirrored.get_mpz_t(), static_cast<mp_bitcnt_t>(N - 1));
    mirrored -= half;
    return std::min(half, mirrored);
}

} // namespace

std::optional<PadicNumber> try_sqrt(const PadicNumber& x) {
    if (x.is_zero()) return x;
    if (x.val() % 2 != 0) return std::nullopt;
    const ContextPtr& ctx = x.context();
    std::optional<mpz_class> r = ctx->prime() == 2 ? unit_sqrt_two(x.unit(), ctx)
                                                   : unit_sqrt_odd(x.unit(), ctx);
    if (!r) return std::nullopt;
    return PadicNumber::from_parts(ctx, std::move(*r), x.val() / 2);
}

PadicNumber sqrt(const PadicNumber& x) {
    if (!x.is_zero() && x.val() % 2 != 0)
        throw NotASquare("valuation " + std::to_string(x.val()) + " is odd",
                         NotASquare::Reason::OddValuation);
    auto r = try_sqrt(x);
    if (!r)
        throw NotASquare("unit part is not a square modulo p",
                         NotASquare::Reason::NonResidueUnit);
    return *r;
}

namespace {

// Valuations below this bound diverge: exp converges on nu >= 1 for
// odd p and nu >= 2 for p = 2 (where nu(n!) eats a full digit per n).
long exp_min_valuation(const mpz_class& p) { return p == 2 ? 2 : 1; }

} // namespace

PadicNumber exp(const PadicNumber& x) {
    const ContextPtr& ctx = x.context();
    if (x.is_zero()) return one(ctx);
    const mpz_class& p = ctx->prime();
    long v = x.val();
    if (v < exp_min_valuation(p))
        throw OutsideDomain("exp requires valuation >= " +
                            std::to_string(exp_min_valuation(p)) + ", got " +
                            std::to_string(v));
    // Integer lift of x.  The lift choice shifts the result by a factor
    // exp(k * p^(v+N)) = 1 mod p^N, invisible at context precision.
    mpz_class lift = x.balanced_unit() * pow_p(ctx, v);
    // Term n has valuation >= n*v - (n-1)/(p-1) since nu(n!) <= (n-1)/(p-1).
    // exp(x) is a unit, so only the value mod p^N matters: sum while the
    // bound is at most N, drop the tail (valuation > N).
    const long N = ctx->precision();
    mpq_class sum = 1, term = 1;
    for (long n = 1;; ++n) {
        // bound * (p-1), kept in integers
        mpz_class scaled = mpz_class(n) * v * (p - 1) - (n - 1);
        if (scaled > mpz_class(N) * (p - 1)) break;
        term *= lift;
        term /= n;
        sum += term;
    }
    return from_rational(Rational(sum.get_num(), sum.get_den()), ctx);
}

PadicNumber log(const PadicNumber& x) {
    const ContextPtr& ctx = x.context();
    const mpz_class& p = ctx->prime();
    PadicNumber z = sub(x, one(ctx));
    if (z.is_zero()) return z;
    long vz = z.val();
    if (vz < exp_min_valuation(p))
        throw OutsideDomain("log requires nu(x - 1) >= " +
                            std::to_string(exp_min_valuation(p)) + ", got " +
                            std::to_string(vz));
    mpz_class lift = z.balanced_unit() * pow_p(ctx, vz);
    // log(1+z) = sum (-1)^(n+1) z^n / n; term n has valuation
    // >= n*vz - floor(log_p n).  The result has valuation vz, so its
    // unit is determined by the value mod p^(vz + N).
    const long target = vz + ctx->precision();
    mpq_class sum = 0;
    mpz_class zpow = 1;
    mpz_class pk = 1; // p^flog tracks floor(log_p n)
    long flog = 0;
    for (long n = 1;; ++n) {
        if (pk * p <= n) {
            pk *= p;
            ++flog;
        }
        if (n * vz - flog > target) break;
        zpow *= lift;
        mpq_class term(zpow);
        term /= n;
        if (n % 2 == 0) sum -= term;
        else sum += term;
    }
    return from_rational(Rational(sum.get_num(), sum.get_den()), ctx);
}

PadicNumber teichmuller(const PadicNumber& x) {
    const ContextPtr& ctx = x.context();
    if (x.is_zero() || x.val() != 0)
        throw OutsideDomain("teichmuller lift requires a unit (valuation 0)");
    const mpz_class& p = ctx->prime();
    const long N = ctx->precision();
    // Newton for f(t) = t^p - t from t = x mod p; f'(t) = -1 mod p, so
    // every step divides exactly and the modulus doubles.
    mpz_class t = x.unit() % p;
    long a = 1;
    while (a < N) {
        long a2 = std::min(2 * a, N);
        mpz_class modulus = pow_p(ctx, a2);
        mpz_class tp, d, w;
        mpz_powm(tp.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), modulus.get_mpz_t());
        mpz_class pm1 = p - 1;
        mpz_powm(d.get_mpz_t(), t.get_mpz_t(), pm1.get_mpz_t(), modulus.get_mpz_t());
        d = d * p - 1;
        mpz_invert(w.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
        t = t - (tp - t) * w;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), modulus.get_mpz_t());
        a = a2;
    }
    return PadicNumber::from_parts(ctx, std::move(t), 0);
}

} // namespace padic
