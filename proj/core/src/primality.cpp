#include "padic/primality.hpp"

#include <cstdint>

namespace padic {

namespace {

// Strong probable-prime test to base a for odd n = d * 2^s + 1, d odd.
bool strong_probable_prime(const mpz_class& n, const mpz_class& a,
                           const mpz_class& d, unsigned long s) {
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    mpz_class n1 = n - 1;
    if (x == 1 || x == n1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n1) return true;
        if (x == 1) return false;
    }
    return false;
}

} // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    // This base set is a deterministic witness set for every n < 2^64.
    static const std::uint64_t bases[] = {2,  3,  5,  7,  11, 13,
                                          17, 19, 23, 29, 31, 37};
    for (std::uint64_t b : bases) {
        if (n == b) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        mpz_class d = n - 1;
        unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
        mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
        for (std::uint64_t b : bases)
            if (!strong_probable_prime(n, mpz_class(b), d, s)) return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

} // namespace padic
