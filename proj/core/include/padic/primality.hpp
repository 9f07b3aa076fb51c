#pragma once

#include <gmpxx.h>

namespace padic {

// Primality check backing make_context.  Deterministic for n < 2^64
// (Miller-Rabin over a witness set covering that range); a strong
// probable-prime test for larger n.
bool is_prime(const mpz_class& n);

} // namespace padic
