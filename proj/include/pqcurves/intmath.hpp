#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace pqcurves {

// Deterministic Miller-Rabin primality test. The fixed witness set is
// sufficient for every n below 3.3e24, far beyond the desk-scale inputs
// this library handles.
bool is_prime(const mpz_class& n);

// Prime factorization of |n|, smallest prime first, as (prime, exponent)
// pairs. Trial division up to 10^6, then Miller-Rabin plus Pollard-Brent
// rho for any remaining cofactor. |n| must be nonzero.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n);

mpz_class powmod(const mpz_class& base, const mpz_class& exp, const mpz_class& mod);

// x with x^2 == -1 (mod p), for a prime p == 1 (mod 4).
mpz_class sqrt_minus_one_mod(const mpz_class& p);

// Squarefree part of n, sign preserved: the product of primes dividing n
// to an odd power. squarefree_part(-12) == -3.
mpz_class squarefree_part(const mpz_class& n);

}  // namespace pqcurves
