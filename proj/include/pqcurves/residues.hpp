#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace pqcurves {

// Jacobi symbol (a/n) for odd positive n, by the standard binary
// reciprocity algorithm. Throws on even or nonpositive n.
int jacobi(const mpz_class& a, const mpz_class& n);

// Legendre symbol (a/p) for an odd prime p; the fast path is jacobi().
// Throws if p is not an odd prime.
int legendre(const mpz_class& a, const mpz_class& p);

// Euler's criterion a^((p-1)/2) mod p mapped to {-1, 0, 1}. Slower than
// legendre() but an independent route; used as a cross-check oracle.
int euler_criterion(const mpz_class& a, const mpz_class& p);

// Evaluates both sides of quadratic reciprocity for distinct odd primes
// and returns whether the law holds (it always does; this is a self-test).
// Throws on equal or even inputs.
bool reciprocity_check(const mpz_class& p, const mpz_class& q);

// p = 3 (mod 8), q = 1 (mod 8), (p/q) = -1, both prime.
struct PrimePair {
    long p;
    long q;

    bool operator==(const PrimePair&) const = default;
};

// Diagnostic naming the first violated hypothesis, or nullopt when (p, q)
// is a valid PrimePair.
std::optional<std::string> validate_prime_pair(long p, long q);

// All PrimePairs with p, q <= limit, ordered by q then p.
std::vector<PrimePair> find_prime_pairs(long limit);

}  // namespace pqcurves
