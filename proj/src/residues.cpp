#include "pqcurves/residues.hpp"

#include <stdexcept>

#include "pqcurves/intmath.hpp"

namespace pqcurves {

int jacobi(const mpz_class& a, const mpz_class& n) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t()))
        throw std::invalid_argument("jacobi: modulus must be odd and positive");
    mpz_class x = a % n, y = n;
    if (x < 0) x += y;
    int result = 1;
    while (x != 0) {
        while (mpz_even_p(x.get_mpz_t())) {
            x /= 2;
            unsigned long y8 = mpz_fdiv_ui(y.get_mpz_t(), 8);
            if (y8 == 3 || y8 == 5) result = -result;
        }
        std::swap(x, y);
        if (mpz_fdiv_ui(x.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(y.get_mpz_t(), 4) == 3)
            result = -result;
        x %= y;
    }
    return y == 1 ? result : 0;
}

int legendre(const mpz_class& a, const mpz_class& p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("legendre: modulus must be an odd prime");
    return jacobi(a, p);
}

int euler_criterion(const mpz_class& a, const mpz_class& p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("euler_criterion: modulus must be an odd prime");
    mpz_class r = powmod(((a % p) + p) % p, (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

bool reciprocity_check(const mpz_class& p, const mpz_class& q) {
    if (p == q) throw std::invalid_argument("reciprocity_check: equal inputs");
    if (mpz_even_p(p.get_mpz_t()) || mpz_even_p(q.get_mpz_t()))
        throw std::invalid_argument("reciprocity_check: even input");
    int lhs = legendre(p, q) * legendre(q, p);
    int rhs = ((p - 1) / 2 * ((q - 1) / 2)) % 2 == 0 ? 1 : -1;
    return lhs == rhs;
}

std::optional<std::string> validate_prime_pair(long p, long q) {
    if (!is_prime(mpz_class(p))) return "p = " + std::to_string(p) + " is not prime";
    if (!is_prime(mpz_class(q))) return "q = " + std::to_string(q) + " is not prime";
    if (p % 8 != 3)
        return "p = " + std::to_string(p) + " violates p = 3 (mod 8)";
    if (q % 8 != 1)
        return "q = " + std::to_string(q) + " violates q = 1 (mod 8)";
    if (legendre(p, q) != -1)
        return "(p/q) = (" + std::to_string(p) + "/" + std::to_string(q) +
               ") = " + std::to_string(legendre(p, q)) + " violates (p/q) = -1";
    return std::nullopt;
}

std::vector<PrimePair> find_prime_pairs(long limit) {
    std::vector<PrimePair> out;
    if (limit < 17) return out;
    std::vector<bool> sieve(limit + 1, true);
    sieve[0] = sieve[1] = false;
    for (long i = 2; i * i <= limit; ++i)
        if (sieve[i])
            for (long j = i * i; j <= limit; j += i) sieve[j] = false;
    std::vector<long> ps, qs;
    for (long n = 2; n <= limit; ++n) {
        if (!sieve[n]) continue;
        if (n % 8 == 3) ps.push_back(n);
        if (n % 8 == 1) qs.push_back(n);
    }
    for (long q : qs)
        for (long p : ps)
            if (legendre(p, q) == -1) out.push_back({p, q});
    return out;
}

}  // namespace pqcurves
