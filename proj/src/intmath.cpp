#include "pqcurves/intmath.hpp"

#include <stdexcept>

namespace pqcurves {

mpz_class powmod(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

namespace {

// Witnesses covering every composite below 3.3e24 (Sorenson-Webster).
constexpr unsigned long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin_round(const mpz_class& n, const mpz_class& d, unsigned long s,
                        unsigned long a) {
    mpz_class x = powmod(mpz_class(a), d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    for (unsigned long p : kWitnesses) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned long a : kWitnesses) {
        if (!miller_rabin_round(n, d, s, a)) return false;
    }
    return true;
}

namespace {

constexpr unsigned long kTrialLimit = 1000000;

// Pollard-Brent rho with deterministic parameters; n odd composite, not a
// prime power of a small prime (trial division already ran).
mpz_class pollard_brent(const mpz_class& n) {
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        mpz_class ys = y, q = 1;
        const unsigned long m = 128;
        unsigned long r = 1;
        auto f = [&](const mpz_class& v) -> mpz_class { return (v * v + c) % n; };
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            for (unsigned long k = 0; k < r && d == 1; k += m) {
                ys = y;
                unsigned long lim = std::min(m, static_cast<unsigned long>(r - k));
                for (unsigned long i = 0; i < lim; ++i) {
                    y = f(y);
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack one step at a time
            do {
                ys = f(ys);
                mpz_class diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (d == 1);
        }
        if (d != n) return d;
        // retry with the next polynomial
    }
}

void factor_rec(const mpz_class& n, std::vector<mpz_class>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    mpz_class d = pollard_brent(n);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n) {
    if (n == 0) throw std::invalid_argument("factor_integer: zero input");
    mpz_class m = abs(n);
    std::vector<std::pair<mpz_class, unsigned>> out;
    auto push = [&out](const mpz_class& p, unsigned e) {
        if (e) out.emplace_back(p, e);
    };
    unsigned e2 = 0;
    while (mpz_even_p(m.get_mpz_t())) {
        m /= 2;
        ++e2;
    }
    push(2, e2);
    for (unsigned long d = 3; d <= kTrialLimit; d += 2) {
        if (mpz_class(d) * d > m) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
            ++e;
        }
        push(d, e);
    }
    if (m > 1) {
        std::vector<mpz_class> primes;
        factor_rec(m, primes);
        std::sort(primes.begin(), primes.end());
        for (size_t i = 0; i < primes.size();) {
            size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            push(primes[i], static_cast<unsigned>(j - i));
            i = j;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

mpz_class sqrt_minus_one_mod(const mpz_class& p) {
    if (!is_prime(p) || p % 4 != 1)
        throw std::invalid_argument("sqrt_minus_one_mod: p must be a prime = 1 (mod 4)");
    mpz_class exp = (p - 1) / 4;
    for (mpz_class a = 2;; ++a) {
        // a is a non-residue iff a^((p-1)/2) == -1
        mpz_class half = powmod(a, (p - 1) / 2, p);
        if (half == p - 1) {
            mpz_class x = powmod(a, exp, p);
            return x;
        }
    }
}

mpz_class squarefree_part(const mpz_class& n) {
    if (n == 0) throw std::invalid_argument("squarefree_part: zero input");
    mpz_class s = (n < 0) ? -1 : 1;
    for (const auto& [p, e] : factor_integer(n)) {
        if (e % 2 == 1) s *= p;
    }
    return s;
}

}  // namespace pqcurves
