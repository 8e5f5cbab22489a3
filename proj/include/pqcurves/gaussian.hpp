#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pqcurves {

// Exact element of Z[i]. Components are arbitrary-precision integers, so
// every operation is overflow-free.
class GaussianInt {
public:
    GaussianInt() : re_(0), im_(0) {}
    GaussianInt(long re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)
    GaussianInt(mpz_class re, mpz_class im) : re_(std::move(re)), im_(std::move(im)) {}

    const mpz_class& re() const { return re_; }
    const mpz_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_unit() const { return norm() == 1; }

    mpz_class norm() const { return re_ * re_ + im_ * im_; }
    GaussianInt conj() const { return {re_, -im_}; }

    GaussianInt operator-() const { return {-re_, -im_}; }
    GaussianInt operator+(const GaussianInt& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussianInt operator*(const mpz_class& s) const { return {re_ * s, im_ * s}; }

    bool operator==(const GaussianInt& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianInt& o) const { return !(*this == o); }

    // Lexicographic by (re, im); a container ordering, not an algebraic one.
    bool operator<(const GaussianInt& o) const {
        int c = cmp(re_, o.re_);
        if (c != 0) return c < 0;
        return im_ < o.im_;
    }

    // "a+bi" with no spaces: "3+4i", "1-i", "-2i", "0". A zero imaginary
    // part is dropped entirely, so -1+0i renders as "-1".
    std::string str() const;

    static const std::array<GaussianInt, 4>& units();  // 1, i, -1, -i
    static GaussianInt i() { return {0, 1}; }
    static GaussianInt lambda() { return {1, 1}; }  // the ramified prime 1+i

private:
    mpz_class re_, im_;
};

struct GaussianDivMod {
    GaussianInt quot, rem;
};

// Euclidean division: a = quot*b + rem with norm(rem) <= norm(b)/2.
// Each coordinate of a/b is rounded to the nearest integer, ties toward
// zero. Throws on b == 0.
GaussianDivMod divmod(const GaussianInt& a, const GaussianInt& b);

bool divides(const GaussianInt& d, const GaussianInt& a);

// a/d when d | a exactly; throws otherwise.
GaussianInt exact_div(const GaussianInt& a, const GaussianInt& d);

// The unique associate of g (g times a unit) with re > 0 and im >= 0.
// Throws on zero.
GaussianInt canonical_associate(const GaussianInt& g);

// Canonical-associate gcd. Throws on gcd(0, 0).
GaussianInt gcd(const GaussianInt& a, const GaussianInt& b);

// True iff norm(g) is a rational prime, or g is an associate of a rational
// prime p = 3 (mod 4).
bool is_gaussian_prime(const GaussianInt& g);

// unit * prod(prime^exp) with canonical-associate primes, pairwise
// non-associate, sorted by (norm, re, im).
struct GaussianFactorization {
    GaussianInt unit;
    std::vector<std::pair<GaussianInt, unsigned>> factors;

    GaussianInt value() const;
};

// Complete factorization via rational factorization of norm(g) followed by
// prime splitting: 2 ramifies as -i*(1+i)^2, p = 3 (mod 4) stays inert,
// p = 1 (mod 4) splits using a square root of -1 mod p. Throws on zero.
GaussianFactorization factor(const GaussianInt& g);

// A root r with r*r == g when one exists, normalized to re > 0, or re == 0
// and im >= 0. Decision procedure: norm(g) must be a perfect square in Z,
// then a^2 - b^2 = re(g), 2ab = im(g) is solved exactly.
std::optional<GaussianInt> sqrt_exact(const GaussianInt& g);

// All canonical-associate d with d^2 | g, sorted by (norm, re, im).
// Callers needing unit variants multiply by the four units themselves.
std::vector<GaussianInt> square_divisors(const GaussianInt& g);

// All canonical-associate divisors of g, sorted by (norm, re, im).
std::vector<GaussianInt> divisors(const GaussianInt& g);

}  // namespace pqcurves
