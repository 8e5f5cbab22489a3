#include "pqcurves/gaussian.hpp"

#include <algorithm>
#include <stdexcept>

#include "pqcurves/intmath.hpp"

namespace pqcurves {

std::string GaussianInt::str() const {
    if (im_ == 0) return re_.get_str();
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = im_.get_str() + "i";
    }
    if (re_ == 0) return imag;
    if (im_ > 0 && imag[0] != '+') imag = "+" + imag;
    return re_.get_str() + imag;
}

const std::array<GaussianInt, 4>& GaussianInt::units() {
    static const std::array<GaussianInt, 4> u = {
        GaussianInt(1), GaussianInt(0, 1), GaussianInt(-1), GaussianInt(0, -1)};
    return u;
}

namespace {

// round(n/d) with d > 0, ties toward zero
mpz_class round_div(const mpz_class& n, const mpz_class& d) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    mpz_class twice_r = 2 * r;
    if (twice_r > d) return q + 1;
    if (twice_r == d && n < 0) return q + 1;
    return q;
}

}  // namespace

GaussianDivMod divmod(const GaussianInt& a, const GaussianInt& b) {
    if (b.is_zero()) throw std::invalid_argument("divmod: division by zero");
    mpz_class nb = b.norm();
    // a * conj(b) = (num_re + num_im*i), then divide by norm(b)
    mpz_class num_re = a.re() * b.re() + a.im() * b.im();
    mpz_class num_im = a.im() * b.re() - a.re() * b.im();
    GaussianInt q(round_div(num_re, nb), round_div(num_im, nb));
    GaussianInt r = a - q * b;
    return {q, r};
}

bool divides(const GaussianInt& d, const GaussianInt& a) {
    if (d.is_zero()) return a.is_zero();
    return divmod(a, d).rem.is_zero();
}

GaussianInt exact_div(const GaussianInt& a, const GaussianInt& d) {
    auto [q, r] = divmod(a, d);
    if (!r.is_zero()) throw std::invalid_argument("exact_div: not divisible");
    return q;
}

GaussianInt canonical_associate(const GaussianInt& g) {
    if (g.is_zero()) throw std::invalid_argument("canonical_associate: zero input");
    GaussianInt c = g;
    for (int k = 0; k < 4; ++k) {
        if (c.re() > 0 && c.im() >= 0) return c;
        c = c * GaussianInt::i();
    }
    throw std::logic_error("canonical_associate: unreachable");
}

GaussianInt gcd(const GaussianInt& a, const GaussianInt& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0,0) undefined");
    GaussianInt x = a, y = b;
    while (!y.is_zero()) {
        GaussianInt r = divmod(x, y).rem;
        x = y;
        y = r;
    }
    return canonical_associate(x);
}

bool is_gaussian_prime(const GaussianInt& g) {
    mpz_class n = g.norm();
    if (n < 2) return false;
    if (is_prime(n)) return true;
    if (g.re() != 0 && g.im() != 0) return false;
    mpz_class p = abs(g.re() != 0 ? g.re() : g.im());
    return p % 4 == 3 && is_prime(p);
}

GaussianInt GaussianFactorization::value() const {
    GaussianInt v = unit;
    for (const auto& [p, e] : factors) {
        for (unsigned k = 0; k < e; ++k) v = v * p;
    }
    return v;
}

GaussianFactorization factor(const GaussianInt& g) {
    if (g.is_zero()) throw std::invalid_argument("factor: zero input");
    GaussianFactorization out;
    GaussianInt rest = g;
    for (const auto& [p, e] : factor_integer(g.norm())) {
        if (p == 2) {
            // 2 ramifies; v_lambda(g) equals v_2(norm(g))
            GaussianInt lam = GaussianInt::lambda();
            for (unsigned k = 0; k < e; ++k) rest = exact_div(rest, lam);
            out.factors.emplace_back(lam, e);
        } else if (p % 4 == 3) {
            GaussianInt pg(p, 0);
            for (unsigned k = 0; k < e / 2; ++k) rest = exact_div(rest, pg);
            out.factors.emplace_back(pg, e / 2);
        } else {
            mpz_class k = sqrt_minus_one_mod(p);
            GaussianInt pi = gcd(GaussianInt(p, 0), GaussianInt(k, 1));
            GaussianInt pibar = canonical_associate(pi.conj());
            unsigned a = 0, b = 0;
            while (divides(pi, rest)) {
                rest = exact_div(rest, pi);
                ++a;
            }
            while (divides(pibar, rest)) {
                rest = exact_div(rest, pibar);
                ++b;
            }
            if (a + b != e) throw std::logic_error("factor: split exponent mismatch");
            if (a) out.factors.emplace_back(pi, a);
            if (b) out.factors.emplace_back(pibar, b);
        }
    }
    if (!rest.is_unit()) throw std::logic_error("factor: non-unit residue");
    out.unit = rest;
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
        mpz_class nx = x.first.norm(), ny = y.first.norm();
        if (nx != ny) return nx < ny;
        return x.first < y.first;
    });
    return out;
}

namespace {

bool perfect_square(const mpz_class& n, mpz_class& root) {
    if (n < 0) return false;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

GaussianInt normalize_root(const GaussianInt& r) {
    if (r.re() > 0 || (r.re() == 0 && r.im() >= 0)) return r;
    return -r;
}

}  // namespace

std::optional<GaussianInt> sqrt_exact(const GaussianInt& g) {
    if (g.is_zero()) return GaussianInt(0);
    mpz_class n_root;
    if (!perfect_square(g.norm(), n_root)) return std::nullopt;
    if (g.im() == 0) {
        mpz_class c;
        if (g.re() > 0) {
            if (!perfect_square(g.re(), c)) return std::nullopt;
            return GaussianInt(c, 0);
        }
        if (!perfect_square(-g.re(), c)) return std::nullopt;
        return GaussianInt(0, c);
    }
    // a^2 = (re + N)/2 and b = im/(2a); both roots of g are +/-(a+bi)
    mpz_class a2 = g.re() + n_root;
    if (mpz_odd_p(a2.get_mpz_t())) return std::nullopt;
    a2 /= 2;
    mpz_class a;
    if (!perfect_square(a2, a) || a == 0) return std::nullopt;
    mpz_class b = g.im() / (2 * a);
    GaussianInt r(a, b);
    if (r * r != g) return std::nullopt;
    return normalize_root(r);
}

namespace {

void enumerate_products(const std::vector<std::pair<GaussianInt, unsigned>>& factors,
                        size_t idx, const GaussianInt& acc, std::vector<GaussianInt>& out) {
    if (idx == factors.size()) {
        out.push_back(acc.is_unit() ? GaussianInt(1) : canonical_associate(acc));
        return;
    }
    GaussianInt cur = acc;
    for (unsigned e = 0; e <= factors[idx].second; ++e) {
        enumerate_products(factors, idx + 1, cur, out);
        cur = cur * factors[idx].first;
    }
}

void sort_by_norm(std::vector<GaussianInt>& v) {
    std::sort(v.begin(), v.end(), [](const GaussianInt& x, const GaussianInt& y) {
        mpz_class nx = x.norm(), ny = y.norm();
        if (nx != ny) return nx < ny;
        return x < y;
    });
}

}  // namespace

std::vector<GaussianInt> square_divisors(const GaussianInt& g) {
    auto f = factor(g);
    for (auto& [p, e] : f.factors) e /= 2;
    std::vector<GaussianInt> out;
    enumerate_products(f.factors, 0, GaussianInt(1), out);
    sort_by_norm(out);
    return out;
}

std::vector<GaussianInt> divisors(const GaussianInt& g) {
    auto f = factor(g);
    std::vector<GaussianInt> out;
    enumerate_products(f.factors, 0, GaussianInt(1), out);
    sort_by_norm(out);
    return out;
}

}  // namespace pqcurves
