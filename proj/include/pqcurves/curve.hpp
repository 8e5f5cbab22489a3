#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "pqcurves/gaussian.hpp"

namespace pqcurves {

// Exact element of Q(i): a pair of canonical-form rationals. mpq_class
// keeps components in lowest terms with positive denominators.
class QiRational {
public:
    QiRational() : re_(0), im_(0) {}
    QiRational(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
    QiRational(const mpz_class& v) : re_(v), im_(0) {}
    QiRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    QiRational(const GaussianInt& g) : re_(g.re()), im_(g.im()) {}

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }

    QiRational operator-() const { return {-re_, -im_}; }
    QiRational operator+(const QiRational& o) const { return {re_ + o.re_, im_ + o.im_}; }
    QiRational operator-(const QiRational& o) const { return {re_ - o.re_, im_ - o.im_}; }
    QiRational operator*(const QiRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    QiRational inverse() const;
    QiRational operator/(const QiRational& o) const { return *this * o.inverse(); }

    bool operator==(const QiRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const QiRational& o) const { return !(*this == o); }
    bool operator<(const QiRational& o) const {  // container ordering only
        int c = cmp(re_, o.re_);
        if (c != 0) return c < 0;
        return im_ < o.im_;
    }

    // True iff both components are integers; then the Z[i] value.
    bool is_gaussian_integer() const;
    GaussianInt to_gaussian() const;

    std::string str() const;

private:
    mpq_class re_, im_;
};

// y^2 = x^3 + A*x^2 + B*x with integer A, B. Nonsingular by construction:
// B != 0 and A^2 - 4B != 0.
struct CurveAB {
    mpz_class A;
    mpz_class B;

    CurveAB(mpz_class a, mpz_class b);

    bool operator==(const CurveAB&) const = default;
};

class CurvePoint {
public:
    static CurvePoint infinity() { return CurvePoint(); }
    CurvePoint(QiRational x, QiRational y)
        : infinite_(false), x_(std::move(x)), y_(std::move(y)) {}

    bool is_infinity() const { return infinite_; }
    const QiRational& x() const;
    const QiRational& y() const;

    bool operator==(const CurvePoint& o) const;
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }
    bool operator<(const CurvePoint& o) const;  // container ordering, O first

    std::string str() const;  // "O" or "(x,y)"

private:
    CurvePoint() : infinite_(true) {}
    bool infinite_;
    QiRational x_, y_;
};

bool is_on_curve(const CurveAB& c, const CurvePoint& P);

// Chord-tangent group law; Infinity is the identity. Throws on off-curve
// input.
CurvePoint add(const CurveAB& c, const CurvePoint& P, const CurvePoint& Q);

CurvePoint negate(const CurveAB& c, const CurvePoint& P);

// n-fold sum by double-and-add; negative n through negate.
CurvePoint mul_scalar(const CurveAB& c, long n, const CurvePoint& P);

// Smallest n <= bound with n*P = Infinity, or nullopt. Over Q(i) every
// torsion element has order at most 12, so the default bound is
// conclusive.
std::optional<int> order_if_torsion(const CurveAB& c, const CurvePoint& P, int bound = 16);

namespace curve_detail {

// y^2 = x^3 + a2*x^2 + a4*x + a6 over Q(i); the shared engine behind both
// the A,B curves above and the short-form torsion curves.
struct CubicCoeffs {
    QiRational a2, a4, a6;
};

bool on_curve(const CubicCoeffs& c, const CurvePoint& P);
CurvePoint add_points(const CubicCoeffs& c, const CurvePoint& P, const CurvePoint& Q);
CurvePoint negate_point(const CurvePoint& P);
CurvePoint scalar_mul(const CubicCoeffs& c, long n, const CurvePoint& P);
std::optional<int> point_order(const CubicCoeffs& c, const CurvePoint& P, int bound);

}  // namespace curve_detail

}  // namespace pqcurves
