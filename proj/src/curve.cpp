#include "pqcurves/curve.hpp"

#include <stdexcept>

namespace pqcurves {

QiRational QiRational::inverse() const {
    if (is_zero()) throw std::invalid_argument("QiRational: division by zero");
    mpq_class n = re_ * re_ + im_ * im_;
    return {re_ / n, -im_ / n};
}

bool QiRational::is_gaussian_integer() const {
    return re_.get_den() == 1 && im_.get_den() == 1;
}

GaussianInt QiRational::to_gaussian() const {
    if (!is_gaussian_integer())
        throw std::invalid_argument("QiRational: not a Gaussian integer");
    return {re_.get_num(), im_.get_num()};
}

namespace {

std::string rat_str(const mpq_class& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

}  // namespace

std::string QiRational::str() const {
    if (im_ == 0) return rat_str(re_);
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = rat_str(im_) + "i";
    }
    if (re_ == 0) return imag;
    if (im_ > 0) imag = "+" + imag;
    return rat_str(re_) + imag;
}

CurveAB::CurveAB(mpz_class a, mpz_class b) : A(std::move(a)), B(std::move(b)) {
    if (B == 0 || A * A - 4 * B == 0)
        throw std::invalid_argument("CurveAB: curve is singular");
}

const QiRational& CurvePoint::x() const {
    if (infinite_) throw std::invalid_argument("CurvePoint: infinity has no coordinates");
    return x_;
}

const QiRational& CurvePoint::y() const {
    if (infinite_) throw std::invalid_argument("CurvePoint: infinity has no coordinates");
    return y_;
}

bool CurvePoint::operator==(const CurvePoint& o) const {
    if (infinite_ || o.infinite_) return infinite_ == o.infinite_;
    return x_ == o.x_ && y_ == o.y_;
}

bool CurvePoint::operator<(const CurvePoint& o) const {
    if (infinite_ != o.infinite_) return infinite_;
    if (infinite_) return false;
    if (x_ != o.x_) return x_ < o.x_;
    return y_ < o.y_;
}

std::string CurvePoint::str() const {
    if (infinite_) return "O";
    return "(" + x_.str() + "," + y_.str() + ")";
}

namespace curve_detail {

bool on_curve(const CubicCoeffs& c, const CurvePoint& P) {
    if (P.is_infinity()) return true;
    const QiRational& x = P.x();
    const QiRational& y = P.y();
    return y * y == ((x + c.a2) * x + c.a4) * x + c.a6;
}

CurvePoint negate_point(const CurvePoint& P) {
    if (P.is_infinity()) return P;
    return {P.x(), -P.y()};
}

CurvePoint add_points(const CubicCoeffs& c, const CurvePoint& P, const CurvePoint& Q) {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    const QiRational &x1 = P.x(), &y1 = P.y(), &x2 = Q.x(), &y2 = Q.y();
    QiRational slope;
    if (x1 == x2) {
        if (y1 == -y2) return CurvePoint::infinity();
        // tangent; y1 == y2 != 0 here because both points satisfy the curve
        slope = (QiRational(3) * x1 * x1 + QiRational(2) * c.a2 * x1 + c.a4) /
                (QiRational(2) * y1);
    } else {
        slope = (y2 - y1) / (x2 - x1);
    }
    QiRational x3 = slope * slope - c.a2 - x1 - x2;
    QiRational y3 = slope * (x1 - x3) - y1;
    return {x3, y3};
}

CurvePoint scalar_mul(const CubicCoeffs& c, long n, const CurvePoint& P) {
    if (n == 0) return CurvePoint::infinity();
    CurvePoint base = n < 0 ? negate_point(P) : P;
    unsigned long k = n < 0 ? -static_cast<unsigned long>(n) : n;
    CurvePoint acc = CurvePoint::infinity();
    CurvePoint pow = base;
    while (k) {
        if (k & 1) acc = add_points(c, acc, pow);
        k >>= 1;
        if (k) pow = add_points(c, pow, pow);
    }
    return acc;
}

std::optional<int> point_order(const CubicCoeffs& c, const CurvePoint& P, int bound) {
    CurvePoint acc = P;
    for (int n = 1; n <= bound; ++n) {
        if (acc.is_infinity()) return n;
        acc = add_points(c, acc, P);
    }
    return std::nullopt;
}

}  // namespace curve_detail

namespace {

curve_detail::CubicCoeffs coeffs_of(const CurveAB& c) {
    return {QiRational(c.A), QiRational(c.B), QiRational(0)};
}

void require_on_curve(const CurveAB& c, const CurvePoint& P, const char* who) {
    if (!is_on_curve(c, P))
        throw std::invalid_argument(std::string(who) + ": point is not on the curve");
}

}  // namespace

bool is_on_curve(const CurveAB& c, const CurvePoint& P) {
    return curve_detail::on_curve(coeffs_of(c), P);
}

CurvePoint add(const CurveAB& c, const CurvePoint& P, const CurvePoint& Q) {
    require_on_curve(c, P, "add");
    require_on_curve(c, Q, "add");
    return curve_detail::add_points(coeffs_of(c), P, Q);
}

CurvePoint negate(const CurveAB& c, const CurvePoint& P) {
    require_on_curve(c, P, "negate");
    return curve_detail::negate_point(P);
}

CurvePoint mul_scalar(const CurveAB& c, long n, const CurvePoint& P) {
    require_on_curve(c, P, "mul_scalar");
    return curve_detail::scalar_mul(coeffs_of(c), n, P);
}

std::optional<int> order_if_torsion(const CurveAB& c, const CurvePoint& P, int bound) {
    require_on_curve(c, P, "order_if_torsion");
    return curve_detail::point_order(coeffs_of(c), P, bound);
}

}  // namespace pqcurves
