#include "katabol/rational.hpp"

#include <algorithm>

#include "katabol/errors.hpp"

namespace katabol {

namespace {

BivariatePoly exact_quotient(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly q;
    if (!BivariatePoly::try_divide(a, b, q))
        throw arithmetic_error("inexact division while reducing a rational function");
    return q;
}

bool is_unit_poly(const BivariatePoly& p) { return p == BivariatePoly(1); }

}  // namespace

BivariateRational::BivariateRational(const BivariatePoly& p) : num_(p), den_(1) { reduce(); }

BivariateRational::BivariateRational(const BivariatePoly& num, const BivariatePoly& den)
    : num_(num), den_(den) {
    reduce();
}

void BivariateRational::normalize_sign() {
    if (den_.terms().rbegin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

void BivariateRational::reduce() {
    if (den_.is_zero()) throw arithmetic_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = BivariatePoly(1);
        return;
    }
    // Clear Laurent terms: multiply both sides into honest polynomials.
    int dq = std::min({0, num_.min_q_exponent(), den_.min_q_exponent()});
    int dt = std::min({0, num_.min_t_exponent(), den_.min_t_exponent()});
    if (dq < 0 || dt < 0) {
        num_ = num_.shifted(-dq, -dt);
        den_ = den_.shifted(-dq, -dt);
    }
    if (!is_unit_poly(den_)) {
        BivariatePoly g = poly_gcd(num_, den_);
        if (!is_unit_poly(g)) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
    }
    normalize_sign();
}

// The fraction arithmetic keeps operands reduced and takes gcds of the
// smallest possible pairs, so coefficient growth stays contained even in
// long elimination chains.

BivariateRational& BivariateRational::operator+=(const BivariateRational& o) {
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) {
        *this = o;
        return *this;
    }
    if (is_unit_poly(den_) && is_unit_poly(o.den_)) {
        num_ += o.num_;
        if (num_.is_zero()) den_ = BivariatePoly(1);
        return *this;
    }
    BivariatePoly d1 = poly_gcd(den_, o.den_);
    if (is_unit_poly(d1)) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    } else {
        BivariatePoly right = exact_quotient(o.den_, d1);
        BivariatePoly left = exact_quotient(den_, d1);
        BivariatePoly top = num_ * right + o.num_ * left;
        if (top.is_zero()) {
            num_ = BivariatePoly();
            den_ = BivariatePoly(1);
            return *this;
        }
        BivariatePoly d2 = poly_gcd(top, d1);
        if (is_unit_poly(d2)) {
            num_ = top;
            den_ = den_ * right;
        } else {
            num_ = exact_quotient(top, d2);
            den_ = exact_quotient(den_, d2) * right;
        }
    }
    normalize_sign();
    return *this;
}

BivariateRational& BivariateRational::operator-=(const BivariateRational& o) {
    return *this += -o;
}

BivariateRational& BivariateRational::operator*=(const BivariateRational& o) {
    if (num_.is_zero()) return *this;
    if (o.num_.is_zero()) {
        num_ = BivariatePoly();
        den_ = BivariatePoly(1);
        return *this;
    }
    BivariatePoly a = num_, b = den_, c = o.num_, d = o.den_;
    if (!is_unit_poly(d)) {
        BivariatePoly g = poly_gcd(a, d);
        if (!is_unit_poly(g)) {
            a = exact_quotient(a, g);
            d = exact_quotient(d, g);
        }
    }
    if (!is_unit_poly(b)) {
        BivariatePoly g = poly_gcd(c, b);
        if (!is_unit_poly(g)) {
            c = exact_quotient(c, g);
            b = exact_quotient(b, g);
        }
    }
    num_ = a * c;
    den_ = b * d;
    normalize_sign();
    return *this;
}

BivariateRational& BivariateRational::operator/=(const BivariateRational& o) {
    if (o.is_zero()) throw arithmetic_error("division by the zero rational function");
    BivariateRational flipped;
    flipped.num_ = o.den_;
    flipped.den_ = o.num_;
    flipped.normalize_sign();
    return *this *= flipped;
}

BivariateRational BivariateRational::operator-() const {
    BivariateRational out = *this;
    out.num_ = -out.num_;
    return out;
}

BivariatePoly BivariateRational::as_polynomial() const {
    if (!is_polynomial())
        throw arithmetic_error("rational function is not a polynomial: " + to_string());
    return num_;
}

std::string BivariateRational::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace katabol
