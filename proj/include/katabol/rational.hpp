#pragma once

#include <string>

#include "katabol/poly.hpp"

namespace katabol {

// Exact quotient of two integer polynomials in q and t, kept in canonical form:
// the denominator is a nonzero polynomial with positive leading coefficient, the
// fraction is reduced by the polynomial gcd, and Laurent numerators are cleared into
// the denominator.  Equality is therefore structural.
class BivariateRational {
  public:
    BivariateRational() : num_(), den_(1) {}
    BivariateRational(long long c) : num_(c), den_(1) {}
    BivariateRational(const Integer& c) : num_(c), den_(1) {}
    BivariateRational(const BivariatePoly& p);
    BivariateRational(const BivariatePoly& num, const BivariatePoly& den);

    const BivariatePoly& numerator() const { return num_; }
    const BivariatePoly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool operator==(const BivariateRational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    BivariateRational& operator+=(const BivariateRational& o);
    BivariateRational& operator-=(const BivariateRational& o);
    BivariateRational& operator*=(const BivariateRational& o);
    BivariateRational& operator/=(const BivariateRational& o);
    friend BivariateRational operator+(BivariateRational a, const BivariateRational& b) {
        return a += b;
    }
    friend BivariateRational operator-(BivariateRational a, const BivariateRational& b) {
        return a -= b;
    }
    friend BivariateRational operator*(BivariateRational a, const BivariateRational& b) {
        return a *= b;
    }
    friend BivariateRational operator/(BivariateRational a, const BivariateRational& b) {
        return a /= b;
    }
    BivariateRational operator-() const;

    bool is_polynomial() const { return den_ == BivariatePoly(1); }
    // The value as a polynomial; throws arithmetic_error when the denominator remains.
    BivariatePoly as_polynomial() const;

    std::string to_string() const;  // "num/(den)" or just "num"

  private:
    void reduce();
    void normalize_sign();
    BivariatePoly num_, den_;
};

}  // namespace katabol
