#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>

namespace katabol {

using Integer = boost::multiprecision::cpp_int;

// Exact two-variable polynomial in q and t with integer coefficients.  Negative
// exponents are permitted (Laurent terms), which some duality checks need; operations
// that require honest polynomials say so.  Zero coefficients are never stored.
class BivariatePoly {
  public:
    // (q exponent, t exponent) -> coefficient.
    using Key = std::pair<int, int>;

    BivariatePoly() = default;
    BivariatePoly(long long c) { add_term(Integer(c), 0, 0); }
    BivariatePoly(const Integer& c) { add_term(c, 0, 0); }

    static BivariatePoly monomial(const Integer& c, int qe, int te) {
        BivariatePoly p;
        p.add_term(c, qe, te);
        return p;
    }
    static BivariatePoly var_q() { return monomial(1, 1, 0); }
    static BivariatePoly var_t() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Integer>& terms() const { return terms_; }
    Integer coeff(int qe, int te) const;

    bool operator==(const BivariatePoly& o) const { return terms_ == o.terms_; }

    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    BivariatePoly& operator*=(const BivariatePoly& o);
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
    BivariatePoly operator-() const;

    // Multiply by the monomial q^dq t^dt.
    BivariatePoly shifted(int dq, int dt) const;

    bool is_polynomial() const;              // no negative exponents
    bool coefficients_nonnegative() const;   // every stored coefficient > 0
    int min_q_exponent() const;              // all 0 for the zero polynomial
    int max_q_exponent() const;
    int min_t_exponent() const;
    int max_t_exponent() const;

    // Substitute an integer value for one variable; the result stays exact.
    BivariatePoly specialize_q(const Integer& value) const;
    BivariatePoly specialize_t(const Integer& value) const;
    // Value at integer (q, t).
    Integer evaluate(const Integer& q, const Integer& t) const;

    // Compact form such as "1+q*t^2-3*t", terms by ascending total degree.
    std::string to_string() const;

    // Exact division; false when b does not divide a.  Both must be polynomial.
    static bool try_divide(const BivariatePoly& a, const BivariatePoly& b, BivariatePoly& quot);

    // Polynomial gcd over the integers (content times primitive part), with a positive
    // leading coefficient.  Both arguments must be polynomial.
    friend BivariatePoly poly_gcd(const BivariatePoly& a, const BivariatePoly& b);

  private:
    void add_term(const Integer& c, int qe, int te);
    std::map<Key, Integer> terms_;
};

// Convenience: 1 - q^a t^b.
BivariatePoly one_minus_monomial(int qa, int tb);

}  // namespace katabol
