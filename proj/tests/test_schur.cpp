// Character values, basis conversions, and products in the Schur basis.

#include <map>
#include <vector>

#include "doctest.h"
#include "katabol/operators.hpp"
#include "katabol/partition.hpp"
#include "katabol/schur.hpp"
#include "support.hpp"

using namespace katabol;
using kt::p;

namespace {

BivariateRational half() { return BivariateRational(BivariatePoly(1), BivariatePoly(2)); }

RationalExpansion unit(const Partition& lambda) {
    RationalExpansion e;
    e.add(lambda, BivariateRational(1));
    return e;
}

RationalExpansion to_rational(const PolyExpansion& e) {
    RationalExpansion out;
    for (const auto& [index, c] : e.terms()) out.add(index, BivariateRational(c));
    return out;
}

// Product of power sums: p_alpha * p_beta indexes the sorted concatenation.
RationalExpansion powersum_product(const RationalExpansion& a, const RationalExpansion& b) {
    RationalExpansion out;
    for (const auto& [alpha, ca] : a.terms())
        for (const auto& [beta, cb] : b.terms()) {
            std::vector<int> parts = alpha.parts();
            const std::vector<int>& more = beta.parts();
            parts.insert(parts.end(), more.begin(), more.end());
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            out.add(Partition(parts), ca * cb);
        }
    return out;
}

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

TEST_CASE("symmetrizer orders") {
    CHECK(z_factor(p("")) == 1);
    CHECK(z_factor(p("1,1,1")) == 6);
    CHECK(z_factor(p("2,1")) == 2);
    CHECK(z_factor(p("3")) == 3);
    CHECK(z_factor(p("2,2")) == 8);
    CHECK(z_factor(p("3,1,1")) == 6);
}

TEST_CASE("character table for three letters") {
    CHECK(character_value(p("3"), p("1,1,1")) == 1);
    CHECK(character_value(p("3"), p("2,1")) == 1);
    CHECK(character_value(p("3"), p("3")) == 1);
    CHECK(character_value(p("2,1"), p("1,1,1")) == 2);
    CHECK(character_value(p("2,1"), p("2,1")) == 0);
    CHECK(character_value(p("2,1"), p("3")) == -1);
    CHECK(character_value(p("1,1,1"), p("1,1,1")) == 1);
    CHECK(character_value(p("1,1,1"), p("2,1")) == -1);
    CHECK(character_value(p("1,1,1"), p("3")) == 1);
}

TEST_CASE("character rows are orthogonal") {
    // sum_mu (n!/z_mu) chi^lambda(mu) chi^nu(mu) = n! [lambda == nu].
    for (int n = 1; n <= 6; ++n) {
        Integer nf = factorial(n);
        std::vector<Partition> all = partitions_of(n);
        for (const Partition& lambda : all)
            for (const Partition& nu : all) {
                Integer sum = 0;
                for (const Partition& mu : all)
                    sum += (nf / z_factor(mu)) * character_value(lambda, mu) *
                           character_value(nu, mu);
                CHECK(sum == (lambda == nu ? nf : Integer(0)));
            }
    }
}

TEST_CASE("standard fillings counted by hook lengths") {
    CHECK(standard_tableau_count(p("")) == 1);
    CHECK(standard_tableau_count(p("1")) == 1);
    CHECK(standard_tableau_count(p("2,1")) == 2);
    CHECK(standard_tableau_count(p("3,2,1")) == 16);
    CHECK(standard_tableau_count(p("2,2")) == 2);
    CHECK(standard_tableau_count(p("4,2")) == 9);
    // Counts of standard fillings square-sum to n!.
    for (int n = 1; n <= 7; ++n) {
        Integer sum = 0;
        for (const Partition& lambda : partitions_of(n)) {
            Integer f = standard_tableau_count(lambda);
            sum += f * f;
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("two letter power sum expansions") {
    RationalExpansion s2 = schur_to_powersum(unit(p("2")));
    CHECK(s2.coeff(p("1,1")) == half());
    CHECK(s2.coeff(p("2")) == half());
    RationalExpansion s11 = schur_to_powersum(unit(p("1,1")));
    CHECK(s11.coeff(p("1,1")) == half());
    CHECK(s11.coeff(p("2")) == BivariateRational() - half());
}

TEST_CASE("power sum round trips") {
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            CHECK(powersum_to_schur(schur_to_powersum(unit(lambda))) == unit(lambda));
            CHECK(schur_to_powersum(powersum_to_schur(unit(lambda))) == unit(lambda));
        }
}

TEST_CASE("products in the Schur basis") {
    PolyExpansion sq = schur_multiply_basis(p("2,1"), p("2,1"));
    PolyExpansion expected;
    expected.add(p("4,2"), BivariatePoly(1));
    expected.add(p("4,1,1"), BivariatePoly(1));
    expected.add(p("3,3"), BivariatePoly(1));
    expected.add(p("3,2,1"), BivariatePoly(2));
    expected.add(p("3,1,1,1"), BivariatePoly(1));
    expected.add(p("2,2,2"), BivariatePoly(1));
    expected.add(p("2,2,1,1"), BivariatePoly(1));
    CHECK(sq == expected);

    PolyExpansion s1s1 = schur_multiply_basis(p("1"), p("1"));
    CHECK(s1s1.coeff(p("2")) == BivariatePoly(1));
    CHECK(s1s1.coeff(p("1,1")) == BivariatePoly(1));
    CHECK(s1s1.size() == 2);

    // Multiplying by the empty index is the identity.
    CHECK(schur_multiply_basis(p(""), p("2,1")).coeff(p("2,1")) == BivariatePoly(1));
}

TEST_CASE("products agree with the power sum route") {
    for (int na = 1; na <= 3; ++na)
        for (int nb = na; nb <= 6 - na; ++nb)
            for (const Partition& lambda : partitions_of(na))
                for (const Partition& mu : partitions_of(nb)) {
                    RationalExpansion via_p = powersum_to_schur(powersum_product(
                        schur_to_powersum(unit(lambda)), schur_to_powersum(unit(mu))));
                    CHECK(to_rational(schur_multiply_basis(lambda, mu)) == via_p);
                }
}

TEST_CASE("row and column strip products") {
    PolyExpansion h2 = pieri_h(2, p("2,1"));
    CHECK(h2.size() == 4);
    CHECK(h2.coeff(p("4,1")) == BivariatePoly(1));
    CHECK(h2.coeff(p("3,2")) == BivariatePoly(1));
    CHECK(h2.coeff(p("3,1,1")) == BivariatePoly(1));
    CHECK(h2.coeff(p("2,2,1")) == BivariatePoly(1));
    PolyExpansion e2 = pieri_e(2, p("2,1"));
    CHECK(e2.size() == 4);
    CHECK(e2.coeff(p("3,2")) == BivariatePoly(1));
    CHECK(e2.coeff(p("3,1,1")) == BivariatePoly(1));
    CHECK(e2.coeff(p("2,2,1")) == BivariatePoly(1));
    CHECK(e2.coeff(p("2,1,1,1")) == BivariatePoly(1));
    // Strip products match the general product against a one-row or one-column index.
    for (int n = 0; n <= 4; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int ell = 1; ell <= 3; ++ell) {
                std::vector<int> row{ell};
                std::vector<int> col(ell, 1);
                CHECK(pieri_h(ell, lambda) == schur_multiply_basis(Partition(row), lambda));
                CHECK(pieri_e(ell, lambda) == schur_multiply_basis(Partition(col), lambda));
            }
}

TEST_CASE("bilinear product of expansions") {
    PolyExpansion a;
    a.add(p("1"), BivariatePoly::var_t());
    PolyExpansion b;
    b.add(p("1"), BivariatePoly(1));
    b.add(p("2"), BivariatePoly::var_q());
    PolyExpansion ab = schur_multiply(a, b);
    BivariatePoly t = BivariatePoly::var_t();
    BivariatePoly q = BivariatePoly::var_q();
    CHECK(ab.coeff(p("2")) == t);
    CHECK(ab.coeff(p("1,1")) == t);
    CHECK(ab.coeff(p("3")) == q * t);
    CHECK(ab.coeff(p("2,1")) == q * t);
    CHECK(ab.size() == 4);
}

TEST_CASE("integral power sum conversion") {
    // n! * S_2 = p_{1,1}*3 + ... : use 2*S_2 = p_{11} + p_2.
    PolyExpansion twice;
    twice.add(p("1,1"), BivariatePoly(1));
    twice.add(p("2"), BivariatePoly(1));
    PolyExpansion s = powersum_to_schur_integral(twice);
    CHECK(s.coeff(p("2")) == BivariatePoly(2));
    CHECK(s.coeff(p("1,1")) == BivariatePoly(0));
    CHECK(s.size() == 1);
}

TEST_CASE("rescaling power sum coefficients") {
    RationalExpansion e;
    e.add(p("2,1"), BivariateRational(1));
    RationalExpansion scaled = rescale_powersum(e, [](int part) {
        return BivariateRational(BivariatePoly(part));
    });
    CHECK(scaled.coeff(p("2,1")) == BivariateRational(2));
}

TEST_CASE("charge graded shape sums") {
    PolyExpansion hl = schur_sum_by_charge(generate_tableaux(p("1,1")));
    PolyExpansion expected;
    expected.add(p("1,1"), BivariatePoly(1));
    expected.add(p("2"), BivariatePoly::var_t());
    CHECK(hl == expected);
    CHECK(schur_sum_by_charge(generate_tableaux(p(""))).coeff(p("")) == BivariatePoly(1));
}
