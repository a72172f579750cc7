#pragma once

#include <map>
#include <string>
#include <vector>

#include "katabol/partition.hpp"
#include "katabol/poly.hpp"
#include "katabol/rational.hpp"
#include "katabol/tableau.hpp"

namespace katabol {

// A finite linear combination of basis elements indexed by partitions.  Which basis
// (Schur, power sum, monomial, atom) is a property of how the object is used; the
// functions below say which one they produce.
template <class C>
class Expansion {
  public:
    using Map = std::map<Partition, C, PartitionLess>;

    Expansion() = default;
    explicit Expansion(Map terms) : terms_(std::move(terms)) { prune(); }

    void add(const Partition& index, const C& c) {
        if (c == C(0)) return;
        auto [it, inserted] = terms_.try_emplace(index, c);
        if (!inserted) {
            it->second += c;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    const Map& terms() const { return terms_; }
    C coeff(const Partition& index) const {
        auto it = terms_.find(index);
        return it == terms_.end() ? C(0) : it->second;
    }
    bool is_zero() const { return terms_.empty(); }
    int size() const { return static_cast<int>(terms_.size()); }

    bool operator==(const Expansion& o) const { return terms_ == o.terms_; }

    Expansion& operator+=(const Expansion& o) {
        for (const auto& [index, c] : o.terms_) add(index, c);
        return *this;
    }
    Expansion& operator-=(const Expansion& o) {
        for (const auto& [index, c] : o.terms_) add(index, C(0) - c);
        return *this;
    }
    friend Expansion operator+(Expansion a, const Expansion& b) { return a += b; }
    friend Expansion operator-(Expansion a, const Expansion& b) { return a -= b; }

    Expansion scaled(const C& f) const {
        Expansion out;
        for (const auto& [index, c] : terms_) out.add(index, c * f);
        return out;
    }

  private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = (it->second == C(0)) ? terms_.erase(it) : std::next(it);
    }
    Map terms_;
};

using PolyExpansion = Expansion<BivariatePoly>;
using RationalExpansion = Expansion<BivariateRational>;

// z_mu = prod_i i^{m_i} m_i!.
Integer z_factor(const Partition& mu);

// Irreducible symmetric-group character value chi^lambda(mu), by border-strip removal
// in the bead (first-column hook length) model.
Integer character_value(const Partition& lambda, const Partition& mu);

// Number of standard tableaux of the given shape (hook length formula).
Integer standard_tableau_count(const Partition& lambda);

// Basis conversions for homogeneous expansions (indices may mix degrees; each degree
// converts independently).
RationalExpansion schur_to_powersum(const RationalExpansion& schur_terms);
RationalExpansion powersum_to_schur(const RationalExpansion& powersum_terms);
PolyExpansion powersum_to_schur_integral(const PolyExpansion& powersum_terms);

// Littlewood-Richardson expansion of S_lambda * S_mu.
PolyExpansion schur_multiply_basis(const Partition& lambda, const Partition& mu);
// Bilinear extension to whole expansions in the Schur basis.
PolyExpansion schur_multiply(const PolyExpansion& a, const PolyExpansion& b);

// Pieri products: h_ell * S_lambda (horizontal strips) and e_ell * S_lambda (vertical).
PolyExpansion pieri_h(int ell, const Partition& lambda);
PolyExpansion pieri_e(int ell, const Partition& lambda);

// Multiply the coefficient of each p_mu by prod_i factor(mu_i); this implements the
// substitutions p_i -> p_i / (1 - t^i) and friends on the power-sum basis.
template <class F>
RationalExpansion rescale_powersum(const RationalExpansion& pexp, F factor) {
    RationalExpansion out;
    for (const auto& [mu, c] : pexp.terms()) {
        BivariateRational f = c;
        for (int i = 0; i < mu.length(); ++i) f *= factor(mu.part(i));
        out.add(mu, f);
    }
    return out;
}

// The charge-graded Schur generating function of a set of tableaux:
// sum over members of t^{charge} S_{shape}.
PolyExpansion schur_sum_by_charge(const TableauSet& s);

}  // namespace katabol
