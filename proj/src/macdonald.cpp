#include "katabol/macdonald.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "katabol/errors.hpp"
#include "katabol/operators.hpp"
#include "katabol/tableau.hpp"

namespace katabol {

BivariateRational powersum_qt_norm(const Partition& lambda) {
    BivariatePoly num(z_factor(lambda)), den(1);
    for (int i = 0; i < lambda.length(); ++i) {
        num *= one_minus_monomial(lambda.part(i), 0);
        den *= one_minus_monomial(0, lambda.part(i));
    }
    return BivariateRational(num, den);
}

namespace {

struct Orthogonal {
    RationalExpansion schur;     // coefficients on Schur functions
    RationalExpansion powersum;  // the same element on power sums
    BivariateRational norm;      // <P, P>
};

using Family = std::map<Partition, Orthogonal, PartitionLess>;

BivariateRational qt_inner(const RationalExpansion& a, const RationalExpansion& b) {
    BivariateRational total;
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    for (const auto& [mu, c] : small.terms()) {
        BivariateRational other = large.coeff(mu);
        if (other.is_zero()) continue;
        total += c * other * powersum_qt_norm(mu);
    }
    return total;
}

Family orthogonalize(const std::vector<Partition>& order) {
    Family family;
    std::vector<const Orthogonal*> done;
    for (const Partition& mu : order) {
        Orthogonal cur;
        cur.schur.add(mu, BivariateRational(1));
        cur.powersum = schur_to_powersum(cur.schur);
        for (const Orthogonal* prev : done) {
            BivariateRational c = qt_inner(cur.powersum, prev->powersum) / prev->norm;
            if (c.is_zero()) continue;
            cur.schur -= prev->schur.scaled(c);
            cur.powersum -= prev->powersum.scaled(c);
        }
        cur.norm = qt_inner(cur.powersum, cur.powersum);
        if (cur.norm.is_zero()) throw arithmetic_error("degenerate scalar product norm");
        auto [it, inserted] = family.try_emplace(mu, std::move(cur));
        if (!inserted) throw invalid_input("orthogonalization order repeats a partition");
        done.push_back(&it->second);
    }
    return family;
}

std::vector<Partition> default_order(int degree) {
    std::vector<Partition> order = partitions_of(degree);
    std::sort(order.begin(), order.end(), PartitionLess{});
    return order;
}

struct OrderKeyLess {
    bool operator()(const std::vector<Partition>& a, const std::vector<Partition>& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            PartitionLess{});
    }
};

std::map<int, Family> family_cache;
std::map<std::vector<Partition>, Family, OrderKeyLess> ordered_family_cache;
std::mutex family_mutex;

const Orthogonal& cached_orthogonal(const Partition& mu) {
    std::lock_guard<std::mutex> lock(family_mutex);
    auto it = family_cache.find(mu.size());
    if (it == family_cache.end())
        it = family_cache.emplace(mu.size(), orthogonalize(default_order(mu.size()))).first;
    return it->second.at(mu);
}

BivariatePoly leading_normalization(const Partition& mu) {
    BivariatePoly v(1);
    for (int r = 0; r < mu.length(); ++r)
        for (int c = 0; c < mu.part(r); ++c)
            v *= one_minus_monomial(arm_length(mu, r, c), leg_length(mu, r, c) + 1);
    return v;
}

PolyExpansion certify_polynomial(const RationalExpansion& e) {
    PolyExpansion out;
    for (const auto& [lambda, c] : e.terms()) out.add(lambda, c.as_polynomial());
    return out;
}

}  // namespace

RationalExpansion orthogonal_p(const Partition& mu) { return cached_orthogonal(mu).schur; }

RationalExpansion orthogonal_p_ordered(const Partition& mu, const std::vector<Partition>& order) {
    std::lock_guard<std::mutex> lock(family_mutex);
    auto it = ordered_family_cache.find(order);
    if (it == ordered_family_cache.end())
        it = ordered_family_cache.emplace(order, orthogonalize(order)).first;
    auto member = it->second.find(mu);
    if (member == it->second.end())
        throw invalid_input("orthogonalization order does not contain " + mu.to_string());
    return member->second.schur;
}

PolyExpansion macdonald_j(const Partition& mu) {
    const Orthogonal& p = cached_orthogonal(mu);
    return certify_polynomial(p.schur.scaled(BivariateRational(leading_normalization(mu))));
}

PolyExpansion macdonald_h(const Partition& mu) {
    const Orthogonal& p = cached_orthogonal(mu);
    RationalExpansion jp = p.powersum.scaled(BivariateRational(leading_normalization(mu)));
    RationalExpansion hp = rescale_powersum(jp, [](int i) {
        return BivariateRational(BivariatePoly(1), one_minus_monomial(0, i));
    });
    return certify_polynomial(powersum_to_schur(hp));
}

BivariatePoly qt_kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw invalid_input("Kostka coefficient needs partitions of equal degree");
    return macdonald_h(mu).coeff(lambda);
}

PolyExpansion hall_littlewood(const Partition& mu) {
    return schur_sum_by_charge(generate_tableaux(mu));
}

BivariatePoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw invalid_input("Kostka coefficient needs partitions of equal degree");
    return hall_littlewood(mu).coeff(lambda);
}

}  // namespace katabol
