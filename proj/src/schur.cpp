#include "katabol/schur.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <utility>

#include "katabol/errors.hpp"

namespace katabol {

Integer z_factor(const Partition& mu) {
    Integer z = 1;
    int i = 0;
    while (i < mu.length()) {
        int part = mu.part(i);
        int count = 0;
        while (i < mu.length() && mu.part(i) == part) {
            ++count;
            ++i;
        }
        for (int j = 0; j < count; ++j) z *= part;
        for (int j = 2; j <= count; ++j) z *= j;
    }
    return z;
}

namespace {

Integer character_recursive(std::vector<int>& beads, const Partition& mu, int idx) {
    if (idx == mu.length()) return 1;
    int r = mu.part(idx);
    Integer total = 0;
    for (size_t i = 0; i < beads.size(); ++i) {
        int from = beads[i], to = from - r;
        if (to < 0) continue;
        if (std::find(beads.begin(), beads.end(), to) != beads.end()) continue;
        int jumped = 0;
        for (int b : beads)
            if (b > to && b < from) ++jumped;
        beads[i] = to;
        Integer sub = character_recursive(beads, mu, idx + 1);
        beads[i] = from;
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    return total;
}

std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> character_memo;
std::mutex character_mutex;

}  // namespace

Integer character_value(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw invalid_input("character of mismatched degrees " + lambda.to_string() + " vs " +
                            mu.to_string());
    if (lambda.empty()) return 1;
    {
        std::lock_guard<std::mutex> lock(character_mutex);
        auto it = character_memo.find({lambda.parts(), mu.parts()});
        if (it != character_memo.end()) return it->second;
    }
    int rows = lambda.length();
    std::vector<int> beads(rows);
    for (int i = 0; i < rows; ++i) beads[i] = lambda.part(i) + (rows - 1 - i);
    Integer value = character_recursive(beads, mu, 0);
    std::lock_guard<std::mutex> lock(character_mutex);
    character_memo.try_emplace({lambda.parts(), mu.parts()}, value);
    return value;
}

Integer standard_tableau_count(const Partition& lambda) {
    Integer numerator = 1;
    for (int i = 2; i <= lambda.size(); ++i) numerator *= i;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.part(r); ++c) numerator /= hook_length(lambda, r, c);
    return numerator;
}

RationalExpansion schur_to_powersum(const RationalExpansion& schur_terms) {
    RationalExpansion out;
    for (const auto& [lambda, c] : schur_terms.terms())
        for (const Partition& mu : partitions_of(lambda.size())) {
            Integer chi = character_value(lambda, mu);
            if (chi == 0) continue;
            out.add(mu, c * BivariateRational(BivariatePoly(chi), BivariatePoly(z_factor(mu))));
        }
    return out;
}

RationalExpansion powersum_to_schur(const RationalExpansion& powersum_terms) {
    RationalExpansion out;
    for (const auto& [mu, c] : powersum_terms.terms())
        for (const Partition& lambda : partitions_of(mu.size())) {
            Integer chi = character_value(lambda, mu);
            if (chi == 0) continue;
            out.add(lambda, c * BivariateRational(Integer(chi)));
        }
    return out;
}

PolyExpansion powersum_to_schur_integral(const PolyExpansion& powersum_terms) {
    PolyExpansion out;
    for (const auto& [mu, c] : powersum_terms.terms())
        for (const Partition& lambda : partitions_of(mu.size())) {
            Integer chi = character_value(lambda, mu);
            if (chi == 0) continue;
            out.add(lambda, c * BivariatePoly(chi));
        }
    return out;
}

namespace {

// Count Littlewood-Richardson fillings of nu/lambda with content mu: semistandard skew
// fillings (rows weak, columns strict across the skew) whose reverse reading word —
// rows taken longest part first, each scanned right to left — stays lattice.
long long lr_count(const Partition& nu, const Partition& lambda, const Partition& mu) {
    struct Cell {
        int r, c;
    };
    std::vector<Cell> order;
    for (int r = 0; r < nu.length(); ++r)
        for (int c = nu.part(r) - 1; c >= lambda.part(r); --c) order.push_back({r, c});
    std::vector<std::vector<int>> fill(nu.length());
    for (int r = 0; r < nu.length(); ++r) fill[r].assign(nu.part(r), 0);
    std::vector<int> count(mu.length() + 1, 0);
    long long total = 0;

    std::function<void(size_t)> rec = [&](size_t at) {
        if (at == order.size()) {
            ++total;
            return;
        }
        auto [r, c] = order[at];
        for (int v = 1; v <= mu.length(); ++v) {
            if (count[v] >= mu.part(v - 1)) continue;
            if (v >= 2 && count[v] >= count[v - 1]) continue;
            if (c + 1 < nu.part(r) && v > fill[r][c + 1]) continue;
            if (r >= 1 && c >= lambda.part(r - 1) && v <= fill[r - 1][c]) continue;
            fill[r][c] = v;
            ++count[v];
            rec(at + 1);
            --count[v];
            fill[r][c] = 0;
        }
    };
    rec(0);
    return total;
}

}  // namespace

PolyExpansion schur_multiply_basis(const Partition& lambda, const Partition& mu) {
    PolyExpansion out;
    if (mu.empty()) {
        out.add(lambda, BivariatePoly(1));
        return out;
    }
    for (const Partition& nu : partitions_of(lambda.size() + mu.size())) {
        if (!nu.contains(lambda)) continue;
        if (nu.first() > lambda.first() + mu.first()) continue;
        long long c = lr_count(nu, lambda, mu);
        if (c != 0) out.add(nu, BivariatePoly(c));
    }
    return out;
}

PolyExpansion schur_multiply(const PolyExpansion& a, const PolyExpansion& b) {
    PolyExpansion out;
    for (const auto& [lambda, ca] : a.terms())
        for (const auto& [mu, cb] : b.terms()) {
            PolyExpansion prod = schur_multiply_basis(lambda, mu);
            BivariatePoly c = ca * cb;
            for (const auto& [nu, m] : prod.terms()) out.add(nu, m * c);
        }
    return out;
}

PolyExpansion pieri_h(int ell, const Partition& lambda) {
    PolyExpansion out;
    for (const Partition& nu : horizontal_strip_extensions(lambda, ell))
        out.add(nu, BivariatePoly(1));
    return out;
}

PolyExpansion pieri_e(int ell, const Partition& lambda) {
    PolyExpansion out;
    for (const Partition& nu : vertical_strip_extensions(lambda, ell))
        out.add(nu, BivariatePoly(1));
    return out;
}

PolyExpansion schur_sum_by_charge(const TableauSet& s) {
    PolyExpansion out;
    for (const Tableau& t : s)
        out.add(t.shape(), BivariatePoly::monomial(1, 0, tableau_charge(t)));
    return out;
}

}  // namespace katabol
