#include "katabol/operators.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace katabol {

std::vector<Tableau> add_row_strip(int r, const Tableau& t) {
    if (r < 0) throw invalid_input("strip size must be nonnegative");
    int letter = t.max_letter() + 1;
    Partition shape = t.shape();
    std::vector<Tableau> out;
    for (const Partition& outer : horizontal_strip_extensions(shape, r)) {
        std::vector<std::vector<int>> rows = t.rows();
        for (int i = 0; i < outer.length(); ++i) {
            if (static_cast<int>(rows.size()) == i) rows.emplace_back();
            while (static_cast<int>(rows[i].size()) < outer.part(i)) rows[i].push_back(letter);
        }
        out.push_back(Tableau(rows));
    }
    return out;
}

namespace {
Tableau word_to_tableau_checked(const Word& w) {
    Tableau t = insertion_tableau(w);
    if (t.reading_word() != w)
        throw arithmetic_error("promotion produced a non-tableau word");
    return t;
}
}  // namespace

std::vector<Tableau> promote(int r, const Tableau& t) {
    int m = t.max_letter();
    std::vector<Tableau> out;
    for (const Tableau& extended : add_row_strip(r, t)) {
        Word w = extended.reading_word();
        for (int i = m; i >= 1; --i) w = sigma(i, w);
        out.push_back(word_to_tableau_checked(w));
    }
    return out;
}

TableauSet promote(int r, const TableauSet& s) {
    std::vector<Tableau> out;
    for (const Tableau& t : s.members()) {
        std::vector<Tableau> step = promote(r, t);
        out.insert(out.end(), step.begin(), step.end());
    }
    return TableauSet(out);
}

std::vector<Tableau> add_rectangle_strips(int ell, int h, const Tableau& t) {
    if (ell < 1 || h < 1) throw invalid_input("rectangle sides must be positive");
    int m = t.max_letter();
    std::vector<int> added;
    for (int j = 1; j <= h; ++j) added.push_back(m + j);
    std::vector<Tableau> frontier = {t};
    for (int j = 1; j <= h; ++j) {
        std::vector<int> added_so_far(added.begin(), added.begin() + j);
        std::vector<Tableau> next;
        for (const Tableau& u : frontier) {
            for (const Tableau& v : add_row_strip(ell, u)) {
                if (is_yamanouchi(v.reading_word(), added_so_far)) next.push_back(v);
            }
        }
        frontier = std::move(next);
    }
    return frontier;
}

std::vector<Tableau> promote_rect(int ell, int h, const Tableau& t) {
    int m = t.max_letter();
    std::vector<Tableau> out;
    for (const Tableau& extended : add_rectangle_strips(ell, h, t)) {
        Word w = extended.reading_word();
        for (int i = m; i >= 1; --i) w = sigma_h(i, h, w);
        out.push_back(word_to_tableau_checked(w));
    }
    return out;
}

TableauSet promote_rect(int ell, int h, const TableauSet& s) {
    std::vector<Tableau> out;
    for (const Tableau& t : s.members()) {
        std::vector<Tableau> step = promote_rect(ell, h, t);
        out.insert(out.end(), step.begin(), step.end());
    }
    return TableauSet(out);
}

std::optional<Tableau> katabolism(const Partition& lambda, const Tableau& t) {
    if (!t.shape().contains(lambda)) return std::nullopt;
    const auto& rows = t.rows();
    int ell = lambda.length();
    Word combined;
    // Remainder of the first ell rows, read top row first.
    for (int i = ell - 1; i >= 0; --i)
        combined.insert(combined.end(), rows[i].begin() + lambda.part(i), rows[i].end());
    // Rows above, read top row first.
    Word upper;
    for (int i = static_cast<int>(rows.size()) - 1; i >= ell; --i)
        upper.insert(upper.end(), rows[i].begin(), rows[i].end());
    combined.insert(combined.end(), upper.begin(), upper.end());
    return insertion_tableau(combined);
}

std::optional<Tableau> restricted_katabolism(const Partition& lambda, const Tableau& t) {
    if (!t.shape().contains(lambda)) return std::nullopt;
    if (!lambda.empty()) {
        Tableau corner = t.subtableau(lambda);
        int base = corner.rows()[0][0] - 1;
        if (base < 0) return std::nullopt;
        for (int i = 0; i < lambda.length(); ++i)
            for (int v : corner.rows()[i])
                if (v != base + i + 1) return std::nullopt;
    }
    return katabolism(lambda, t);
}

bool filter_keep(const std::vector<Partition>& sequence, const Tableau& t) {
    Tableau cur = t;
    for (const Partition& lambda : sequence) {
        std::optional<Tableau> next = restricted_katabolism(lambda, cur);
        if (!next) return false;
        cur = *next;
    }
    return cur.empty();
}

TableauSet filter_set(const std::vector<Partition>& sequence, const TableauSet& s) {
    std::vector<Tableau> out;
    for (const Tableau& t : s.members())
        if (filter_keep(sequence, t)) out.push_back(t);
    return TableauSet(out);
}

TableauSet generate_tableaux(const Partition& mu) {
    TableauSet cur(std::vector<Tableau>{Tableau()});
    for (int i = mu.length() - 1; i >= 0; --i) cur = promote(mu.part(i), cur);
    return cur;
}

namespace {
std::mutex atom_mutex;
std::map<std::pair<int, std::vector<int>>, TableauSet> atom_memo;
AtomCacheHooks atom_hooks;

TableauSet generate_atom_uncached(const Partition& lambda, int k) {
    if (lambda.empty()) return TableauSet(std::vector<Tableau>{Tableau()});
    TableauSet inner = generate_atom(lambda.removed_first_part(), k);
    TableauSet promoted = promote(lambda.first(), inner);
    return filter_set(k_split(lambda, k), promoted);
}
}  // namespace

TableauSet generate_atom(const Partition& lambda, int k) {
    require_k_bounded(lambda, k, "atom");
    std::pair<int, std::vector<int>> key{k, lambda.parts()};
    {
        std::lock_guard<std::mutex> lock(atom_mutex);
        auto it = atom_memo.find(key);
        if (it != atom_memo.end()) return it->second;
    }
    AtomCacheHooks hooks;
    {
        std::lock_guard<std::mutex> lock(atom_mutex);
        hooks = atom_hooks;
    }
    if (hooks.load) {
        if (std::optional<std::vector<Tableau>> cached = hooks.load(lambda, k)) {
            TableauSet set(*cached);
            std::lock_guard<std::mutex> lock(atom_mutex);
            atom_memo.emplace(key, set);
            return set;
        }
    }
    TableauSet result = generate_atom_uncached(lambda, k);
    if (hooks.store) hooks.store(lambda, k, result.members());
    std::lock_guard<std::mutex> lock(atom_mutex);
    atom_memo.emplace(key, result);
    return result;
}

AtomCacheHooks set_atom_cache_hooks(AtomCacheHooks hooks) {
    std::lock_guard<std::mutex> lock(atom_mutex);
    std::swap(atom_hooks, hooks);
    return hooks;
}

void clear_atom_memo() {
    std::lock_guard<std::mutex> lock(atom_mutex);
    atom_memo.clear();
}

TableauSet hook_atom(int m, int r, int k) {
    if (m < 1 || r < 0) throw invalid_input("hook_atom needs m >= 1, r >= 0");
    std::vector<int> parts{m};
    parts.insert(parts.end(), r, 1);
    Partition hook(parts);
    if (!is_k_irreducible(hook, k))
        throw invalid_input("hook_atom: " + hook.to_string() + " is not " + std::to_string(k) +
                            "-irreducible");
    std::vector<Tableau> members;
    Word first;  // (r+1) r ... 2 then m ones
    for (int v = r + 1; v >= 2; --v) first.push_back(v);
    first.insert(first.end(), m, 1);
    members.push_back(tableau_from_word(first));
    if (r + m > k) {
        Word second;  // r ... 2 then m ones then r+1
        for (int v = r; v >= 2; --v) second.push_back(v);
        second.insert(second.end(), m, 1);
        second.push_back(r + 1);
        members.push_back(tableau_from_word(second));
    }
    return TableauSet(members);
}

}  // namespace katabol
