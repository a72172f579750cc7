#include "katabol/tableau.hpp"

#include <algorithm>
#include <sstream>

namespace katabol {

namespace {
std::string rows_to_string(const std::vector<std::vector<int>>& rows) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ' ';
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (j) os << ',';
            os << rows[i][j];
        }
    }
    os << ']';
    return os.str();
}
}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (size_t i = 0; i < rows_.size(); ++i) {
        const auto& row = rows_[i];
        if (row.empty()) throw invalid_input("tableau has an empty internal row");
        if (i > 0 && row.size() > rows_[i - 1].size())
            throw invalid_input("tableau rows must weakly shorten upward: " +
                                rows_to_string(rows_));
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 1) throw invalid_input("tableau letters must be positive");
            if (j > 0 && row[j] < row[j - 1])
                throw invalid_input("tableau rows must weakly increase: " +
                                    rows_to_string(rows_));
            if (i > 0 && row[j] <= rows_[i - 1][j])
                throw invalid_input("tableau columns must strictly increase: " +
                                    rows_to_string(rows_));
        }
    }
}

int Tableau::cells() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(parts);
}

std::vector<int> Tableau::letter_evaluation() const { return evaluation(reading_word()); }

Word Tableau::reading_word() const {
    Word w;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

bool Tableau::is_standard() const {
    std::vector<int> ev = letter_evaluation();
    if (static_cast<int>(ev.size()) != cells()) return false;
    for (int m : ev)
        if (m != 1) return false;
    return true;
}

int Tableau::min_letter() const { return rows_.empty() ? 0 : rows_[0][0]; }

int Tableau::max_letter() const {
    int m = 0;
    for (const auto& r : rows_) m = std::max(m, r.back());
    return m;
}

Tableau Tableau::subtableau(const Partition& lambda) const {
    if (!shape().contains(lambda))
        throw invalid_input("subtableau shape " + lambda.to_string() + " not contained in " +
                            shape().to_string());
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < lambda.length(); ++i)
        rows.emplace_back(rows_[i].begin(), rows_[i].begin() + lambda.part(i));
    return Tableau(rows);
}

bool Tableau::contains_subtableau(const Tableau& x) const {
    if (!shape().contains(x.shape())) return false;
    return subtableau(x.shape()) == x;
}

bool tableau_less(const Tableau& a, const Tableau& b) {
    Partition sa = a.shape(), sb = b.shape();
    if (sa != sb) return total_less(sb, sa);
    return a.reading_word() < b.reading_word();
}

namespace {
// Insert letter into the row, bumping; returns the bumped letter or 0 if appended.
int row_insert(std::vector<int>& row, int letter) {
    auto it = std::upper_bound(row.begin(), row.end(), letter);
    if (it == row.end()) {
        row.push_back(letter);
        return 0;
    }
    int bumped = *it;
    *it = letter;
    return bumped;
}
}  // namespace

Tableau insertion_tableau(const Word& w) {
    std::vector<std::vector<int>> rows;
    for (int letter : w) {
        int cur = letter;
        for (size_t i = 0; cur != 0; ++i) {
            if (i == rows.size()) rows.emplace_back();
            cur = row_insert(rows[i], cur);
        }
    }
    return Tableau(rows);
}

std::pair<Tableau, Tableau> rsk(const Word& w) {
    std::vector<std::vector<int>> rows, rec;
    int step = 0;
    for (int letter : w) {
        ++step;
        int cur = letter;
        size_t i = 0;
        for (;; ++i) {
            if (i == rows.size()) rows.emplace_back();
            cur = row_insert(rows[i], cur);
            if (cur == 0) break;
        }
        if (i == rec.size()) rec.emplace_back();
        rec[i].push_back(step);
    }
    return {Tableau(rows), Tableau(rec)};
}

Word rsk_inverse(const Tableau& p, const Tableau& q) {
    if (p.shape() != q.shape())
        throw invalid_input("rsk_inverse needs equal shapes, got " + p.shape().to_string() +
                            " vs " + q.shape().to_string());
    if (!q.is_standard()) throw invalid_input("rsk_inverse recording tableau must be standard");
    std::vector<std::vector<int>> rows = p.rows();
    const auto& qr = q.rows();
    int n = p.cells();
    Word out(n, 0);
    for (int step = n; step >= 1; --step) {
        int r = -1, c = -1;
        for (size_t i = 0; i < qr.size(); ++i)
            for (size_t j = 0; j < qr[i].size(); ++j)
                if (qr[i][j] == step) {
                    r = static_cast<int>(i);
                    c = static_cast<int>(j);
                }
        if (r < 0 || c != static_cast<int>(rows[r].size()) - 1)
            throw arithmetic_error("rsk_inverse: recording entry is not at a removable corner");
        int carry = rows[r].back();
        rows[r].pop_back();
        for (int j = r - 1; j >= 0; --j) {
            // rightmost entry strictly smaller than carry
            auto it = std::lower_bound(rows[j].begin(), rows[j].end(), carry);
            if (it == rows[j].begin())
                throw arithmetic_error("rsk_inverse: reverse bump found no smaller entry");
            --it;
            std::swap(*it, carry);
        }
        out[step - 1] = carry;
    }
    return out;
}

Tableau tableau_from_word(const Word& w) {
    Tableau t = insertion_tableau(w);
    if (t.reading_word() != w)
        throw invalid_input("word is not a tableau reading word");
    return t;
}

Tableau transpose_standard(const Tableau& t) {
    if (!t.is_standard())
        throw invalid_input("transpose is defined here for standard tableaux only");
    const auto& rows = t.rows();
    std::vector<std::vector<int>> cols;
    for (const auto& row : rows) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j == cols.size()) cols.emplace_back();
            cols[j].push_back(row[j]);
        }
    }
    return Tableau(cols);
}

int tableau_charge(const Tableau& t) { return charge(t.reading_word()); }

std::optional<Tableau> cyclage(const Tableau& t) {
    if (t.empty()) return std::nullopt;
    Word w = t.reading_word();
    int x = w.front();
    if (x == t.min_letter()) return std::nullopt;
    Word rest(w.begin() + 1, w.end());
    rest.push_back(x);
    return insertion_tableau(rest);
}

std::optional<Tableau> cocyclage(const Tableau& t) {
    if (t.empty()) return std::nullopt;
    Word w = t.reading_word();
    int x = w.back();
    if (x == t.min_letter()) return std::nullopt;
    Word rest(w.begin(), w.end() - 1);
    Word out;
    out.push_back(x);
    out.insert(out.end(), rest.begin(), rest.end());
    return insertion_tableau(out);
}

namespace {
// The i = 1 case on a word over 1..h+1: delete the 1s, decrement, and re-insert the lost
// multiplicity as letter h+1 along the horizontal strip the deletion frees up.
Word sigma1_h(int h, const Word& w) {
    Word decremented;
    for (int x : w)
        if (x != 1) decremented.push_back(x - 1);
    auto [p, q] = rsk(w);
    Tableau small = insertion_tableau(decremented);
    Partition outer = p.shape(), inner = small.shape();
    if (!is_horizontal_strip(inner, outer))
        throw arithmetic_error("sigma_h: deletion did not free a horizontal strip");
    std::vector<std::vector<int>> rows = small.rows();
    for (int i = 0; i < outer.length(); ++i) {
        if (static_cast<int>(rows.size()) == i) rows.emplace_back();
        while (static_cast<int>(rows[i].size()) < outer.part(i)) rows[i].push_back(h + 1);
    }
    return rsk_inverse(Tableau(rows), q);
}
}  // namespace

Word sigma_h(int i, int h, const Word& w) {
    if (i < 1 || h < 1) throw invalid_input("sigma_h needs i >= 1 and h >= 1");
    std::vector<int> positions;
    Word sub;
    for (int p = 0; p < static_cast<int>(w.size()); ++p) {
        if (w[p] >= i && w[p] <= i + h) {
            positions.push_back(p);
            sub.push_back(w[p] - (i - 1));
        }
    }
    if (sub.empty()) return w;
    Word moved = sigma1_h(h, sub);
    Word out = w;
    for (size_t t = 0; t < positions.size(); ++t) out[positions[t]] = moved[t] + (i - 1);
    return out;
}

Tableau relabel_rectangle(const Tableau& x, const Tableau& t) {
    Partition rect = x.shape();
    if (rect.empty()) return t;
    int h = rect.length();
    if (rect.multiplicity(rect.first()) != h)
        throw invalid_input("relabel_rectangle target must have rectangular shape");
    std::vector<std::vector<int>> minimal;
    for (int j = 0; j < h; ++j) minimal.emplace_back(rect.first(), j + 1);
    if (!t.contains_subtableau(Tableau(minimal)))
        throw invalid_input("relabel_rectangle: tableau lacks the minimal rectangular block");
    int s = x.max_letter();
    std::vector<std::vector<int>> rows = t.rows();
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < rows[i].size(); ++j) {
            bool in_rect = static_cast<int>(i) < h && static_cast<int>(j) < rect.first();
            if (in_rect)
                rows[i][j] = x.rows()[i][j];
            else
                rows[i][j] = rows[i][j] - h + s;
        }
    }
    return Tableau(rows);
}

TableauSet::TableauSet(std::vector<Tableau> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end(), tableau_less);
    for (size_t i = 0; i < members_.size(); ++i) {
        if (i > 0 && members_[i] == members_[i - 1])
            throw arithmetic_error("tableau set has a duplicate member: " +
                                   rows_to_string(members_[i].rows()));
        if (i == 0)
            evaluation_ = members_[i].letter_evaluation();
        else if (members_[i].letter_evaluation() != evaluation_)
            throw arithmetic_error("tableau set members disagree on evaluation");
    }
}

bool TableauSet::contains(const Tableau& t) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), t, tableau_less);
    return it != members_.end() && *it == t;
}

}  // namespace katabol
