#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "katabol/partition.hpp"
#include "katabol/word.hpp"

namespace katabol {

// Semistandard tableau, French convention: rows_[0] is the bottom (longest) row; rows
// weakly increase left to right, columns strictly increase bottom to top.  Letters are
// positive but need not start at 1 or be contiguous.
class Tableau {
  public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    int cells() const;
    Partition shape() const;
    std::vector<int> letter_evaluation() const;  // multiplicity of letter i+1 at index i

    // Rows read left to right, top row first.
    Word reading_word() const;

    // Entries 1..n, each exactly once.
    bool is_standard() const;
    int min_letter() const;  // smallest entry; 0 for the empty tableau
    int max_letter() const;

    // Entries in the cells of lambda (requires shape() to contain lambda).
    Tableau subtableau(const Partition& lambda) const;
    // Restriction to shape(x) equals x.
    bool contains_subtableau(const Tableau& x) const;

    bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
    bool operator!=(const Tableau& o) const { return rows_ != o.rows_; }

  private:
    std::vector<std::vector<int>> rows_;
};

// Deterministic order: shape first (dominance-larger shapes first, reverse-lexicographic
// listing), then reading word lexicographically.
bool tableau_less(const Tableau& a, const Tableau& b);

// Schensted row insertion of the whole word.
Tableau insertion_tableau(const Word& w);

// Insertion and standard recording tableau.
std::pair<Tableau, Tableau> rsk(const Word& w);

// Inverse of rsk: the unique word with insertion tableau p and recording tableau q.
Word rsk_inverse(const Tableau& p, const Tableau& q);

// Construct from a word that must already be a tableau reading word.
Tableau tableau_from_word(const Word& w);

// Transpose of a standard tableau (rejects non-standard input).
Tableau transpose_standard(const Tableau& t);

// Charge of the reading word.
int tableau_charge(const Tableau& t);

// Move the first reading-word letter to the end (cyclage; raises charge by 1) or the last
// letter to the front (cocyclage; lowers it by 1); no result when the moved letter is the
// smallest letter value present.
std::optional<Tableau> cyclage(const Tableau& t);
std::optional<Tableau> cocyclage(const Tableau& t);

// Generalized crystal operator on words: acts on the letters i..i+h only, moving the
// multiplicity of letter i past the following h multiplicities; h = 1 is sigma(i, .).
Word sigma_h(int i, int h, const Word& w);

// Replace the rectangular subtableau of shape shape(x) (which must be filled minimally:
// row j constant equal to j+1) by x, shifting every remaining letter v to
// v - h + max_letter(x) where h is the rectangle height.
Tableau relabel_rectangle(const Tableau& x, const Tableau& t);

// Finite set of tableaux with one common letter evaluation, kept sorted and duplicate-free.
class TableauSet {
  public:
    TableauSet() = default;
    explicit TableauSet(std::vector<Tableau> members);

    const std::vector<Tableau>& members() const { return members_; }
    std::vector<Tableau>::const_iterator begin() const { return members_.begin(); }
    std::vector<Tableau>::const_iterator end() const { return members_.end(); }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    const std::vector<int>& common_evaluation() const { return evaluation_; }
    bool contains(const Tableau& t) const;

    bool operator==(const TableauSet& o) const { return members_ == o.members_; }

  private:
    std::vector<Tableau> members_;
    std::vector<int> evaluation_;
};

}  // namespace katabol
