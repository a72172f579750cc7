#pragma once

#include <string>
#include <vector>

#include "katabol/errors.hpp"

namespace katabol {

// Integer partition: weakly decreasing positive parts, no trailing zeros.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return i >= 0 && i < length() ? parts_[i] : 0; }  // 0-based, 0 beyond
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;                 // |lambda|, sum of parts
    bool empty() const { return parts_.empty(); }
    int first() const { return part(0); }

    // Number of cells equal to the given part value.
    int multiplicity(int value) const;

    // n(lambda) = sum_i (i-1) * lambda_i (rows indexed from 1).
    long long n_stat() const;

    Partition conjugate() const;
    bool contains(const Partition& inner) const;
    Partition removed_first_part() const;  // (lambda_2, lambda_3, ...)

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

    std::string to_string() const;  // "3,2,1"; empty partition -> "0"
    static Partition parse(const std::string& text);

  private:
    std::vector<int> parts_;
};

// Strict total order refining dominance: degree first, then first-difference-smaller-part
// first.  Within one degree this lists (1^n) first and (n) last; the classical
// reverse-lexicographic listing (n), (n-1,1), ..., (1^n) is this order reversed.
bool total_less(const Partition& a, const Partition& b);

struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const { return total_less(a, b); }
};

// Dominance order; both partitions must have the same size.
bool dominance_leq(const Partition& a, const Partition& b);

// All partitions of n with parts <= max_part, in reverse-lexicographic listing order
// ((n) first when max_part >= n).
std::vector<Partition> partitions_of(int n, int max_part = -1);

// Main hook length lambda_1 + length - 1; empty partition -> 0.
int main_hook_length(const Partition& lambda);

// Hook length of cell (r, c) of the partition diagram, rows/cols 0-based, French
// (row 0 is the bottom row of length lambda_1): arm + leg + 1.
int hook_length(const Partition& lambda, int r, int c);

// arm(s) = cells strictly east, leg(s) = cells strictly north of s = (r, c).
int arm_length(const Partition& lambda, int r, int c);
int leg_length(const Partition& lambda, int r, int c);

// mu/lambda is a horizontal strip: lambda <= mu componentwise and no column gains two cells.
bool is_horizontal_strip(const Partition& inner, const Partition& outer);
// mu/lambda is a vertical strip: no row gains two cells.
bool is_vertical_strip(const Partition& inner, const Partition& outer);

// All mu containing lambda with mu/lambda a horizontal (resp. vertical) strip of the given
// size, optionally bounded by max_part; reverse-lexicographic listing order.
std::vector<Partition> horizontal_strip_extensions(const Partition& lambda, int strip,
                                                   int max_part = -1);
std::vector<Partition> vertical_strip_extensions(const Partition& lambda, int strip,
                                                 int max_part = -1);

// Skew diagram outer/inner with inner contained in outer.  Rows are indexed bottom-to-top
// from 0; row i occupies columns inner_i .. outer_i - 1 (0-based).
struct SkewDiagram {
    Partition outer;
    Partition inner;

    SkewDiagram() = default;
    SkewDiagram(Partition out, Partition in);

    int rows() const { return outer.length(); }
    int row_begin(int i) const { return inner.part(i); }
    int row_end(int i) const { return outer.part(i); }
    int row_length(int i) const { return row_end(i) - row_begin(i); }
    bool empty() const { return outer.empty(); }

    // Row lengths bottom-to-top.
    std::vector<int> row_lengths() const;

    // Largest hook length over the cells (arm = cells east in row, leg = cells north in
    // column, within the diagram); 0 for the empty diagram.
    int max_hook() const;

    bool operator==(const SkewDiagram& o) const { return outer == o.outer && inner == o.inner; }
};

// k-split: cut lambda (with lambda_1 <= k) top-down into blocks whose main hook length is
// exactly k for every non-final block (the final block may come short).
std::vector<Partition> k_split(const Partition& lambda, int k);

// k-rectangles are the partitions (ell^(k+1-ell)) for 1 <= ell <= k.
bool is_k_rectangle(const Partition& lambda, int k);
std::vector<Partition> k_rectangles(int k);

// lambda is k-irreducible: k-bounded with at most k - j parts equal to j for every j.
bool is_k_irreducible(const Partition& lambda, int k);

// All k! k-irreducible partitions, sorted by (degree, total order); optionally only those of
// the given degree.
std::vector<Partition> enumerate_k_irreducible(int k);
std::vector<Partition> enumerate_k_irreducible(int k, int degree);

// Split lambda into its k-irreducible core plus the multiset of removed k-rectangles.
struct KRectangleDecomposition {
    Partition core;
    std::vector<Partition> rectangles;
};
KRectangleDecomposition k_rectangle_decompose(const Partition& lambda, int k);

// k-multiplication m x^(k) D: shift D one column right and attach a leftmost column of m
// cells at the lowest starting row that keeps the result a skew diagram with all hook
// lengths <= k.  Requires m <= k.
SkewDiagram k_multiply(int m, const SkewDiagram& d, int k);

// k-conjugate: row lengths of lambda_1 x^(k) (lambda_2 x^(k) (... x^(k) empty)).
Partition k_conjugate(const Partition& lambda, int k);

// The k-conjugation-built diagram itself (used for rigidity checks).
SkewDiagram k_multiply_chain(const Partition& lambda, int k);

// Flip involution on k-irreducible partitions: the multiplicity n_j of each part
// value k - j (with n_j <= j) is replaced by j - n_j.
Partition flip(const Partition& lambda, int k);

// Largest k-irreducible partition ((k-1)^1, (k-2)^2, ..., 1^(k-1)) = flip of the empty one.
Partition maximal_k_irreducible(int k);

void require_k_bounded(const Partition& lambda, int k, const char* what);

}  // namespace katabol
