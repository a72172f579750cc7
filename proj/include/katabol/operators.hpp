#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "katabol/partition.hpp"
#include "katabol/tableau.hpp"

namespace katabol {

// All ways to append a horizontal r-strip of the next letter (max letter + 1).
std::vector<Tableau> add_row_strip(int r, const Tableau& t);

// Row promotion: sigma_1 ... sigma_m applied (rightmost first) to each strip extension;
// outputs have evaluation (r, old evaluation).
std::vector<Tableau> promote(int r, const Tableau& t);
TableauSet promote(int r, const TableauSet& s);

// All ways to append horizontal ell-strips of the next h letters, one letter at a time,
// keeping the reading word restricted to the added letters Yamanouchi after each strip.
std::vector<Tableau> add_rectangle_strips(int ell, int h, const Tableau& t);

// Rectangular promotion: sigma^(h)_1 ... sigma^(h)_m after the strip additions; outputs
// have evaluation (ell^h, old evaluation).
std::vector<Tableau> promote_rect(int ell, int h, const Tableau& t);
TableauSet promote_rect(int ell, int h, const TableauSet& s);

// Katabolism: remove the lambda-shaped corner, push what is left of the first
// length(lambda) rows to the northwest of the remaining rows, and re-insert the combined
// reading word.  No result when lambda is not contained in the shape.
std::optional<Tableau> katabolism(const Partition& lambda, const Tableau& t);

// Restricted katabolism additionally requires the removed corner to be constant-rowed
// (row j filled with m + j + 1 for some m >= 0).
std::optional<Tableau> restricted_katabolism(const Partition& lambda, const Tableau& t);

// Filtering: t survives when the chain of restricted katabolisms by the partitions of the
// sequence (first entry applied first) ends at the empty tableau.
bool filter_keep(const std::vector<Partition>& sequence, const Tableau& t);
TableauSet filter_set(const std::vector<Partition>& sequence, const TableauSet& s);

// All tableaux of evaluation mu, built by iterated row promotion from the empty tableau.
TableauSet generate_tableaux(const Partition& mu);

// The atom indexed by a k-bounded partition: row promotion by each part (smallest part
// first) with one k-split filtering pass per level.  Memoized in process memory; an
// optional external cache hook may supply/store results keyed by (k, lambda).
TableauSet generate_atom(const Partition& lambda, int k);

struct AtomCacheHooks {
    std::function<std::optional<std::vector<Tableau>>(const Partition&, int)> load;
    std::function<void(const Partition&, int, const std::vector<Tableau>&)> store;
};
// Replaces the hooks (empty functions disable); returns the previous hooks.
AtomCacheHooks set_atom_cache_hooks(AtomCacheHooks hooks);
void clear_atom_memo();

// Closed form for the atom of a k-irreducible hook (m, 1^r): one tableau when the main
// hook fits (r + m <= k), otherwise two.
TableauSet hook_atom(int m, int r, int k);

}  // namespace katabol
