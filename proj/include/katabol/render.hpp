#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "katabol/atoms.hpp"
#include "katabol/schur.hpp"

namespace katabol {

using Json = nlohmann::json;

// JSON forms.  Stable: object keys serialize alphabetically, arrays follow the library's
// canonical orders, big-integer coefficients are decimal strings.
Json partition_json(const Partition& p);       // [3,2,1]; empty partition -> []
Json poly_json(const BivariatePoly& f);        // [{"c":"1","q":0,"t":2}, ...] by (q,t)
Json tableau_json(const Tableau& t);           // {"rows":[[...],...]} bottom row first
Json tableau_set_json(const TableauSet& s);    // [tableau, ...]
Json expansion_json(const PolyExpansion& f);   // [{"partition":[...],"poly":[...]}, ...]
Json verdict_json(const Verdict& v);           // {"claim","parameters","status","witness"?}
Json poset_json(const RankedPoset& p);         // {"vertices":[...],"edges":[...]}
Json copies_json(const CopyDecomposition& d);  // {"copies":[...],"verdict":{...}}

// Inverses used by the on-disk cache.
Partition partition_from_json(const Json& j);
Tableau tableau_from_json(const Json& j);
std::vector<Tableau> tableaux_from_json(const Json& j);

// LaTeX forms.  A polynomial renders like "1+qt^{2}"; an expansion renders each term as
// <coefficient>\, <symbol>_{parts} with the coefficient omitted when it is 1 and
// parenthesized when it has several terms, e.g. "S_{2,1,1}+t\,S_{3,1}".  A nonnegative
// level adds the superscript ^{(k)} after the symbol.
std::string latex_poly(const BivariatePoly& f);
std::string latex_expansion(const PolyExpansion& f, const std::string& symbol, int level = -1);

// Plain-text forms.
std::string ascii_tableau(const Tableau& t);          // one row per line, top row first
std::string ascii_expansion(const PolyExpansion& f);  // "<parts>: <poly>" per line
std::string ascii_poset(const RankedPoset& p);

// DOT form: one node per vertex, clusters by charge rank, edges low -> high; labels are
// comma-joined shape parts, or the comma-joined tableau word when filled is set.
std::string dot_poset(const RankedPoset& p, bool filled);

}  // namespace katabol
