#include "katabol/render.hpp"

#include <sstream>

#include "katabol/errors.hpp"

namespace katabol {

Json partition_json(const Partition& p) {
    Json j = Json::array();
    for (int part : p.parts()) j.push_back(part);
    return j;
}

Json poly_json(const BivariatePoly& f) {
    Json j = Json::array();
    for (const auto& [key, c] : f.terms())
        j.push_back(Json{{"c", c.str()}, {"q", key.first}, {"t", key.second}});
    return j;
}

Json tableau_json(const Tableau& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows()) rows.push_back(row);
    return Json{{"rows", rows}};
}

Json tableau_set_json(const TableauSet& s) {
    Json j = Json::array();
    for (const Tableau& t : s.members()) j.push_back(tableau_json(t));
    return j;
}

Json expansion_json(const PolyExpansion& f) {
    Json j = Json::array();
    for (const auto& [index, c] : f.terms())
        j.push_back(Json{{"partition", partition_json(index)}, {"poly", poly_json(c)}});
    return j;
}

Json verdict_json(const Verdict& v) {
    Json j{{"claim", v.claim}, {"parameters", v.parameters}, {"status", to_string(v.status)}};
    if (!v.witness.empty()) j["witness"] = v.witness;
    return j;
}

namespace {

const char* tag_name(EdgeTag tag) {
    switch (tag) {
        case EdgeTag::up: return "up";
        case EdgeTag::down: return "down";
        default: return "both";
    }
}

}  // namespace

Json poset_json(const RankedPoset& p) {
    Json vertices = Json::array();
    for (const PosetVertex& v : p.vertices) {
        Json jv{{"rank", v.rank}, {"shape", partition_json(v.shape)}};
        if (v.tableau) jv["tableau"] = tableau_json(*v.tableau);
        vertices.push_back(std::move(jv));
    }
    Json edges = Json::array();
    for (const PosetEdge& e : p.edges)
        edges.push_back(Json{{"high", e.high}, {"low", e.low}, {"tag", tag_name(e.tag)}});
    return Json{{"edges", edges}, {"vertices", vertices}};
}

Json copies_json(const CopyDecomposition& d) {
    Json copies = Json::array();
    for (const Copy& c : d.copies)
        copies.push_back(
            Json{{"index", tableau_json(c.index)}, {"members", tableau_set_json(c.members)}});
    return Json{{"copies", copies}, {"verdict", verdict_json(d.verdict)}};
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw invalid_input("partition JSON must be an array of parts");
    std::vector<int> parts;
    for (const Json& x : j) parts.push_back(x.get<int>());
    return Partition(parts);
}

Tableau tableau_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows"))
        throw invalid_input("tableau JSON must be an object with a rows array");
    std::vector<std::vector<int>> rows;
    for (const Json& row : j.at("rows")) rows.push_back(row.get<std::vector<int>>());
    return Tableau(rows);
}

std::vector<Tableau> tableaux_from_json(const Json& j) {
    if (!j.is_array()) throw invalid_input("tableau list JSON must be an array");
    std::vector<Tableau> out;
    for (const Json& x : j) out.push_back(tableau_from_json(x));
    return out;
}

namespace {

// "q^{2}t^{3}" piece of a monomial; empty for the constant monomial.
std::string latex_vars(int qe, int te) {
    std::string s;
    if (qe != 0) {
        s += "q";
        if (qe != 1) s += "^{" + std::to_string(qe) + "}";
    }
    if (te != 0) {
        s += "t";
        if (te != 1) s += "^{" + std::to_string(te) + "}";
    }
    return s;
}

std::string latex_monomial(const Integer& c, int qe, int te) {
    const std::string vars = latex_vars(qe, te);
    if (vars.empty()) return c.str();
    if (c == 1) return vars;
    if (c == -1) return "-" + vars;
    return c.str() + vars;
}

std::string join_terms(const std::vector<std::string>& terms) {
    std::string s;
    for (const std::string& term : terms) {
        if (!s.empty() && term.front() != '-') s += "+";
        s += term;
    }
    return s.empty() ? "0" : s;
}

}  // namespace

std::string latex_poly(const BivariatePoly& f) {
    std::vector<std::string> terms;
    for (const auto& [key, c] : f.terms())
        terms.push_back(latex_monomial(c, key.first, key.second));
    return join_terms(terms);
}

std::string latex_expansion(const PolyExpansion& f, const std::string& symbol, int level) {
    std::vector<std::string> terms;
    for (const auto& [index, c] : f.terms()) {
        std::string coeff;
        if (!(c == BivariatePoly(1))) {
            coeff = latex_poly(c);
            if (c.terms().size() > 1) coeff = "(" + coeff + ")";
            coeff += "\\,";
        }
        std::string base = symbol + "_{" + index.to_string() + "}";
        if (level >= 0) base += "^{(" + std::to_string(level) + ")}";
        terms.push_back(coeff + base);
    }
    return join_terms(terms);
}

std::string ascii_tableau(const Tableau& t) {
    if (t.empty()) return "(empty)\n";
    std::ostringstream out;
    for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) {
        for (size_t i = 0; i < it->size(); ++i) {
            if (i) out << ' ';
            out << (*it)[i];
        }
        out << '\n';
    }
    return out.str();
}

std::string ascii_expansion(const PolyExpansion& f) {
    if (f.is_zero()) return "0\n";
    std::ostringstream out;
    for (const auto& [index, c] : f.terms())
        out << index.to_string() << ": " << c.to_string() << '\n';
    return out.str();
}

namespace {

std::string word_label(const Tableau& t) {
    const Word w = t.reading_word();
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s;
}

}  // namespace

std::string ascii_poset(const RankedPoset& p) {
    std::ostringstream out;
    for (size_t i = 0; i < p.vertices.size(); ++i) {
        const PosetVertex& v = p.vertices[i];
        out << i << " rank " << v.rank << " shape " << v.shape.to_string();
        if (v.tableau) out << " word " << word_label(*v.tableau);
        out << '\n';
    }
    for (const PosetEdge& e : p.edges)
        out << e.low << " -- " << e.high << " (" << tag_name(e.tag) << ")\n";
    return out.str();
}

std::string dot_poset(const RankedPoset& p, bool filled) {
    std::ostringstream out;
    out << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
    std::map<int, std::vector<int>> by_rank;
    for (size_t i = 0; i < p.vertices.size(); ++i)
        by_rank[p.vertices[i].rank].push_back(static_cast<int>(i));
    for (const auto& [rank, ids] : by_rank) {
        out << "  subgraph cluster_charge_" << rank << " {\n    label=\"charge " << rank
            << "\";\n";
        for (int id : ids) {
            const PosetVertex& v = p.vertices[id];
            std::string label = filled && v.tableau ? word_label(*v.tableau)
                                                    : v.shape.to_string();
            out << "    v" << id << " [label=\"" << label << "\"];\n";
        }
        out << "  }\n";
    }
    for (const PosetEdge& e : p.edges)
        out << "  v" << e.low << " -> v" << e.high << " [style=solid];\n";
    out << "}\n";
    return out.str();
}

}  // namespace katabol
