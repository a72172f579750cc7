#pragma once

// Shared helpers for the test binaries: compact literals for words, tableaux and
// partitions, plus small independent oracles used to pin derived expectations.

#include <functional>
#include <string>
#include <vector>

#include "katabol/partition.hpp"
#include "katabol/tableau.hpp"
#include "katabol/word.hpp"

namespace kt {

// "9472581236" -> word of single-digit letters.
inline katabol::Word w(const std::string& digits) {
    katabol::Word out;
    for (char c : digits) {
        if (c < '1' || c > '9') throw std::runtime_error("digit word expects 1..9");
        out.push_back(c - '0');
    }
    return out;
}

// Tableau from its reading word written in digits (errors if not a tableau word).
inline katabol::Tableau tab(const std::string& digits) {
    return katabol::tableau_from_word(w(digits));
}

inline katabol::Partition p(std::vector<int> parts) { return katabol::Partition(std::move(parts)); }

// "3,2,1" -> partition; the empty string is the empty partition.
inline katabol::Partition p(const char* spec) {
    std::string parts(spec);
    std::vector<int> out;
    size_t pos = 0;
    while (pos < parts.size()) {
        size_t next = parts.find(',', pos);
        if (next == std::string::npos) next = parts.size();
        out.push_back(std::stoi(parts.substr(pos, next - pos)));
        pos = next + 1;
    }
    return katabol::Partition(std::move(out));
}

inline std::vector<katabol::Tableau> tabs(const std::vector<std::string>& words) {
    std::vector<katabol::Tableau> out;
    for (const auto& s : words) out.push_back(tab(s));
    return out;
}

// Independent dominance oracle: prefix sums of a never exceed those of b.
inline bool dominance_oracle(const katabol::Partition& a, const katabol::Partition& b) {
    int n = std::max(a.length(), b.length());
    int pa = 0, pb = 0;
    for (int i = 0; i < n; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa > pb) return false;
    }
    return true;
}

// Count semistandard tableaux of the given shape and content by direct backtracking over
// cells; independent of the promotion-based generator.  Cells are filled row by row from
// the bottom, left to right, keeping rows weakly and columns strictly increasing.
inline int ssyt_count(const katabol::Partition& shape, const std::vector<int>& content) {
    std::vector<int> remaining = content;
    std::vector<std::vector<int>> rows(shape.length());
    for (int i = 0; i < shape.length(); ++i) rows[i].assign(shape.part(i), 0);
    int letters = static_cast<int>(content.size());

    std::function<int(int, int)> fill = [&](int r, int c) -> int {
        if (r == shape.length()) return 1;
        if (c == shape.part(r)) return fill(r + 1, 0);
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);
        if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
        int total = 0;
        for (int v = lo; v <= letters; ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            rows[r][c] = v;
            total += fill(r, c + 1);
            ++remaining[v - 1];
        }
        return total;
    };
    int total_cells = 0;
    for (int v : content) total_cells += v;
    if (total_cells != shape.size()) return 0;
    return fill(0, 0);
}

}  // namespace kt
