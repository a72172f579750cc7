#include "katabol/word.hpp"

#include <algorithm>

namespace katabol {

std::vector<int> evaluation(const Word& w) {
    std::vector<int> ev;
    for (int x : w) {
        if (x < 1) throw invalid_input("letters must be positive, got " + std::to_string(x));
        if (x > static_cast<int>(ev.size())) ev.resize(x, 0);
        ++ev[x - 1];
    }
    return ev;
}

bool is_partition_evaluation(const Word& w) {
    std::vector<int> ev = evaluation(w);
    for (size_t i = 1; i < ev.size(); ++i)
        if (ev[i] > ev[i - 1]) return false;
    return true;
}

Word sigma(int i, const Word& w) {
    if (i < 1) throw invalid_input("sigma index must be positive");
    const int a = i, b = i + 1;
    std::vector<int> positions;
    for (int p = 0; p < static_cast<int>(w.size()); ++p)
        if (w[p] == a || w[p] == b) positions.push_back(p);
    // Bracket matching on the {a,b}-subword: each b opens, a closes the innermost open b.
    std::vector<int> stack;
    std::vector<int> unpaired;
    for (int p : positions) {
        if (w[p] == b) {
            stack.push_back(p);
        } else if (!stack.empty()) {
            stack.pop_back();
        } else {
            unpaired.push_back(p);
        }
    }
    int r = static_cast<int>(unpaired.size());          // unpaired a's (all precede the b's)
    unpaired.insert(unpaired.end(), stack.begin(), stack.end());
    int s = static_cast<int>(unpaired.size()) - r;      // unpaired b's
    Word out = w;
    for (int t = 0; t < static_cast<int>(unpaired.size()); ++t)
        out[unpaired[t]] = t < s ? a : b;               // residue a^r b^s -> a^s b^r
    return out;
}

Word sort_evaluation(const Word& w) {
    Word cur = w;
    for (;;) {
        std::vector<int> ev = evaluation(cur);
        int swap_at = -1;
        for (size_t i = 1; i < ev.size(); ++i) {
            if (ev[i] > ev[i - 1]) {
                swap_at = static_cast<int>(i);
                break;
            }
        }
        if (swap_at < 0) return cur;
        cur = sigma(swap_at, cur);
    }
}

int charge(const Word& w) {
    Word v = is_partition_evaluation(w) ? w : sort_evaluation(w);
    const int n = static_cast<int>(v.size());
    if (n == 0) return 0;
    std::vector<char> labeled(n, 0);
    int remaining = n;
    int total = 0;
    while (remaining > 0) {
        // One pass: start at the marker, moving right-to-left through the word.
        int pos = n;  // marker position; the first step visits index n-1
        int level = 0;
        int target = 1;
        for (;;) {
            // find the next unlabeled occurrence of target, scanning at most one full circle
            int found = -1;
            int p = pos;
            for (int steps = 0; steps < n; ++steps) {
                --p;
                if (p < 0) {
                    p = n - 1;
                    ++level;
                }
                if (!labeled[p] && v[p] == target) {
                    found = p;
                    break;
                }
            }
            if (found < 0) break;  // no unlabeled occurrence anywhere: pass ends
            labeled[found] = 1;
            --remaining;
            total += level;
            pos = found;
            ++target;
        }
    }
    return total;
}

bool is_yamanouchi(const Word& w, const std::vector<int>& letters) {
    std::vector<int> counts(letters.size(), 0);
    for (int p = static_cast<int>(w.size()) - 1; p >= 0; --p) {
        for (size_t j = 0; j < letters.size(); ++j) {
            if (w[p] == letters[j]) {
                ++counts[j];
                if (j > 0 && counts[j] > counts[j - 1]) return false;
            }
        }
    }
    return true;
}

}  // namespace katabol
