#include "katabol/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace katabol {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw invalid_input("partition parts must be positive, got " +
                                std::to_string(parts_[i]));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw invalid_input("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

long long Partition::n_stat() const {
    long long s = 0;
    for (int i = 0; i < length(); ++i) s += static_cast<long long>(i) * parts_[i];
    return s;
}

Partition Partition::conjugate() const {
    std::vector<int> out(first(), 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c) ++out[c];
    return Partition(out);
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

Partition Partition::removed_first_part() const {
    if (empty()) throw invalid_input("cannot remove a part from the empty partition");
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::string Partition::to_string() const {
    if (empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    if (text.empty() || text == "0") return Partition();
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            if (v == 0) continue;  // tolerate explicit zeros
            parts.push_back(v);
        } catch (const std::exception&) {
            throw invalid_input("cannot parse partition entry '" + item + "' in '" + text + "'");
        }
    }
    return Partition(parts);
}

bool total_less(const Partition& a, const Partition& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    int n = std::max(a.length(), b.length());
    for (int i = 0; i < n; ++i) {
        if (a.part(i) != b.part(i)) return a.part(i) < b.part(i);
    }
    return false;
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw invalid_input("dominance order needs equal sizes, got |a|=" +
                            std::to_string(a.size()) + " |b|=" + std::to_string(b.size()));
    int n = std::max(a.length(), b.length());
    int pa = 0, pb = 0;
    for (int i = 0; i < n; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa > pb) return false;
    }
    return true;
}

namespace {
void partitions_rec(int n, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(n - p, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n, int max_part) {
    if (n < 0) throw invalid_input("partitions_of: negative degree");
    if (max_part < 0) max_part = n;
    std::vector<Partition> out;
    std::vector<int> acc;
    if (n == 0) out.push_back(Partition());
    else if (max_part > 0) partitions_rec(n, max_part, acc, out);
    return out;
}

int main_hook_length(const Partition& lambda) {
    return lambda.empty() ? 0 : lambda.first() + lambda.length() - 1;
}

int arm_length(const Partition& lambda, int r, int c) { return lambda.part(r) - c - 1; }

int leg_length(const Partition& lambda, int r, int c) {
    int leg = 0;
    for (int i = r + 1; i < lambda.length() && lambda.part(i) > c; ++i) ++leg;
    return leg;
}

int hook_length(const Partition& lambda, int r, int c) {
    if (c >= lambda.part(r)) throw invalid_input("hook_length: cell outside diagram");
    return arm_length(lambda, r, c) + leg_length(lambda, r, c) + 1;
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
    if (!outer.contains(inner)) return false;
    // No column gains two cells: outer_{i+1} <= inner_i.
    for (int i = 0; i + 1 < outer.length(); ++i)
        if (outer.part(i + 1) > inner.part(i)) return false;
    return true;
}

bool is_vertical_strip(const Partition& inner, const Partition& outer) {
    if (!outer.contains(inner)) return false;
    for (int i = 0; i < outer.length(); ++i)
        if (outer.part(i) - inner.part(i) > 1) return false;
    return true;
}

std::vector<Partition> horizontal_strip_extensions(const Partition& lambda, int strip,
                                                   int max_part) {
    if (strip < 0) throw invalid_input("strip size must be nonnegative");
    // Generate-and-filter; degrees in play are small.
    std::vector<Partition> out;
    int n = lambda.size() + strip;
    for (const Partition& mu : partitions_of(n, max_part < 0 ? n : max_part)) {
        if (is_horizontal_strip(lambda, mu)) out.push_back(mu);
    }
    return out;
}

std::vector<Partition> vertical_strip_extensions(const Partition& lambda, int strip,
                                                 int max_part) {
    if (strip < 0) throw invalid_input("strip size must be nonnegative");
    std::vector<Partition> out;
    int n = lambda.size() + strip;
    for (const Partition& mu : partitions_of(n, max_part < 0 ? n : max_part)) {
        if (is_vertical_strip(lambda, mu)) out.push_back(mu);
    }
    return out;
}

SkewDiagram::SkewDiagram(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    if (!outer.contains(inner))
        throw invalid_input("skew diagram requires inner " + inner.to_string() +
                            " contained in outer " + outer.to_string());
}

std::vector<int> SkewDiagram::row_lengths() const {
    std::vector<int> out;
    for (int i = 0; i < rows(); ++i) out.push_back(row_length(i));
    return out;
}

int SkewDiagram::max_hook() const {
    int best = 0;
    for (int r = 0; r < rows(); ++r) {
        for (int c = row_begin(r); c < row_end(r); ++c) {
            int arm = row_end(r) - c - 1;
            int leg = 0;
            for (int i = r + 1; i < rows() && row_begin(i) <= c && c < row_end(i); ++i) ++leg;
            best = std::max(best, arm + leg + 1);
        }
    }
    return best;
}

std::vector<Partition> k_split(const Partition& lambda, int k) {
    if (k < 1) throw invalid_input("k must be at least 1");
    require_k_bounded(lambda, k, "k_split");
    std::vector<Partition> blocks;
    std::vector<int> block;
    for (int i = 0; i < lambda.length(); ++i) {
        block.push_back(lambda.part(i));
        if (block.front() + static_cast<int>(block.size()) - 1 == k) {
            blocks.push_back(Partition(block));
            block.clear();
        }
    }
    if (!block.empty()) blocks.push_back(Partition(block));
    return blocks;
}

bool is_k_rectangle(const Partition& lambda, int k) {
    if (lambda.empty()) return false;
    int ell = lambda.first();
    return ell >= 1 && ell <= k && lambda.length() == k + 1 - ell &&
           lambda.multiplicity(ell) == lambda.length();
}

std::vector<Partition> k_rectangles(int k) {
    std::vector<Partition> out;
    for (int ell = k; ell >= 1; --ell)
        out.push_back(Partition(std::vector<int>(k + 1 - ell, ell)));
    return out;
}

bool is_k_irreducible(const Partition& lambda, int k) {
    if (k < 1) throw invalid_input("k must be at least 1");
    if (lambda.first() > k - 1) return false;
    for (int j = 1; j <= k - 1; ++j)
        if (lambda.multiplicity(j) > k - j) return false;
    return true;
}

std::vector<Partition> enumerate_k_irreducible(int k) {
    if (k < 1) throw invalid_input("k must be at least 1");
    std::vector<Partition> out;
    std::vector<int> mult(k, 0);  // mult[j] = count of parts equal to j, j = 1..k-1
    // Depth-first over multiplicities.
    std::vector<int> parts;
    struct Rec {
        int k;
        std::vector<Partition>* out;
        void go(int j, std::vector<int>& parts) {
            if (j == 0) {
                out->push_back(Partition(parts));
                return;
            }
            for (int m = 0; m <= k - j; ++m) {
                for (int t = 0; t < m; ++t) parts.push_back(j);
                go(j - 1, parts);
                for (int t = 0; t < m; ++t) parts.pop_back();
            }
        }
    } rec{k, &out};
    rec.go(k - 1, parts);
    std::sort(out.begin(), out.end(), total_less);
    return out;
}

std::vector<Partition> enumerate_k_irreducible(int k, int degree) {
    std::vector<Partition> out;
    for (const Partition& p : enumerate_k_irreducible(k))
        if (p.size() == degree) out.push_back(p);
    return out;
}

KRectangleDecomposition k_rectangle_decompose(const Partition& lambda, int k) {
    require_k_bounded(lambda, k, "k_rectangle_decompose");
    KRectangleDecomposition out;
    std::vector<int> core;
    for (int j = k; j >= 1; --j) {
        int m = lambda.multiplicity(j);
        int group = k + 1 - j;
        int strips = m / group;
        int rest = m % group;
        for (int s = 0; s < strips; ++s)
            out.rectangles.push_back(Partition(std::vector<int>(group, j)));
        for (int s = 0; s < rest; ++s) core.push_back(j);
    }
    out.core = Partition(core);
    if (!is_k_irreducible(out.core, k))
        throw arithmetic_error("k-rectangle decomposition produced a reducible core");
    return out;
}

SkewDiagram k_multiply(int m, const SkewDiagram& d, int k) {
    if (m < 1 || m > k)
        throw invalid_input("k_multiply: column height " + std::to_string(m) +
                            " must lie in 1.." + std::to_string(k));
    int n = d.rows();
    // Rows of d with offset 0 form the top block (offsets weakly decrease upward).
    int z = 0;
    for (int i = n - 1; i >= 0 && d.inner.part(i) == 0; --i) ++z;
    int h_min = std::max(0, n - z);      // 0-based bottom row of the new column
    int h_max = n;                       // entirely above d
    for (int h = h_min; h <= h_max; ++h) {
        bool ok = true;
        for (int j = h; j < std::min(h + m, n); ++j) {
            int leg = h + m - 1 - j;
            int hook = leg + d.row_length(j) + 1;
            if (hook > k) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        std::vector<int> outer, inner;
        int total_rows = std::max(n, h + m);
        for (int i = 0; i < total_rows; ++i) {
            int in = i < n ? d.inner.part(i) + 1 : 0;
            int out = i < n ? d.outer.part(i) + 1 : 0;
            if (i >= h && i < h + m) {
                in = 0;
                if (out == 0) out = 1;
            }
            outer.push_back(out);
            inner.push_back(in);
        }
        // inner may carry trailing zeros; Partition() drops them
        return SkewDiagram(Partition(outer), Partition(inner));
    }
    throw arithmetic_error("k_multiply found no admissible placement (m=" + std::to_string(m) +
                           ", k=" + std::to_string(k) + ")");
}

SkewDiagram k_multiply_chain(const Partition& lambda, int k) {
    require_k_bounded(lambda, k, "k-conjugation");
    SkewDiagram d;
    for (int i = lambda.length() - 1; i >= 0; --i) d = k_multiply(lambda.part(i), d, k);
    return d;
}

Partition k_conjugate(const Partition& lambda, int k) {
    SkewDiagram d = k_multiply_chain(lambda, k);
    std::vector<int> lens = d.row_lengths();
    for (size_t i = 1; i < lens.size(); ++i)
        if (lens[i] > lens[i - 1])
            throw arithmetic_error("k-conjugate row lengths are not a partition for " +
                                   lambda.to_string());
    return Partition(lens);
}

Partition flip(const Partition& lambda, int k) {
    if (!is_k_irreducible(lambda, k))
        throw invalid_input("flip requires a k-irreducible partition, got " + lambda.to_string() +
                            " at k=" + std::to_string(k));
    std::vector<int> parts;
    for (int j = k - 1; j >= 1; --j) {
        int n_j = lambda.multiplicity(j);
        int want = (k - j) - n_j;  // multiplicity index i with j = k - i runs over 1..k-1
        for (int t = 0; t < want; ++t) parts.push_back(j);
    }
    return Partition(parts);
}

Partition maximal_k_irreducible(int k) { return flip(Partition(), k); }

void require_k_bounded(const Partition& lambda, int k, const char* what) {
    if (k < 1) throw invalid_input(std::string(what) + ": k must be at least 1");
    if (lambda.first() > k)
        throw invalid_input(std::string(what) + ": partition " + lambda.to_string() +
                            " is not " + std::to_string(k) + "-bounded (part " +
                            std::to_string(lambda.first()) + " exceeds k=" + std::to_string(k) +
                            ")");
}

}  // namespace katabol
