#include "katabol/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>
#include <utility>

#include "katabol/macdonald.hpp"
#include "katabol/operators.hpp"
#include "katabol/schur.hpp"

namespace katabol {

namespace {

using CellResult = std::pair<VerdictStatus, std::string>;
using CellFn = std::function<CellResult()>;

struct Job {
    std::string params;
    CellFn fn;
};

CellResult ok() { return {VerdictStatus::holds, ""}; }
CellResult bad(std::string witness) { return {VerdictStatus::counterexample, std::move(witness)}; }

std::string mu_k(const Partition& mu, int k) {
    return "mu=" + mu.to_string() + " k=" + std::to_string(k);
}
std::string lambda_k(const Partition& lambda, int k) {
    return "lambda=" + lambda.to_string() + " k=" + std::to_string(k);
}

// Multiply every coefficient by t^e.
PolyExpansion t_shifted(const PolyExpansion& f, int e) {
    PolyExpansion out;
    for (const auto& [idx, c] : f.terms()) out.add(idx, c.shifted(0, e));
    return out;
}

PolyExpansion unit(const Partition& lambda) {
    PolyExpansion e;
    e.add(lambda, BivariatePoly(1));
    return e;
}

// Enumerate (index, k) cells over k-bounded partitions within the spec's ranges.
template <class F>
void for_bounded(const JobSpec& s, F&& f) {
    for (int n = 0; n <= s.max_degree; ++n)
        for (int k = std::max(s.k_min, 1); k <= s.k_max; ++k)
            for (const Partition& lambda : partitions_of(n, k)) f(lambda, k);
}

void add_positivity(std::vector<Job>& out, const JobSpec& s) {
    for_bounded(s, [&](const Partition& mu, int k) {
        out.push_back({mu_k(mu, k), [mu, k]() -> CellResult {
                           const PolyExpansion h = macdonald_h(mu);
                           const AtomExpansion e = expand_in_atoms(h, k);
                           for (const auto& [lambda, c] : e.terms()) {
                               if (!c.is_polynomial() || !c.coefficients_nonnegative())
                                   return bad("coefficient at " + lambda.to_string() +
                                              " is not in N[q,t]: " + c.to_string());
                               const BivariatePoly slack = h.coeff(lambda) - c;
                               if (!slack.is_zero() && !slack.coefficients_nonnegative())
                                   return bad("coefficient at " + lambda.to_string() +
                                              " exceeds the Schur-basis weight");
                               if (c.evaluate(1, 1) > standard_tableau_count(lambda))
                                   return bad("specialized count at " + lambda.to_string() +
                                              " exceeds the standard tableau count");
                           }
                           for (const auto& [lambda, c] : h.terms())
                               if (c.evaluate(1, 1) != standard_tableau_count(lambda))
                                   return bad("classical weight at " + lambda.to_string() +
                                              " does not count standard tableaux");
                           return ok();
                       }});
    });
}

void add_decomposition(std::vector<Job>& out, const JobSpec& s) {
    for_bounded(s, [&](const Partition& mu, int k) {
        out.push_back({mu_k(mu, k), [mu, k]() -> CellResult {
                           const CopyDecomposition d = decompose_copies(mu, k);
                           if (d.verdict.status != VerdictStatus::holds)
                               return {d.verdict.status, d.verdict.witness};
                           size_t covered = 0;
                           PolyExpansion weights;
                           for (const Copy& c : d.copies) {
                               covered += c.members.members().size();
                               weights.add(c.index.shape(),
                                           BivariatePoly::monomial(1, 0, tableau_charge(c.index)));
                           }
                           if (covered != generate_tableaux(mu).members().size())
                               return bad("blocks do not cover the generated set");
                           if (!(weights == k_kostka(mu, k, false)))
                               return bad("block weights differ from the graded expansion");
                           return ok();
                       }});
    });
}

void add_pieri(std::vector<Job>& out, const JobSpec& s) {
    for_bounded(s, [&](const Partition& lambda, int k) {
        out.push_back({lambda_k(lambda, k), [lambda, k]() -> CellResult {
                           const PolyExpansion base = atom_function_t1(lambda, k);
                           for (int ell = 1; ell <= k; ++ell) {
                               PolyExpansion row_prod, col_prod;
                               for (const auto& [nu, c] : base.terms()) {
                                   row_prod += pieri_h(ell, nu).scaled(c);
                                   col_prod += pieri_e(ell, nu).scaled(c);
                               }
                               PolyExpansion row_sum, col_sum;
                               for (const Partition& mu :
                                    pieri_sets(lambda, ell, k, PieriKind::row))
                                   row_sum += atom_function_t1(mu, k);
                               for (const Partition& mu :
                                    pieri_sets(lambda, ell, k, PieriKind::column))
                                   col_sum += atom_function_t1(mu, k);
                               if (!(row_prod == row_sum))
                                   return bad("row rule fails at ell=" + std::to_string(ell));
                               if (!(col_prod == col_sum))
                                   return bad("column rule fails at ell=" + std::to_string(ell));
                           }
                           return ok();
                       }});
    });
}

void add_involution(std::vector<Job>& out, const JobSpec& s) {
    for_bounded(s, [&](const Partition& lambda, int k) {
        out.push_back({lambda_k(lambda, k), [lambda, k]() -> CellResult {
                           const Partition conj = k_conjugate(lambda, k);
                           if (conj.size() != lambda.size())
                               return bad("conjugate changes the degree: " + conj.to_string());
                           if (conj.first() > k)
                               return bad("conjugate leaves the level: " + conj.to_string());
                           if (k_conjugate(conj, k) != lambda)
                               return bad("applied twice gives " +
                                          k_conjugate(conj, k).to_string());
                           if (k >= lambda.size() && conj != lambda.conjugate())
                               return bad("large level does not degenerate to conjugation");
                           return ok();
                       }});
    });
}

void add_duality(std::vector<Job>& out, const JobSpec& s) {
    for_bounded(s, [&](const Partition& lambda, int k) {
        out.push_back({lambda_k(lambda, k), [lambda, k]() -> CellResult {
                           const OmegaDuality d = omega_duality_check(lambda, k);
                           if (!d.expansion_matches)
                               return bad("conjugated expansion differs from the inverted one");
                           if (!d.max_charge_unique)
                               return bad("maximal-charge member is not unique");
                           if (!d.max_charge_shape_matches)
                               return bad("maximal-charge shape is " +
                                          d.max_charge_shape.to_string());
                           return ok();
                       }});
    });
}

void add_unimodality(std::vector<Job>& out, const JobSpec& s) {
    for_bounded(s, [&](const Partition& lambda, int k) {
        out.push_back({lambda_k(lambda, k), [lambda, k]() -> CellResult {
                           const UnimodalityResult r = unimodality_check(lambda, k);
                           if (!r.unimodal) {
                               std::string counts;
                               for (const Integer& c : r.counts) {
                                   if (!counts.empty()) counts += ",";
                                   counts += c.str();
                               }
                               return bad("charge profile " + counts + " is not unimodal");
                           }
                           return ok();
                       }});
    });
}

void add_flip(std::vector<Job>& out, const JobSpec& s) {
    for (int k = std::max(s.k_min, 1); k <= s.k_max; ++k) {
        out.push_back({"k=" + std::to_string(k) + " involution", [k]() -> CellResult {
                           const Partition top = maximal_k_irreducible(k);
                           if (flip(Partition(), k) != top)
                               return bad("flip of the empty partition is not maximal");
                           for (const Partition& lambda : enumerate_k_irreducible(k)) {
                               const Partition f = flip(lambda, k);
                               if (!is_k_irreducible(f, k))
                                   return bad("flip of " + lambda.to_string() +
                                              " is not irreducible");
                               if (f.size() + lambda.size() != top.size())
                                   return bad("flip of " + lambda.to_string() +
                                              " misses the complementary degree");
                               if (flip(f, k) != lambda)
                                   return bad("flip applied twice moves " + lambda.to_string());
                           }
                           return ok();
                       }});
        if (k >= 2 && k <= 4) {
            out.push_back({"k=" + std::to_string(k) + " poset", [k]() -> CellResult {
                               const RankedPoset ps = irreducible_e1_poset(k);
                               std::vector<int> sizes;
                               for (const Integer& c : irreducible_rank_counts(k))
                                   sizes.push_back(static_cast<int>(c));
                               if (ps.rank_sizes() != sizes)
                                   return bad("rank sizes differ from the product formula");
                               if (!ps.is_connected()) return bad("poset is not connected");
                               std::map<std::vector<int>, int> pos;
                               for (size_t i = 0; i < ps.vertices.size(); ++i)
                                   pos.emplace(ps.vertices[i].shape.parts(),
                                               static_cast<int>(i));
                               std::vector<int> perm(ps.vertices.size());
                               for (size_t i = 0; i < ps.vertices.size(); ++i) {
                                   auto it = pos.find(flip(ps.vertices[i].shape, k).parts());
                                   if (it == pos.end())
                                       return bad("flip image missing from the vertex list");
                                   perm[i] = it->second;
                               }
                               const int n = static_cast<int>(ps.vertices.size());
                               for (int i = 0; i < n; ++i)
                                   for (int j = 0; j < n; ++j)
                                       if (ps.adjacent(i, j) != ps.adjacent(perm[i], perm[j]))
                                           return bad("adjacency is not flip-invariant at " +
                                                      ps.vertices[i].shape.to_string() + " / " +
                                                      ps.vertices[j].shape.to_string());
                               return ok();
                           }});
        }
    }
}

void add_hooks(std::vector<Job>& out, const JobSpec& s) {
    for (int k = std::max(s.k_min, 1); k <= s.k_max; ++k) {
        out.push_back({"k=" + std::to_string(k), [k]() -> CellResult {
                           for (int m = 1; m < k; ++m) {
                               for (int r = 0; r < k; ++r) {
                                   std::vector<int> parts{m};
                                   parts.insert(parts.end(), r, 1);
                                   const Partition hook(parts);
                                   if (!is_k_irreducible(hook, k)) continue;
                                   if (!(hook_atom(m, r, k) == generate_atom(hook, k)))
                                       return bad("closed form differs at " + hook.to_string());
                               }
                           }
                           return ok();
                       }});
    }
}

void add_coproduct(std::vector<Job>& out, const JobSpec& s) {
    for_bounded(s, [&](const Partition& lambda, int k) {
        out.push_back({lambda_k(lambda, k), [lambda, k]() -> CellResult {
                           const CoproductResult r = coproduct_g(lambda, k);
                           if (r.verdict.status != VerdictStatus::holds)
                               return {r.verdict.status, r.verdict.witness};
                           auto it = r.coeffs.find({Partition(), lambda});
                           if (it == r.coeffs.end() || !(it->second == BivariatePoly(1)))
                               return bad("empty-alphabet margin misses the delta term");
                           for (const auto& [key, c] : r.coeffs) {
                               if (key.first.empty() && key.second != lambda)
                                   return bad("empty-alphabet margin has extra pair at " +
                                              key.second.to_string());
                               if (key.second.empty() && key.first != lambda)
                                   return bad("empty-alphabet margin has extra pair at " +
                                              key.first.to_string());
                           }
                           return ok();
                       }});
    });
}

void add_rectangles(std::vector<Job>& out, const JobSpec& s) {
    for (int n = 0; n <= s.max_degree; ++n) {
        for (int k = std::max(s.k_min, 2); k <= s.k_max; ++k) {
            for (const Partition& lambda : partitions_of(n, k)) {
                out.push_back(
                    {lambda_k(lambda, k), [lambda, k]() -> CellResult {
                         for (int ell = 1; ell <= k; ++ell) {
                             const int h = k + 1 - ell;
                             std::vector<int> joined_parts = lambda.parts();
                             joined_parts.insert(joined_parts.end(), h, ell);
                             std::sort(joined_parts.begin(), joined_parts.end(),
                                       std::greater<int>());
                             const Partition joined(joined_parts);
                             const PolyExpansion lhs = schur_multiply(
                                 atom_function_t1(lambda, k),
                                 unit(Partition(std::vector<int>(h, ell))));
                             if (!(lhs == atom_function_t1(joined, k)))
                                 return bad("factorization fails at ell=" +
                                            std::to_string(ell));
                             const PolyExpansion f = schur_sum_by_charge(
                                 promote_rect(ell, h, generate_atom(lambda, k)));
                             int shift = 0;
                             bool first = true;
                             for (const auto& [idx, co] : f.terms()) {
                                 shift = first ? co.min_t_exponent()
                                               : std::min(shift, co.min_t_exponent());
                                 first = false;
                             }
                             if (!(f == t_shifted(atom_function(joined, k), shift)))
                                 return bad("graded factorization fails at ell=" +
                                            std::to_string(ell));
                         }
                         return ok();
                     }});
            }
        }
    }
}

using SuiteBuilder = void (*)(std::vector<Job>&, const JobSpec&);

const std::vector<std::pair<std::string, SuiteBuilder>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteBuilder>> table = {
        {"positivity", add_positivity}, {"decomposition", add_decomposition},
        {"pieri", add_pieri},           {"involution", add_involution},
        {"duality", add_duality},       {"unimodality", add_unimodality},
        {"flip", add_flip},             {"hooks", add_hooks},
        {"coproduct", add_coproduct},   {"rectangles", add_rectangles},
    };
    return table;
}

SuiteReport run_jobs(std::string suite, std::vector<Job> jobs, int width) {
    SuiteReport rep;
    rep.suite = std::move(suite);
    rep.cells.resize(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            const auto start = std::chrono::steady_clock::now();
            VerdictStatus status = VerdictStatus::holds;
            std::string witness;
            try {
                auto [st, w] = jobs[i].fn();
                status = st;
                witness = std::move(w);
            } catch (const std::exception& e) {
                status = VerdictStatus::counterexample;
                witness = std::string("exception: ") + e.what();
            }
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
            rep.cells[i] = SuiteCell{jobs[i].params, status, std::move(witness), ms};
        }
    };
    const int n = static_cast<int>(jobs.size());
    const int threads = std::max(1, std::min(width, n));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    return rep;
}

}  // namespace

bool SuiteReport::all_hold() const {
    for (const SuiteCell& c : cells)
        if (c.status != VerdictStatus::holds) return false;
    return true;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table()) out.push_back(name);
        out.push_back("all");
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& suite, const JobSpec& spec) {
    if (spec.k_min > spec.k_max || spec.k_max < 1)
        throw invalid_input("empty level range");
    if (spec.max_degree < 0) throw invalid_input("negative degree bound");
    std::vector<Job> jobs;
    if (suite == "all") {
        for (const auto& [name, build] : suite_table()) {
            std::vector<Job> part;
            build(part, spec);
            for (Job& j : part) {
                j.params = name + " " + j.params;
                jobs.push_back(std::move(j));
            }
        }
    } else {
        bool found = false;
        for (const auto& [name, build] : suite_table()) {
            if (name == suite) {
                build(jobs, spec);
                found = true;
                break;
            }
        }
        if (!found) throw invalid_input("unknown suite: " + suite);
    }
    return run_jobs(suite, std::move(jobs), spec.jobs);
}

}  // namespace katabol
