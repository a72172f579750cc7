// Command-line surface: atom construction, graded expansions, block decomposition,
// strip index sets, conjugation, posets, and the batch verification driver.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "katabol/atoms.hpp"
#include "katabol/macdonald.hpp"
#include "katabol/operators.hpp"
#include "katabol/render.hpp"
#include "katabol/verify.hpp"

namespace {

using namespace katabol;
namespace fs = std::filesystem;

std::mutex cache_mutex;

// On-disk atom cache: one JSON file per (k, lambda) under <dir>/<k>/<parts>.json.
void install_cache(const std::string& dir) {
    AtomCacheHooks hooks;
    hooks.load = [dir](const Partition& lambda, int k) -> std::optional<std::vector<Tableau>> {
        const fs::path file = fs::path(dir) / std::to_string(k) / (lambda.to_string() + ".json");
        std::ifstream in(file);
        if (!in) return std::nullopt;
        Json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw invalid_input("unreadable cache file " + file.string() + ": " + e.what());
        }
        if (!j.is_object() || !j.contains("k") || !j.contains("lambda") || !j.contains("members"))
            throw invalid_input("malformed cache file " + file.string());
        if (j.at("k").get<int>() != k || partition_from_json(j.at("lambda")) != lambda)
            throw invalid_input("cache file " + file.string() + " holds a different atom");
        return tableaux_from_json(j.at("members"));
    };
    hooks.store = [dir](const Partition& lambda, int k, const std::vector<Tableau>& members) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        const fs::path level_dir = fs::path(dir) / std::to_string(k);
        fs::create_directories(level_dir);
        Json j{{"k", k},
               {"lambda", partition_json(lambda)},
               {"members", Json::array()}};
        for (const Tableau& t : members) j["members"].push_back(tableau_json(t));
        const fs::path file = level_dir / (lambda.to_string() + ".json");
        const fs::path tmp = level_dir / (lambda.to_string() + ".json.tmp");
        {
            std::ofstream out(tmp);
            out << j.dump() << '\n';
        }
        fs::rename(tmp, file);
    };
    set_atom_cache_hooks(std::move(hooks));
}

Partition parse_partition(const std::string& text, const char* what) {
    try {
        return Partition::parse(text);
    } catch (const std::exception& e) {
        throw invalid_input(std::string(what) + ": " + e.what());
    }
}

void parse_k_range(const std::string& text, int& lo, int& hi) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw invalid_input("bad level range: " + text);
    }
    if (lo < 1 || hi < lo) throw invalid_input("bad level range: " + text);
}

void emit(const std::string& s) {
    std::cout << s;
    if (s.empty() || s.back() != '\n') std::cout << '\n';
}

void emit_expansion(const PolyExpansion& f, const std::string& format,
                    const std::string& symbol, int level) {
    if (format == "json")
        emit(expansion_json(f).dump());
    else if (format == "latex")
        emit(latex_expansion(f, symbol, level));
    else if (format == "ascii")
        emit(ascii_expansion(f));
    else
        throw invalid_input("format " + format + " does not apply to expansions");
}

struct Options {
    int k = 0;
    std::string lambda_text, mu_text, format = "json", cache, suite, k_range;
    int ell = 0, max_degree = 4, jobs = 1;
    bool row = false, col = false, filled = false;
};

int dispatch(const std::string& cmd, const Options& opt) {
    if (!opt.cache.empty()) install_cache(opt.cache);

    if (cmd == "atom") {
        const Partition lambda = parse_partition(opt.lambda_text, "lambda");
        emit_expansion(atom_function(lambda, opt.k), opt.format, "S", -1);
        return 0;
    }
    if (cmd == "hl" || cmd == "macdonald") {
        const Partition mu = parse_partition(opt.mu_text, "mu");
        const AtomExpansion f = k_kostka(mu, opt.k, cmd == "macdonald");
        emit_expansion(f, opt.format, "A", opt.k);
        return 0;
    }
    if (cmd == "decompose") {
        const Partition mu = parse_partition(opt.mu_text, "mu");
        const CopyDecomposition d = decompose_copies(mu, opt.k);
        if (opt.format == "json") {
            emit(copies_json(d).dump());
        } else if (opt.format == "ascii") {
            std::string out;
            for (const Copy& c : d.copies)
                out += "shape " + c.index.shape().to_string() + " charge " +
                       std::to_string(tableau_charge(c.index)) + " size " +
                       std::to_string(c.members.members().size()) + "\n";
            out += "status " + to_string(d.verdict.status) +
                   (d.verdict.witness.empty() ? "" : " (" + d.verdict.witness + ")") + "\n";
            emit(out);
        } else if (opt.format == "latex") {
            PolyExpansion weights;
            for (const Copy& c : d.copies)
                weights.add(c.index.shape(),
                            BivariatePoly::monomial(1, 0, tableau_charge(c.index)));
            emit(latex_expansion(weights, "A", opt.k));
        } else {
            throw invalid_input("format " + opt.format + " does not apply to decompositions");
        }
        return d.verdict.status == VerdictStatus::holds ? 0 : 1;
    }
    if (cmd == "pieri") {
        const Partition lambda = parse_partition(opt.lambda_text, "lambda");
        if (opt.row && opt.col) throw invalid_input("choose one of --row / --col");
        const PieriKind kind = opt.col ? PieriKind::column : PieriKind::row;
        const std::vector<Partition> sets = pieri_sets(lambda, opt.ell, opt.k, kind);
        if (opt.format == "json") {
            Json j = Json::array();
            for (const Partition& mu : sets) j.push_back(partition_json(mu));
            emit(j.dump());
        } else if (opt.format == "ascii") {
            std::string out;
            for (const Partition& mu : sets) out += mu.to_string() + "\n";
            emit(out);
        } else if (opt.format == "latex") {
            PolyExpansion sum;
            for (const Partition& mu : sets) sum.add(mu, BivariatePoly(1));
            emit(latex_expansion(sum, "A", opt.k));
        } else {
            throw invalid_input("format " + opt.format + " does not apply to index sets");
        }
        return 0;
    }
    if (cmd == "kconj") {
        const Partition lambda = parse_partition(opt.lambda_text, "lambda");
        const Partition conj = k_conjugate(lambda, opt.k);
        if (opt.format == "json")
            emit(partition_json(conj).dump());
        else if (opt.format == "ascii" || opt.format == "latex")
            emit(conj.to_string());
        else
            throw invalid_input("format " + opt.format + " does not apply to partitions");
        return 0;
    }
    if (cmd == "poset") {
        TableauSet members;
        if (!opt.lambda_text.empty()) {
            members = generate_atom(parse_partition(opt.lambda_text, "lambda"), opt.k);
        } else if (!opt.mu_text.empty()) {
            members = generate_tableaux(parse_partition(opt.mu_text, "mu"));
        } else {
            throw invalid_input("poset needs --lambda (atom) or --mu (full generated set)");
        }
        const RankedPoset ps = build_poset(members);
        if (opt.format == "json")
            emit(poset_json(ps).dump());
        else if (opt.format == "dot")
            emit(dot_poset(ps, opt.filled));
        else if (opt.format == "ascii")
            emit(ascii_poset(ps));
        else
            throw invalid_input("format " + opt.format + " does not apply to posets");
        return 0;
    }
    if (cmd == "verify") {
        JobSpec spec;
        spec.max_degree = opt.max_degree;
        spec.jobs = opt.jobs;
        if (!opt.k_range.empty()) parse_k_range(opt.k_range, spec.k_min, spec.k_max);
        const SuiteReport rep = run_suite(opt.suite, spec);
        if (opt.format == "json") {
            Json cells = Json::array();
            for (const SuiteCell& c : rep.cells) {
                Json jc{{"millis", c.millis},
                        {"params", c.params},
                        {"status", to_string(c.status)}};
                if (!c.witness.empty()) jc["witness"] = c.witness;
                cells.push_back(std::move(jc));
            }
            emit(Json{{"cells", cells}, {"suite", rep.suite}}.dump());
        } else if (opt.format == "ascii") {
            std::string out;
            for (const SuiteCell& c : rep.cells)
                out += to_string(c.status) + " " + c.params +
                       (c.witness.empty() ? "" : " :: " + c.witness) + "\n";
            out += rep.suite + ": " + std::to_string(rep.cells.size()) + " cells\n";
            emit(out);
        } else {
            throw invalid_input("format " + opt.format + " does not apply to reports");
        }
        return rep.all_hold() ? 0 : 1;
    }
    throw invalid_input("unknown command: " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tableau-atom calculus: atoms, graded expansions, verification"};
    app.require_subcommand(1);
    Options opt;
    if (const char* env = std::getenv("KATABOL_CACHE")) opt.cache = env;

    auto add_common = [&](CLI::App* sub, bool needs_k) {
        if (needs_k) sub->add_option("--k", opt.k, "level (k-bound)")->required();
        sub->add_option("--format", opt.format, "output format: json|latex|dot|ascii");
        sub->add_option("--cache", opt.cache, "atom cache directory (or env KATABOL_CACHE)");
        return sub;
    };

    CLI::App* atom = add_common(app.add_subcommand("atom", "Schur expansion of an atom"), true);
    atom->add_option("--lambda", opt.lambda_text, "index partition")->required();

    CLI::App* hl = add_common(
        app.add_subcommand("hl", "one-parameter symmetric function in the atom basis"), true);
    hl->add_option("--mu", opt.mu_text, "evaluation partition")->required();

    CLI::App* mac = add_common(
        app.add_subcommand("macdonald", "two-parameter symmetric function in the atom basis"),
        true);
    mac->add_option("--mu", opt.mu_text, "evaluation partition")->required();

    CLI::App* dec = add_common(
        app.add_subcommand("decompose", "block decomposition of the generated set"), true);
    dec->add_option("--mu", opt.mu_text, "evaluation partition")->required();

    CLI::App* pieri = add_common(app.add_subcommand("pieri", "strip index set"), true);
    pieri->add_option("--lambda", opt.lambda_text, "index partition")->required();
    pieri->add_option("--ell", opt.ell, "strip size")->required();
    pieri->add_flag("--row", opt.row, "row rule (default)");
    pieri->add_flag("--col", opt.col, "column rule");

    CLI::App* kconj = add_common(app.add_subcommand("kconj", "level conjugate"), true);
    kconj->add_option("--lambda", opt.lambda_text, "index partition")->required();

    CLI::App* poset = add_common(
        app.add_subcommand("poset", "charge-ranked cyclage poset"), true);
    poset->add_option("--lambda", opt.lambda_text, "atom index partition");
    poset->add_option("--mu", opt.mu_text, "full generated set evaluation");
    poset->add_flag("--filled", opt.filled, "label vertices with tableau words");

    CLI::App* verify = add_common(app.add_subcommand("verify", "run a verification suite"),
                                  false);
    verify->add_option("suite", opt.suite, "suite name (or 'all')")->required();
    verify->add_option("--max-degree", opt.max_degree, "largest swept degree");
    verify->add_option("--k-range", opt.k_range, "level range, e.g. 1..4");
    verify->add_option("--jobs", opt.jobs, "parallel cell width");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return dispatch(cmd, opt);
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const arithmetic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
