#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tracelab/catalog.hpp"
#include "tracelab/io.hpp"
#include "tracelab/koszul.hpp"
#include "tracelab/module.hpp"
#include "tracelab/suites.hpp"

using namespace tracelab;

namespace {

struct Output {
    CLI::Option* json_opt = nullptr;
    std::string json_path;  // empty = stdout
    bool quiet = false;

    bool want_json() const { return json_opt != nullptr && json_opt->count() > 0; }
    void human(const std::string& line) const {
        if (!quiet) std::cout << line << "\n";
    }
    void emit(const json& j) const {
        if (!want_json()) return;
        if (json_path.empty()) {
            std::cout << j.dump(2) << "\n";
        } else {
            std::ofstream out(json_path);
            if (!out) throw std::invalid_argument("cannot write " + json_path);
            out << j.dump(2) << "\n";
        }
    }
};

// Options shared by every subcommand.
Output* attach_output(CLI::App* cmd) {
    static std::vector<std::unique_ptr<Output>> pool;
    pool.push_back(std::make_unique<Output>());
    Output* out = pool.back().get();
    out->json_opt = cmd->add_option("--json", out->json_path,
                                    "emit a machine-readable block (optionally to a file)")
                        ->expected(0, 1);
    cmd->add_flag("--quiet", out->quiet, "suppress the human-readable lines");
    return out;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

int cmd_sgp_info(const std::string& path, const Output& out) {
    auto S = semigroup_from_json(load_json_file(path));
    out.human("semigroup " + S.to_string());
    std::string gens, gaps;
    for (i64 g : S.generators()) gens += " " + std::to_string(g);
    for (i64 g : S.gaps()) gaps += " " + std::to_string(g);
    out.human("generators:" + gens);
    out.human("frobenius: " + std::to_string(S.frobenius()));
    out.human("gaps:" + (gaps.empty() ? " (none)" : gaps));
    out.human("multiplicity: " + std::to_string(S.multiplicity()));
    out.human("embedding dimension: " + std::to_string(S.embedding_dimension()));
    out.human("flags: minimal_multiplicity=" + yesno(S.has_minimal_multiplicity()) +
              " symmetric=" + yesno(S.is_symmetric()) + " arf=" + yesno(S.is_arf()) +
              " regular=" + yesno(S.is_regular()));
    out.emit(json{{"semigroup", semigroup_to_json(S)},
                  {"frobenius", S.frobenius()},
                  {"gaps", S.gaps()},
                  {"multiplicity", S.multiplicity()},
                  {"embedding_dimension", S.embedding_dimension()},
                  {"flags",
                   {{"minimal_multiplicity", S.has_minimal_multiplicity()},
                    {"symmetric", S.is_symmetric()},
                    {"arf", S.is_arf()},
                    {"regular", S.is_regular()}}}});
    return 0;
}

int cmd_sgp_trace(const std::string& path, const Output& out) {
    const json j = load_json_file(path);
    ValueIdeal T = [&] {
        if (j.contains("summands")) {
            auto M = module_sum_from_json(j);
            out.human("module with " + std::to_string(M.summands.size()) + " summands over " +
                      M.semigroup().to_string());
            return trace(M);
        }
        auto I = ideal_from_json(j);
        out.human("ideal " + I.to_string() + " over " + I.semigroup().to_string());
        return trace(I);
    }();
    const auto& S = T.semigroup();
    const bool is_m = T == ValueIdeal::maximal_ideal(S);
    const bool is_r = T == ValueIdeal::ring(S);
    std::string line = "trace = " + value_prefix(T);
    if (is_m) line += " (= m)";
    if (is_r) line += " (= R)";
    line += " full-trace: " + yesno(is_m);
    out.human(line);
    out.emit(json{{"trace", ideal_to_json(T)},
                  {"window", value_window_json(T)},
                  {"full_trace", is_m},
                  {"equals_ring", is_r}});
    return 0;
}

int cmd_sgp_enum_ftu(const std::string& path, const Output& out) {
    auto S = semigroup_from_json(load_json_file(path));
    std::vector<ValueIdeal> hits;
    for (const auto& I : enumerate_normalized_ideals(S))
        if (is_full_trace(I) && is_ulrich(I)) hits.push_back(I);
    out.human("semigroup " + S.to_string() + ": " + std::to_string(hits.size()) +
              " full-trace Ulrich normalized ideal(s)");
    for (const auto& I : hits) out.human("  " + I.to_string() + "  mu=" + std::to_string(mu(I)));
    out.human("minimal multiplicity: " + yesno(S.has_minimal_multiplicity()));
    json arr = json::array();
    for (const auto& I : hits) arr.push_back(ideal_to_json(I));
    out.emit(json{{"semigroup", semigroup_to_json(S)},
                  {"count", hits.size()},
                  {"ideals", arr},
                  {"minimal_multiplicity", S.has_minimal_multiplicity()}});
    return 0;
}

int cmd_sgp_canonical(const std::string& path, const Output& out) {
    auto S = semigroup_from_json(load_json_file(path));
    auto w = ValueIdeal::canonical(S);
    auto T = trace(w);
    const bool full = T == ValueIdeal::ring(S);
    out.human("canonical = " + w.to_string());
    out.human("trace(canonical) = " + T.to_string() + (full ? " (= R)" : ""));
    out.human("symmetric: " + yesno(S.is_symmetric()));
    out.human("nearly Gorenstein: " + yesno(is_nearly_gorenstein(S)));
    out.emit(json{{"canonical", ideal_to_json(w)},
                  {"trace", ideal_to_json(T)},
                  {"symmetric", S.is_symmetric()},
                  {"nearly_gorenstein", is_nearly_gorenstein(S)}});
    return 0;
}

PresentedModule load_art_module(const json& alg_json, const std::string& module_path,
                                AlgebraPtr A) {
    if (!module_path.empty()) return art_module_from_json(load_json_file(module_path), A);
    if (alg_json.contains("module")) return art_module_from_json(alg_json.at("module"), A);
    return PresentedModule::residue_field(A);
}

int cmd_art_resolve(const std::string& path, const std::string& module_path, int steps,
                    const Output& out) {
    const json j = load_json_file(path);
    auto A = algebra_from_json(j);
    auto M = load_art_module(j, module_path, A);
    auto res = minimal_resolution(M, steps);
    std::string betti = "Betti";
    for (auto b : res.betti) betti += " " + std::to_string(b);
    out.human(betti);
    json maps = json::array();
    for (const auto& P : res.maps) {
        json rows = json::array();
        for (std::size_t r = 0; r < P.rows; ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < P.cols; ++c) row.push_back(A->element_string(P.at(r, c)));
            rows.push_back(row);
        }
        maps.push_back(rows);
    }
    out.emit(json{{"betti", res.betti}, {"maps", maps}});
    return 0;
}

int cmd_art_trace(const std::string& path, const std::string& module_path, const Output& out) {
    const json j = load_json_file(path);
    auto A = algebra_from_json(j);
    auto M = load_art_module(j, module_path, A);
    auto T = trace_ideal(M);
    const bool full = is_full_trace(M);
    const bool free_part = has_free_summand(M);
    std::string basis;
    for (std::size_t i = 0; i < T.basis().size(); ++i)
        basis += (i ? ", " : "") + A->element_string(T.basis()[i]);
    out.human("module dim " + std::to_string(M.dim()) + ", mu " + std::to_string(M.min_gens()));
    out.human("trace dim " + std::to_string(T.dim()) + " span{" + basis + "}");
    out.human("full-trace: " + yesno(full) + "  free summand: " + yesno(free_part));
    out.emit(json{{"module_dim", M.dim()},
                  {"mu", M.min_gens()},
                  {"trace", subspace_to_json(*A, T)},
                  {"full_trace", full},
                  {"has_free_summand", free_part}});
    return 0;
}

int cmd_art_check(const std::string& path, int steps, int trials, std::uint64_t seed,
                  const Output& out) {
    const json j = load_json_file(path);
    auto A = algebra_from_json(j);
    struct Check {
        std::string name;
        bool ok;
    };
    std::vector<Check> checks;

    auto k = PresentedModule::residue_field(A);
    checks.push_back({"trace(k) equals the socle", trace_ideal(k) == A->socle()});

    auto res = minimal_resolution(k, steps);
    bool minimal = true, betti_ok = true;
    for (const auto& P : res.maps) minimal = minimal && P.entries_in_m();
    checks.push_back({"resolution differentials have entries in m", minimal});
    if (A->is_pir()) {
        for (auto b : res.betti) betti_ok = betti_ok && b == 1;
        checks.push_back({"principal ideal ring: all Betti numbers are 1", betti_ok});
    } else {
        bool full = true;
        for (std::size_t i = 1; i < res.syzygies.size(); ++i)
            full = full && trace_ideal(res.syzygies[i]) == A->maximal_ideal();
        checks.push_back({"positive syzygies of k are full-trace", full});
    }

    std::mt19937_64 rng(seed);
    bool lemma = true;
    for (int t = 0; t < trials; ++t)
        lemma = lemma && check_lemma_matrix_trace(random_rmatrix(rng, A));
    checks.push_back({"entry ideals sit inside column-span traces", lemma});

    bool all = true;
    for (const auto& c : checks) {
        out.human(std::string(c.ok ? "pass" : "FAIL") + "  " + c.name);
        all = all && c.ok;
    }
    out.human(std::string("algebra: length ") + std::to_string(A->dim()) + ", edim " +
              std::to_string(A->embedding_dimension()) + ", minimal multiplicity " +
              yesno(A->has_minimal_multiplicity()));
    json arr = json::array();
    for (const auto& c : checks) arr.push_back({{"check", c.name}, {"passed", c.ok}});
    out.emit(json{{"checks", arr}, {"passed", all}});
    return all ? 0 : 1;
}

int cmd_koszul(int n, bool check, const Output& out) {
    auto K = koszul_build(n);
    std::string betti = "Betti";
    for (const auto& t : K.terms) betti += " " + std::to_string(t.size());
    out.human("K(" + std::to_string(n) + ") " + betti);
    bool ok = true;
    json vars = json::array();
    if (check) {
        ok = koszul_verify(K);
        out.human("d o d = 0: " + yesno(ok));
        for (int i = 1; i <= n; ++i) {
            auto vs = koszul_variable_ideal(K, i);
            std::string line = "d_" + std::to_string(i) + " variables:";
            for (int v : vs) line += " x" + std::to_string(v + 1);
            out.human(line);
            vars.push_back(vs);
        }
    }
    json sizes = json::array();
    for (const auto& t : K.terms) sizes.push_back(t.size());
    out.emit(json{{"n", n},
                  {"betti", sizes},
                  {"complex_ok", check ? json(ok) : json()},
                  {"variable_ideals", vars}});
    return ok ? 0 : 1;
}

int cmd_suite_run(bool all, std::uint64_t seed, const Output& out) {
    if (!all) {
        std::cerr << "error: suite run requires --all\n";
        return 2;
    }
    auto reports = run_all_suites(seed);
    bool pass = true;
    for (const auto& r : reports) {
        std::string status = r.skipped ? "skip" : (r.passed() ? "pass" : "FAIL");
        out.human(status + "  " + r.id + "  (" + std::to_string(r.instances) + " instances)");
        if (r.skipped) out.human("      reason: " + r.skip_reason);
        for (const auto& f : r.failures)
            out.human("      " + f.instance + ": expected " + f.expected + ", got " + f.got);
        if (!r.skipped && !r.passed()) pass = false;
    }
    out.human(pass ? "all suites passed" : "suite failures present");
    out.emit(run_to_json(reports, seed));
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trace ideals, syzygies and Ulrich certificates over semigroup rings and "
                 "Artinian algebras"};
    app.require_subcommand(1);

    std::string sgp_path, art_path, module_path;
    int steps = 4, kn = 4, trials = 50;
    std::uint64_t seed = 0;
    bool koszul_check = false, suite_all = false;

    auto* sgp = app.add_subcommand("sgp", "numerical semigroup commands");
    sgp->require_subcommand(1);
    auto* info = sgp->add_subcommand("info", "invariants and flags of a semigroup");
    info->add_option("file", sgp_path, "semigroup json file")->required();
    auto* info_out = attach_output(info);
    auto* strace = sgp->add_subcommand("trace", "trace ideal of an ideal or module file");
    strace->add_option("file", sgp_path, "ideal or module json file")->required();
    auto* strace_out = attach_output(strace);
    auto* ftu = sgp->add_subcommand("enum-ftu", "enumerate full-trace Ulrich ideals");
    ftu->add_option("file", sgp_path, "semigroup json file")->required();
    auto* ftu_out = attach_output(ftu);
    auto* canon = sgp->add_subcommand("canonical", "canonical ideal and the Gorenstein locus");
    canon->add_option("file", sgp_path, "semigroup json file")->required();
    auto* canon_out = attach_output(canon);

    auto* art = app.add_subcommand("art", "Artinian algebra commands");
    art->require_subcommand(1);
    auto* resolve = art->add_subcommand("resolve", "minimal free resolution");
    resolve->add_option("file", art_path, "algebra json file")->required();
    resolve->add_option("--module", module_path, "module json file (default: residue field)");
    resolve->add_option("--steps", steps, "resolution steps");
    auto* resolve_out = attach_output(resolve);
    auto* atrace = art->add_subcommand("trace", "trace ideal of a module");
    atrace->add_option("file", art_path, "algebra json file")->required();
    atrace->add_option("--module", module_path, "module json file (default: residue field)");
    auto* atrace_out = attach_output(atrace);
    auto* acheck = art->add_subcommand("check", "run the per-algebra property checks");
    acheck->add_option("file", art_path, "algebra json file")->required();
    acheck->add_option("--steps", steps, "resolution steps");
    acheck->add_option("--trials", trials, "random matrices to try");
    acheck->add_option("--seed", seed, "random seed");
    auto* acheck_out = attach_output(acheck);

    auto* koz = app.add_subcommand("koszul", "Koszul complex certificates");
    koz->add_option("--n", kn, "number of variables")->required();
    koz->add_flag("--check", koszul_check, "verify the complex and the entry ideals");
    auto* koz_out = attach_output(koz);

    auto* suite = app.add_subcommand("suite", "property suites");
    suite->require_subcommand(1);
    auto* run = suite->add_subcommand("run", "run the suite battery");
    run->add_flag("--all", suite_all, "run every suite");
    run->add_option("--seed", seed, "random seed");
    auto* run_out = attach_output(run);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (info->parsed()) return cmd_sgp_info(sgp_path, *info_out);
        if (strace->parsed()) return cmd_sgp_trace(sgp_path, *strace_out);
        if (ftu->parsed()) return cmd_sgp_enum_ftu(sgp_path, *ftu_out);
        if (canon->parsed()) return cmd_sgp_canonical(sgp_path, *canon_out);
        if (resolve->parsed()) return cmd_art_resolve(art_path, module_path, steps, *resolve_out);
        if (atrace->parsed()) return cmd_art_trace(art_path, module_path, *atrace_out);
        if (acheck->parsed()) return cmd_art_check(art_path, steps, trials, seed, *acheck_out);
        if (koz->parsed()) return cmd_koszul(kn, koszul_check, *koz_out);
        if (run->parsed()) return cmd_suite_run(suite_all, seed, *run_out);
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        const bool guard = msg == "size guard" || msg == "enumeration bound" ||
                           msg == "gap bound exceeded" || msg == "bound";
        std::cerr << "error: " << msg << "\n";
        return guard ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
