#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treecount/deletion.hpp"
#include "treecount/families.hpp"
#include "treecount/io.hpp"
#include "treecount/multigraph.hpp"
#include "treecount/oracles.hpp"

namespace tc = treecount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

unsigned long brute_budget() {
    if (const char* env = std::getenv("TREECOUNT_BRUTE_BUDGET")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring invalid TREECOUNT_BRUTE_BUDGET\n";
    }
    return tc::kDefaultBruteForceBudget;
}

struct GraphSummary {
    std::size_t vertices = 0;
    std::size_t support_edges = 0;
    tc::BigCount total_multiplicity;
};

GraphSummary summarize(const tc::MultiGraph& g) {
    return {g.vertex_count(), g.support_edge_count(), g.total_multiplicity()};
}

// Closed-form summary so method=formula never needs to build the graph.
GraphSummary summarize(const tc::FamilySpec& spec) {
    GraphSummary s;
    std::visit(
        [&s](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, tc::Cone>) {
                unsigned long pairs = static_cast<unsigned long>(f.n) * (f.n - 1) / 2;
                s.vertices = f.n + 1;
                s.support_edges = pairs + f.n;
                s.total_multiplicity = pairs + tc::BigCount(f.n) * f.m;
            } else if constexpr (std::is_same_v<T, tc::ModifiedBipartite>) {
                s.vertices = f.m + f.n;
                s.support_edges = static_cast<std::size_t>(f.m) * f.n;
                s.total_multiplicity = tc::BigCount(f.m - 1) * f.n + tc::BigCount(f.k) * f.n;
            } else if constexpr (std::is_same_v<T, tc::GeneralizedBipartite>) {
                unsigned long total = 0;
                for (unsigned k : f.ks) total += k;
                s.vertices = f.ks.size() + f.n;
                s.support_edges = f.ks.size() * f.n;
                s.total_multiplicity = tc::BigCount(total) * f.n;
            } else if constexpr (std::is_same_v<T, tc::HalfCone>) {
                unsigned long total = 0;
                for (unsigned k : f.ks) total += k;
                s.vertices = f.ks.size() + f.n + 1;
                s.support_edges = f.ks.size() * f.n + f.ks.size();
                s.total_multiplicity =
                    tc::BigCount(total) * f.n + tc::BigCount(f.k) * f.ks.size();
            } else {
                unsigned long n = 0, sq = 0;
                for (unsigned p : f.parts) {
                    n += p;
                    sq += static_cast<unsigned long>(p) * p;
                }
                s.vertices = n;
                s.support_edges = (n * n - sq) / 2;
                s.total_multiplicity = s.support_edges;
            }
        },
        spec);
    return s;
}

void print_report(const GraphSummary& s, const std::string& method, const tc::BigCount& count,
                  long elapsed_ms, bool json) {
    if (json) {
        std::cout << "{\"vertices\": " << s.vertices << ", \"support_edges\": " << s.support_edges
                  << ", \"total_multiplicity\": \"" << s.total_multiplicity.get_str()
                  << "\", \"method\": \"" << method << "\", \"count\": \"" << count.get_str()
                  << "\", \"elapsed_ms\": " << elapsed_ms << "}\n";
    } else {
        std::cout << "graph: vertices=" << s.vertices << " support_edges=" << s.support_edges
                  << " total_multiplicity=" << s.total_multiplicity.get_str() << "\n"
                  << "method: " << method << "\n"
                  << "count: " << count.get_str() << "\n"
                  << "elapsed_ms: " << elapsed_ms << "\n";
    }
}

struct FamilyArgs {
    std::string name;
    unsigned k = 1, m = 1, n = 1;
    bool has_k = false, has_m = false, has_n = false;
    std::vector<unsigned> ks;
    std::vector<unsigned> parts;

    tc::FamilySpec to_spec() const {
        if (name == "cone") {
            if (!has_m) throw CLI::ValidationError("cone requires -m");
            return tc::Cone{m, has_n ? n : 0};
        }
        if (name == "modified-bipartite") {
            if (!has_m || !has_n) throw CLI::ValidationError("modified-bipartite requires -m and -n");
            return tc::ModifiedBipartite{k, m, n};
        }
        if (name == "bipartite") {
            // K_{m,n} is the k=1 modified bipartite graph
            if (!has_m || !has_n) throw CLI::ValidationError("bipartite requires -m and -n");
            return tc::ModifiedBipartite{1, m, n};
        }
        if (name == "generalized-bipartite") {
            if (ks.empty() || !has_n)
                throw CLI::ValidationError("generalized-bipartite requires --ks and -n");
            return tc::GeneralizedBipartite{ks, n};
        }
        if (name == "half-cone") {
            if (ks.empty() || !has_n) throw CLI::ValidationError("half-cone requires --ks and -n");
            return tc::HalfCone{k, ks, n};
        }
        if (name == "multipartite") {
            if (parts.size() < 2)
                throw CLI::ValidationError("multipartite requires --parts with >= 2 parts");
            return tc::Multipartite{parts};
        }
        throw CLI::ValidationError("unknown family '" + name + "'");
    }
};

void add_family_options(CLI::App* cmd, FamilyArgs& args) {
    cmd->add_option("-k,--k", args.k, "apex / modified-edge multiplicity")
        ->check(CLI::PositiveNumber)
        ->each([&args](const std::string&) { args.has_k = true; });
    cmd->add_option("-m,--m", args.m, "q-side size (cone: apex multiplicity)")
        ->check(CLI::PositiveNumber)
        ->each([&args](const std::string&) { args.has_m = true; });
    cmd->add_option("-n,--n", args.n, "p-side size")->each([&args](const std::string&) {
        args.has_n = true;
    });
    cmd->add_option("--ks", args.ks, "per-q multiplicities k_1..k_m (comma separated)")
        ->delimiter(',');
    cmd->add_option("--parts", args.parts, "multipartite part sizes (comma separated)")
        ->delimiter(',');
}

tc::BigCount count_graph(const tc::MultiGraph& g, const std::string& method) {
    if (method == "matrix-tree") return tc::matrix_tree_count(g);
    if (method == "brute-force") return tc::brute_force_count(g, brute_budget());
    if (method == "deletion") return tc::count_by_deletion(g);
    throw CLI::ValidationError("method '" + method + "' needs a family spec");
}

long elapsed_ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
}

int run_family(const FamilyArgs& args, const std::string& method, bool json) {
    tc::FamilySpec spec = args.to_spec();
    auto start = std::chrono::steady_clock::now();
    tc::BigCount count;
    GraphSummary summary;
    if (method == "formula" || method == "recurrence") {
        if (method == "formula") {
            count = std::visit(
                [](const auto& f) -> tc::BigCount {
                    using T = std::decay_t<decltype(f)>;
                    if constexpr (std::is_same_v<T, tc::Cone>) return tc::formula_cone(f.m, f.n);
                    else if constexpr (std::is_same_v<T, tc::ModifiedBipartite>)
                        return tc::formula_modified_bipartite(f.k, f.m, f.n);
                    else if constexpr (std::is_same_v<T, tc::GeneralizedBipartite>)
                        return tc::formula_generalized_bipartite(f.ks, f.n);
                    else if constexpr (std::is_same_v<T, tc::HalfCone>)
                        return tc::formula_half_cone(f.k, f.ks, f.n);
                    else
                        return tc::formula_multipartite(f.parts);
                },
                spec);
        } else {
            if (args.name == "cone")
                count = tc::cone_recurrence_dp(args.m, args.has_n ? args.n : 0);
            else if (args.name == "modified-bipartite")
                count = tc::modified_bipartite_recurrence_dp(args.k, args.m, args.n);
            else
                throw CLI::ValidationError("--method recurrence supports cone and modified-bipartite only");
        }
        summary = summarize(spec);
    } else {
        tc::MultiGraph g = tc::build(spec);
        summary = summarize(g);
        count = count_graph(g, method);
    }
    print_report(summary, method, count, elapsed_ms_since(start), json);
    return kExitOk;
}

int run_count(const std::string& path, const std::string& method, bool json) {
    tc::MultiGraph g = tc::parse_edge_list_file(path, &std::cerr);
    auto start = std::chrono::steady_clock::now();
    tc::BigCount count = count_graph(g, method);
    print_report(summarize(g), method, count, elapsed_ms_since(start), json);
    return kExitOk;
}

struct VerifyOptions {
    std::vector<std::string> families;
    unsigned max_n = 0;  // 0 = grid default
    unsigned max_m = 0;
    unsigned max_k = 0;
    bool wants(const std::string& name) const {
        if (families.empty()) return true;
        for (const auto& f : families)
            if (f == name) return true;
        return false;
    }
};

struct VerifyState {
    unsigned long budget = brute_budget();
    std::vector<std::string> failures;
    std::map<std::string, unsigned> passes;

    void check(const tc::FamilySpec& spec, const tc::BigCount& formula) {
        tc::MultiGraph g = tc::build(spec);
        tc::BigCount mt = tc::matrix_tree_count(g);
        tc::BigCount del = tc::count_by_deletion(g);
        bool ok = formula == mt && formula == del;
        if (ok) {
            try {
                ok = tc::brute_force_count(g, budget) == formula;
            } catch (const tc::TooLargeForBruteForce&) {
                // outside budget, the other three checks stand
            }
        }
        if (ok) {
            ++passes[tc::family_name(spec)];
        } else {
            failures.push_back(tc::family_name(spec) + " " + tc::family_params(spec) +
                               ": formula=" + formula.get_str() + " matrix-tree=" + mt.get_str() +
                               " deletion=" + del.get_str());
        }
    }

    void mismatch(const tc::FamilySpec& spec, const std::string& what) {
        failures.push_back(tc::family_name(spec) + " " + tc::family_params(spec) + ": " + what);
    }
};

// Tuples of k_1..k_m with entries in [1, max].
std::vector<std::vector<unsigned>> all_tuples(unsigned m, unsigned max) {
    std::vector<std::vector<unsigned>> out{{}};
    for (unsigned i = 0; i < m; ++i) {
        std::vector<std::vector<unsigned>> next;
        for (const auto& t : out)
            for (unsigned v = 1; v <= max; ++v) {
                auto u = t;
                u.push_back(v);
                next.push_back(std::move(u));
            }
        out = std::move(next);
    }
    return out;
}

int run_verify(const VerifyOptions& opts) {
    VerifyState state;

    if (opts.wants("cone")) {
        unsigned max_m = opts.max_m ? opts.max_m : 4, max_n = opts.max_n ? opts.max_n : 5;
        for (unsigned m = 1; m <= max_m; ++m)
            for (unsigned n = 0; n <= max_n; ++n) {
                tc::FamilySpec spec = tc::Cone{m, n};
                state.check(spec, tc::formula_cone(m, n));
                if (tc::cone_recurrence_dp(m, n) != tc::formula_cone(m, n))
                    state.mismatch(spec, "recurrence disagrees with closed form");
            }
    }
    if (opts.wants("modified-bipartite")) {
        unsigned max_k = opts.max_k ? opts.max_k : 3, max_m = opts.max_m ? opts.max_m : 4,
                 max_n = opts.max_n ? opts.max_n : 4;
        for (unsigned k = 1; k <= max_k; ++k)
            for (unsigned m = 1; m <= max_m; ++m)
                for (unsigned n = 1; n <= max_n; ++n) {
                    tc::FamilySpec spec = tc::ModifiedBipartite{k, m, n};
                    state.check(spec, tc::formula_modified_bipartite(k, m, n));
                    if (tc::modified_bipartite_recurrence_dp(k, m, n) !=
                        tc::formula_modified_bipartite(k, m, n))
                        state.mismatch(spec, "recurrence disagrees with closed form");
                }
    }
    if (opts.wants("generalized-bipartite")) {
        unsigned max_m = opts.max_m ? opts.max_m : 3, max_n = opts.max_n ? opts.max_n : 4,
                 max_k = opts.max_k ? opts.max_k : 3;
        for (unsigned m = 1; m <= max_m; ++m)
            for (const auto& ks : all_tuples(m, max_k))
                for (unsigned n = 1; n <= max_n; ++n)
                    state.check(tc::GeneralizedBipartite{ks, n},
                                tc::formula_generalized_bipartite(ks, n));
    }
    if (opts.wants("half-cone")) {
        unsigned max_k = opts.max_k ? opts.max_k : 3, max_m = opts.max_m ? opts.max_m : 3,
                 max_n = opts.max_n ? opts.max_n : 3;
        for (unsigned k = 1; k <= max_k; ++k)
            for (unsigned m = 1; m <= max_m; ++m)
                for (const auto& ks : all_tuples(m, max_k))
                    for (unsigned n = 1; n <= max_n; ++n) {
                        tc::FamilySpec spec = tc::HalfCone{k, ks, n};
                        tc::BigCount f = tc::formula_half_cone(k, ks, n);
                        state.check(spec, f);
                        bool uniform = std::all_of(ks.begin(), ks.end(),
                                                   [&ks](unsigned v) { return v == ks[0]; });
                        if (uniform && !ks.empty() &&
                            tc::formula_half_cone_uniform(k, ks[0], m, n) != f)
                            state.mismatch(spec, "uniform closed form disagrees");
                    }
    }
    if (opts.wants("multipartite")) {
        unsigned max_p = opts.max_n ? opts.max_n : 3;
        for (unsigned a = 1; a <= max_p; ++a)
            for (unsigned b = 1; b <= max_p; ++b) {
                state.check(tc::Multipartite{{a, b}}, tc::formula_multipartite({a, b}));
                for (unsigned c = 1; c <= max_p; ++c)
                    state.check(tc::Multipartite{{a, b, c}}, tc::formula_multipartite({a, b, c}));
            }
    }

    std::cout << "family                   pass\n";
    for (const auto& [name, count] : state.passes)
        std::cout << name << std::string(name.size() < 24 ? 24 - name.size() : 1, ' ') << count
                  << "\n";
    if (state.failures.empty()) {
        std::cout << "verify: all grid points agree\n";
        return kExitOk;
    }
    std::cout << "verify: " << state.failures.size() << " discrepancies\n";
    for (const auto& f : state.failures) std::cout << "  MISMATCH " << f << "\n";
    return kExitMismatch;
}

int run_export(const std::string& target, const FamilyArgs& args, const std::string& format,
               const std::string& out_path) {
    static const std::vector<std::string> kFamilies = {
        "cone",      "bipartite",   "modified-bipartite", "generalized-bipartite",
        "half-cone", "multipartite"};
    tc::MultiGraph g(0);
    if (std::find(kFamilies.begin(), kFamilies.end(), target) != kFamilies.end()) {
        FamilyArgs fa = args;
        fa.name = target;
        g = tc::build(fa.to_spec());
    } else {
        g = tc::parse_edge_list_file(target, &std::cerr);
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw tc::Error("cannot open " + out_path + " for writing");
        out = &file;
    }
    if (format == "dot")
        tc::write_dot(g, *out);
    else if (format == "edge-list")
        tc::write_edge_list(g, *out);
    else if (format == "json")
        tc::write_json(g, *out);
    else
        throw CLI::ValidationError("unknown format '" + format + "'");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spanning-tree counting toolkit"};
    app.require_subcommand(1);

    const std::vector<std::string> methods = {"formula", "deletion", "matrix-tree", "brute-force",
                                              "recurrence"};

    // family
    FamilyArgs family_args;
    std::string family_method = "formula";
    bool family_json = false;
    auto* family = app.add_subcommand("family", "count spanning trees of a named graph family");
    family->add_option("name", family_args.name, "family name")
        ->required()
        ->check(CLI::IsMember({"cone", "bipartite", "modified-bipartite", "generalized-bipartite",
                               "half-cone", "multipartite"}));
    add_family_options(family, family_args);
    family->add_option("--method", family_method)->check(CLI::IsMember(methods));
    family->add_flag("--json", family_json, "emit the report as JSON");

    // count
    std::string count_path, count_method = "matrix-tree";
    bool count_json = false;
    auto* count = app.add_subcommand("count", "count spanning trees of an edge-list file");
    count->add_option("file", count_path, "edge-list input")->required();
    count->add_option("--method", count_method)
        ->check(CLI::IsMember({"deletion", "matrix-tree", "brute-force"}));
    count->add_flag("--json", count_json, "emit the report as JSON");

    // verify
    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "cross-check every method over the family grids");
    verify->add_option("--families", verify_opts.families, "restrict to these families")
        ->delimiter(',');
    verify->add_option("--max-n", verify_opts.max_n, "override grid bound on n");
    verify->add_option("--max-m", verify_opts.max_m, "override grid bound on m");
    verify->add_option("--max-k", verify_opts.max_k, "override grid bound on k");

    // export
    std::string export_target, export_format = "edge-list", export_out;
    FamilyArgs export_args;
    auto* exp = app.add_subcommand("export", "write a family or edge-list graph to a file format");
    exp->add_option("target", export_target, "family name or edge-list file path")->required();
    add_family_options(exp, export_args);
    exp->add_option("--format", export_format)
        ->check(CLI::IsMember({"dot", "edge-list", "json"}));
    exp->add_option("-o,--output", export_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (family->parsed()) return run_family(family_args, family_method, family_json);
        if (count->parsed()) return run_count(count_path, count_method, count_json);
        if (verify->parsed()) return run_verify(verify_opts);
        if (exp->parsed()) return run_export(export_target, export_args, export_format, export_out);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    } catch (const tc::TooLargeForBruteForce& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const tc::NeighborhoodTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const tc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const tc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
