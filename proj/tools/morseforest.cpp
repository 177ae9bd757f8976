// Command-line front end for the morseforest library.

#include <morseforest.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

using namespace morseforest;
using io::json;

namespace {

struct Config {
    std::string builtin_name;
    std::optional<int> n;
    std::string file;
    std::string format = "text";
    std::optional<std::size_t> guard;
    bool allow_large = false;
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    bool no_timing = false;

    std::optional<int> dim;
    std::optional<std::size_t> root_size;
    bool only_defects = false;
    bool enumerate = false;
    std::string theorem;
    std::size_t trials = 2000;
};

bool json_out(const Config& c) { return c.format == "json"; }

std::size_t default_guard() {
    if (const char* env = std::getenv("MORSEFOREST_GUARD")) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (const std::exception&) {
            throw Error("MORSEFOREST_GUARD must be a non-negative integer");
        }
    }
    return Limits{}.max_cells;
}

Limits limits_of(const Config& c) {
    Limits l;
    l.max_cells = c.guard.value_or(default_guard());
    l.jobs = std::max(1u, c.jobs);
    return l;
}

SimplicialComplex load(const Config& c) {
    const bool has_builtin = !c.builtin_name.empty();
    const bool has_file = !c.file.empty();
    if (has_builtin == has_file)
        throw CLI::ValidationError("input", "give exactly one of --builtin or --file");
    if (has_file) {
        if (c.n)
            throw CLI::ValidationError("--n", "--n only applies to --builtin");
        return io::read_complex(c.file);
    }
    return builtin(c.builtin_name, c.n);
}

int level_of(const SimplicialComplex& K, const Config& c) {
    const int d = c.dim.value_or(K.dim());
    if (d < 1 || d > K.dim())
        throw Error("--dim must lie between 1 and " + std::to_string(K.dim()));
    return d;
}

std::string join(const std::vector<Integer>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? ", " : "") + xs[i].str();
    return s + "]";
}

std::string cells_str(const std::vector<Cell>& cs) {
    std::string s = "{";
    for (std::size_t i = 0; i < cs.size(); ++i)
        s += (i ? " " : "") + cs[i].str();
    return s + "}";
}

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

void cmd_info(const Config& c) {
    const auto K = load(c);
    const auto pm = is_pseudomanifold(K);
    const bool orientable = pm.ok && is_orientable(K);
    std::vector<std::size_t> counts;
    for (int d = 0; d <= K.dim(); ++d)
        counts.push_back(K.size(d));
    std::vector<HomologySummary> hom;
    for (int d = 0; d <= K.dim(); ++d)
        hom.push_back(homology(K, d));
    if (json_out(c)) {
        json h = json::array();
        for (const auto& x : hom) {
            json t = json::array();
            for (const auto& p : x.torsion)
                t.push_back(p.str());
            h.push_back(json{{"betti", x.betti}, {"torsion", t}});
        }
        print_json(json{{"complex", K.name()},
                        {"dim", K.dim()},
                        {"cells", counts},
                        {"euler", euler_characteristic(K)},
                        {"pseudomanifold", pm.ok},
                        {"orientable", orientable},
                        {"homology", h}});
        return;
    }
    std::cout << "complex: " << K.name() << "\n";
    std::cout << "dim: " << K.dim() << "\n";
    for (int d = 0; d <= K.dim(); ++d)
        std::cout << "|K_" << d << "| = " << K.size(d) << "\n";
    std::cout << "euler: " << euler_characteristic(K) << "\n";
    std::cout << "pseudomanifold: " << (pm.ok ? "yes" : "no (" + pm.reason + ")") << "\n";
    std::cout << "orientable: " << (orientable ? "yes" : "no") << "\n";
    for (int d = 0; d <= K.dim(); ++d)
        std::cout << "H_" << d << " = " << hom[static_cast<std::size_t>(d)].str() << "\n";
}

void cmd_complex(const Config& c) { print_json(io::complex_to_json(load(c))); }

void cmd_laplacian(const Config& c) {
    const auto K = load(c);
    const auto L = laplacian(K, level_of(K, c));
    if (json_out(c)) {
        print_json(io::matrix_to_json(L));
        return;
    }
    for (std::size_t r = 0; r < L.rows(); ++r) {
        std::cout << (*L.row_labels())[r].str() << "\t";
        for (std::size_t k = 0; k < L.cols(); ++k)
            std::cout << (k ? " " : "") << L(r, k);
        std::cout << "\n";
    }
}

void cmd_charpoly(const Config& c) {
    const auto K = load(c);
    const int d = level_of(K, c);
    const auto p = char_poly_shifted(laplacian(K, d), limits_of(c).jobs);
    if (json_out(c))
        print_json(io::polynomial_to_json(p, K.size(d - 1) + 1));
    else
        std::cout << "det(Δ_" << d << " + λI) = " << p.str() << "\n";
}

void cmd_census(const Config& c) {
    const auto K = load(c);
    const auto C = gradient_census(K, limits_of(c), level_of(K, c));
    const auto p = census_polynomial(C);
    if (json_out(c)) {
        print_json(json{{"dim", C.dim},
                        {"n", C.n},
                        {"m", C.m},
                        {"counts", io::integers_to_json(C.counts)},
                        {"coeffs", io::integers_to_json(p.padded(C.n + 1))}});
        return;
    }
    for (std::size_t l = 0; l <= C.m; ++l)
        std::cout << "|M_" << l << "| = " << C.counts[l] << "\n";
    std::cout << "Σ |M_{m-i}| λ^{n-i} = " << p.str() << "\n";
}

void cmd_gradients(const Config& c) {
    const auto K = load(c);
    const int d = level_of(K, c);
    const Limits lim = limits_of(c);
    check_guard(K, d, lim);
    if (!c.enumerate) {
        const auto total = gradient_census(K, lim, d).total();
        if (json_out(c))
            print_json(json{{"total", total.str()}});
        else
            std::cout << "gradients: " << total << "\n";
        return;
    }
    json all = json::array();
    std::size_t count = 0;
    for_each_acyclic_matching(K, d, [&](const VectorField& V) {
        ++count;
        if (json_out(c)) {
            all.push_back(io::field_to_json(V));
            return;
        }
        std::cout << "[";
        for (std::size_t i = 0; i < V.arrows().size(); ++i)
            std::cout << (i ? ", " : "") << V.arrows()[i].tail.str() << " -> " << V.arrows()[i].head.str();
        std::cout << "]\n";
    });
    if (json_out(c))
        print_json(all);
    else
        std::cout << "gradients: " << count << "\n";
}

void cmd_forests(const Config& c) {
    const auto K = load(c);
    json all = json::array();
    std::size_t count = 0;
    for_each_rooted_forest(
        K,
        [&](const RootedForest& rf) {
            const bool collapses = collapses_to_root(K, rf);
            if (c.only_defects && collapses)
                return;
            ++count;
            if (json_out(c)) {
                all.push_back(io::rooted_forest_to_json(K, rf));
                return;
            }
            std::cout << "F = " << cells_str(rf.forest_cells(K)) << "  R = " << cells_str(rf.root_cells(K))
                      << "  weight = " << Integer(rf.weight * rf.weight)
                      << "  collapses = " << (collapses ? "yes" : "no") << "\n";
        },
        c.root_size, limits_of(c));
    if (json_out(c))
        print_json(all);
    else
        std::cout << "rooted forests: " << count << "\n";
}

void cmd_epsilon(const Config& c) {
    const auto K = load(c);
    const auto all = defects(K, limits_of(c));
    if (json_out(c)) {
        json eps = json::array(), sizes = json::array();
        for (const auto& D : all) {
            eps.push_back(D.epsilon.str());
            sizes.push_back(D.members.size());
        }
        print_json(json{{"complex", K.name()}, {"epsilon", eps}, {"lambda_sizes", sizes}});
        return;
    }
    for (const auto& D : all)
        std::cout << "ε_" << D.root_size << " = " << D.epsilon << "  |Λ_" << D.root_size << "| = " << D.members.size()
                  << "\n";
}

void print_report_text(const VerificationReport& r, const Config& c) {
    std::cout << "complex: " << r.complex << "\n";
    std::cout << "theorem: " << r.theorem << "\n";
    if (r.theorem == "kirchhoff") {
        std::cout << "gradients: " << r.lhs[0] << "\n";
        std::cout << "|V|·τ: " << r.rhs[0] << "\n";
        std::cout << "λ coefficient: " << r.rhs[1] << "\n";
    } else {
        std::cout << "lhs: " << IntegerPolynomial(r.lhs).str() << "\n";
        std::cout << "rhs: " << IntegerPolynomial(r.rhs).str() << "\n";
    }
    std::cout << "delta: " << join(r.delta) << "\n";
    for (const auto& w : r.witnesses)
        std::cout << "ε_" << w.root_size << " = " << w.epsilon << " from " << w.members.size()
                  << " non-collapsing rooted forests\n";
    std::cout << "verdict: " << r.verdict() << "\n";
    if (!c.no_timing)
        std::cout << "ms: " << r.ms << "\n";
}

void cmd_verify(const Config& c) {
    const auto K = load(c);
    const Limits lim = limits_of(c);
    VerificationReport r;
    if (c.theorem == "graph")
        r = verify_graph_theorem(K, lim);
    else if (c.theorem == "main")
        r = verify_main_theorem(K, lim);
    else if (c.theorem == "kirchhoff")
        r = verify_kirchhoff_gradients(K, lim);
    else
        r = verify_matching_adjacency(K, lim);
    if (json_out(c))
        print_json(io::report_to_json(K, r, !c.no_timing));
    else
        print_report_text(r, c);
}

void cmd_scan(const Config& c) {
    std::vector<SimplicialComplex> family;
    if (!c.builtin_name.empty() || !c.file.empty())
        family.push_back(load(c));
    else {
        family = builtin_family();
        std::mt19937_64 rng(c.seed);
        for (auto& K : random_pseudomanifolds(rng, 6, c.trials))
            family.push_back(std::move(K));
    }
    const auto rows = conjecture_scan(family, limits_of(c));
    if (json_out(c)) {
        json out = json::array();
        for (const auto& r : rows) {
            json row{{"complex", r.complex},
                     {"pseudomanifold", r.pseudomanifold},
                     {"orientable", r.orientable},
                     {"identity_holds", r.identity_holds()},
                     {"agrees", r.agrees()}};
            if (r.report)
                row["delta"] = io::integers_to_json(r.report->delta);
            if (!r.skipped.empty())
                row["skipped"] = r.skipped;
            out.push_back(std::move(row));
        }
        print_json(out);
        return;
    }
    std::size_t agree = 0, compared = 0;
    std::cout << "complex\tpseudomanifold\torientable\tidentity\tagrees\n";
    for (const auto& r : rows) {
        if (!r.skipped.empty()) {
            std::cout << r.complex << "\tskipped: " << r.skipped << "\n";
            continue;
        }
        ++compared;
        agree += r.agrees();
        std::cout << r.complex << "\t" << (r.pseudomanifold ? "yes" : "no") << "\t" << (r.orientable ? "yes" : "no")
                  << "\t" << (r.identity_holds() ? "holds" : "fails") << "\t" << (r.agrees() ? "yes" : "no") << "\n";
    }
    std::cout << "agreement: " << agree << " / " << compared << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Laplacians, discrete gradients and rooted forests of simplicial complexes.\n"
                 "Polynomials print descending in text mode and as ascending coefficient arrays in JSON."};
    app.require_subcommand(1);
    app.fallthrough();
    Config c;

    app.add_option("--builtin", c.builtin_name, "named complex (cycle, path, star, complete, wheel, simplex, "
                                                "simplex_boundary, moebius, projective_plane, bipyramid)");
    app.add_option("--n", c.n, "size parameter of a parametric builtin");
    app.add_option("--file", c.file, "complex file {\"name\": ..., \"maximal_faces\": [[...], ...]}");
    app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
    auto* guard = app.add_option("--guard", c.guard,
                                 "cell guard |K_{d-1}| + |K_d| for enumerations (default 40 or $MORSEFOREST_GUARD)");
    auto* allow = app.add_flag("--allow-large", c.allow_large, "acknowledge a --guard override");
    app.add_option("--jobs", c.jobs, "worker threads for enumerations")->check(CLI::PositiveNumber);
    app.add_option("--seed", c.seed, "seed for random complexes");
    app.add_flag("--no-timing", c.no_timing, "report ms as 0 for byte-reproducible output");
    (void)allow;

    app.add_subcommand("info", "cell counts, Euler characteristic, pseudomanifold and orientability, homology")
        ->callback([&] { cmd_info(c); });
    app.add_subcommand("complex", "print the complex in the input file format")->callback([&] { cmd_complex(c); });
    auto* lap = app.add_subcommand("laplacian", "the Laplacian ∂_d ∂_dᵀ");
    lap->add_option("--dim", c.dim, "level d (default: top dimension)");
    lap->callback([&] { cmd_laplacian(c); });
    auto* cp = app.add_subcommand("charpoly", "det(Δ_d + λI)");
    cp->add_option("--dim", c.dim, "level d (default: top dimension)");
    cp->callback([&] { cmd_charpoly(c); });
    auto* census = app.add_subcommand("census", "number of gradients by critical top cells");
    census->add_option("--dim", c.dim, "level d (default: top dimension)");
    census->callback([&] { cmd_census(c); });
    auto* grads = app.add_subcommand("gradients", "count or list acyclic matchings between levels d-1 and d");
    grads->add_flag("--enumerate", c.enumerate, "list every gradient");
    grads->add_option("--dim", c.dim, "level d (default: top dimension)");
    grads->callback([&] { cmd_gradients(c); });
    auto* forests = app.add_subcommand("forests", "rooted forests of the top dimension");
    forests->add_option("--root-size", c.root_size, "only forests with |R| = i");
    forests->add_flag("--only-defects", c.only_defects, "only forests that do not collapse to their root");
    forests->callback([&] { cmd_forests(c); });
    app.add_subcommand("epsilon", "defects ε_i and |Λ_i| for every i")->callback([&] { cmd_epsilon(c); });
    auto* verify = app.add_subcommand("verify", "check an identity and report per-coefficient gaps");
    verify->add_option("theorem", c.theorem, "graph | main | kirchhoff | matching-adjacency")
        ->required()
        ->check(CLI::IsMember({"graph", "main", "kirchhoff", "matching-adjacency"}));
    verify->callback([&] { cmd_verify(c); });
    auto* scan = app.add_subcommand("scan-conjecture",
                                    "orientable pseudomanifold versus identity, over builtins and random "
                                    "pseudomanifolds (reporting only)");
    scan->add_option("--trials", c.trials, "random 2-complexes drawn when searching for pseudomanifolds");
    scan->callback([&] { cmd_scan(c); });

    app.parse_complete_callback([&] {
        if (guard->count() > 0 && !c.allow_large)
            throw CLI::ValidationError("--guard", "overriding the guard needs --allow-large");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const GuardExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise with --guard N --allow-large)\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
