// Prints one PASS/FAIL line per acceptance criterion.

#include <morseforest.hpp>

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace morseforest;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> xs) {
    std::vector<Integer> out;
    for (long long x : xs)
        out.emplace_back(x);
    return out;
}

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.note = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && limit_s > 0 && s >= limit_s) {
        o.ok = false;
        std::ostringstream msg;
        msg << "over time limit " << limit_s << " s";
        o.note = msg.str();
    }
    failures += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << id << ". " << name << "  (" << s << " s)";
    if (!o.ok)
        std::cout << "  " << o.note;
    std::cout << std::endl;
}

SimplicialComplex octahedron() { return io::read_complex(MORSEFOREST_DATA_DIR "/octahedron.json"); }

std::vector<SimplicialComplex> builtins_in_guard() {
    std::vector<SimplicialComplex> out;
    for (auto& K : builtin_family()) {
        if (K.size(K.dim() - 1) + K.size(K.dim()) <= Limits{}.max_cells)
            out.push_back(std::move(K));
    }
    return out;
}

} // namespace

int main() {
    criterion(1, "C4 graph identity", 1, [](Outcome& o) {
        const auto r = verify_graph_theorem(builtin("cycle", 4));
        o.require(r.pass, "verdict fail");
        o.require(r.lhs == ints({0, 16, 20, 8, 1}), "lhs differs");
        o.require(r.rhs == ints({0, 16, 20, 8, 1}), "rhs differs");
    });

    criterion(2, "star census formula", 5, [](Outcome& o) {
        for (int n = 2; n <= 6; ++n) {
            const auto C = gradient_census(builtin("star", n));
            for (int k = 0; k <= n; ++k)
                o.require(C.counts[static_cast<std::size_t>(k)] == oracle::binomial(n, k) * (n + 1 - k),
                          "star(" + std::to_string(n) + ") k=" + std::to_string(k));
        }
    });

    criterion(3, "Kirchhoff gradient count on K4", 1, [](Outcome& o) {
        const auto r = verify_kirchhoff_gradients(builtin("complete", 4));
        o.require(r.pass, "verdict fail");
        o.require(r.lhs[0] == 64, "count is " + r.lhs[0].str());
        o.require(r.rhs[0] == 16 * 4, "|V| tau is " + r.rhs[0].str());
    });

    criterion(4, "Moebius defect", 10, [](Outcome& o) {
        const auto M = builtin("moebius");
        o.require(char_poly_shifted(laplacian(M, 2)) == IntegerPolynomial{0, 0, 0, 0, 0, 125, 275, 225, 85, 15, 1},
                  "charpoly");
        o.require(census_polynomial(gradient_census(M)) ==
                      IntegerPolynomial{0, 0, 0, 0, 0, 121, 275, 225, 85, 15, 1},
                  "census");
        const auto D = defect(M, 5);
        o.require(D.epsilon == 4, "epsilon_5 = " + D.epsilon.str());
        o.require(D.members.size() == 1, "|Lambda_5| = " + std::to_string(D.members.size()));
        for (const auto& rf : D.members)
            o.require(relative_homology_order(M, rf) == 2, "homology order");
    });

    criterion(5, "bipyramid defect", 10, [](Outcome& o) {
        const auto B = builtin("bipyramid");
        o.require(char_poly_shifted(laplacian(B, 2)) == IntegerPolynomial{0, 0, 0, 0, 1125, 1425, 710, 174, 21, 1},
                  "charpoly");
        o.require(census_polynomial(gradient_census(B)) ==
                      IntegerPolynomial{0, 0, 0, 0, 1119, 1425, 710, 174, 21, 1},
                  "census");
        const auto D = defect(B, 4);
        o.require(D.epsilon == 6, "epsilon_4 = " + D.epsilon.str());
        o.require(D.members.size() == 6, "|Lambda_4| = " + std::to_string(D.members.size()));
        for (const auto& rf : D.members)
            o.require(relative_homology_order(B, rf) == 1, "homology order");
    });

    criterion(6, "orientable manifold identity", 180, [](Outcome& o) {
        for (const auto& K : {builtin("simplex_boundary", 3), octahedron(), builtin("simplex_boundary", 4)}) {
            const auto start = std::chrono::steady_clock::now();
            const auto r = verify_main_theorem(K);
            const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            o.require(r.pass, K.name() + " fails");
            for (const auto& d : r.delta)
                o.require(d == 0, K.name() + " nonzero delta");
            o.require(s < 60, K.name() + " over 60 s");
        }
    });

    criterion(7, "forest polynomial equals characteristic polynomial", 120, [](Outcome& o) {
        auto family = builtins_in_guard();
        family.push_back(octahedron());
        std::mt19937_64 rng(2024);
        for (int t = 0; t < 25; ++t)
            family.push_back(random_pure_complex(rng, 6, 2, 3 + static_cast<std::size_t>(t % 6)));
        for (const auto& K : family)
            o.require(forest_generating_polynomial(K) == char_poly_shifted(laplacian(K, K.dim())), K.name());
    });

    criterion(8, "unique acyclic fitting orientation", 0, [](Outcome& o) {
        for (const auto& K : builtins_in_guard()) {
            const std::size_t n = K.size(K.dim() - 1);
            for (std::size_t r = n > 6 ? n - 6 : 0; r <= n; ++r) {
                for_each_rooted_forest(
                    K,
                    [&](const RootedForest& rf) {
                        const auto brute = oracle::fitting_orientations(K, rf.forest, rf.non_root);
                        const auto peeled = acyclic_fitting_orientation(K, rf);
                        o.require(brute.acyclic <= 1, K.name() + " has two acyclic orientations");
                        o.require(peeled.has_value() == (brute.acyclic == 1), K.name() + " peeling disagrees");
                        if (peeled && brute.acyclic == 1) {
                            auto pairs = brute.acyclic_pairs;
                            std::sort(pairs.begin(), pairs.end());
                            o.require(peeled->pairs == pairs, K.name() + " different orientation");
                        }
                    },
                    r);
            }
        }
    });

    criterion(9, "Morse function realization", 0, [](Outcome& o) {
        auto family = builtins_in_guard();
        family.push_back(octahedron());
        for (const auto& K : family) {
            if (K.size(K.dim()) > 12)
                continue;
            const auto betti = betti_numbers(K);
            for_each_acyclic_matching(K, K.dim(), [&](const VectorField& V) {
                const auto f = realize_morse_function(K, V);
                o.require(is_discrete_morse(K, f), K.name() + " not discrete Morse");
                o.require(exceptional_conditions_exclusive(K, f), K.name() + " exclusivity");
                const auto w = weak_morse_inequalities(K, f, betti);
                o.require(w.betti_bounds && w.euler, K.name() + " weak Morse inequalities");
                o.require(induced_field(K, f) == V, K.name() + " round trip");
            });
        }
    });

    criterion(10, "projective plane defect is positive", 30, [](Outcome& o) {
        const auto P = builtin("projective_plane");
        o.require(P.size(1) - P.size(2) == 5, "s != 5");
        const auto D = defect(P, 5);
        o.require(D.epsilon > 0, "epsilon_5 = " + D.epsilon.str());
    });

    criterion(11, "graph identity on all connected graphs up to five vertices", 60, [](Outcome& o) {
        std::size_t checked = 0;
        for (int v = 2; v <= 5; ++v)
            for (const auto& edges : oracle::connected_graphs(v)) {
                const auto G = SimplicialComplex::from_maximal_faces(edges);
                o.require(verify_graph_theorem(G).pass, "graph on " + std::to_string(v) + " vertices");
                ++checked;
            }
        o.require(checked == 1 + 4 + 38 + 728, "graph count " + std::to_string(checked));
    });

    criterion(12, "matching/adjacency identity on labeled forests", 60, [](Outcome& o) {
        for (const auto& edges : oracle::labeled_forests(7, 6)) {
            auto faces = edges;
            for (Vertex v = 0; v < 7; ++v)
                faces.push_back({v});
            const auto F = SimplicialComplex::from_maximal_faces(faces);
            o.require(verify_matching_adjacency(F).pass, F.name());
        }
    });

    return failures == 0 ? 0 : 1;
}
