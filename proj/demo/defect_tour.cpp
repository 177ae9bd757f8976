// Walks through the gap between the Laplacian characteristic polynomial and
// the gradient census on a few small complexes.

#include <morseforest.hpp>

#include <iostream>

using namespace morseforest;

namespace {

void show_cells(const std::vector<Cell>& cells) {
    for (const auto& c : cells)
        std::cout << ' ' << c.str();
}

void tour(const SimplicialComplex& K) {
    const int d = K.dim();
    const auto pm = is_pseudomanifold(K);
    std::cout << "== " << K.name() << " ==\n";
    std::cout << "pseudomanifold: " << (pm.ok ? "yes" : "no (" + pm.reason + ")")
              << ", orientable: " << (pm.ok && is_orientable(K) ? "yes" : "no") << "\n";
    std::cout << "det(Δ + λI) = " << char_poly_shifted(laplacian(K, d)).str() << "\n";
    std::cout << "census      = " << census_polynomial(gradient_census(K)).str() << "\n";

    for (const auto& D : defects(K)) {
        if (D.epsilon == 0)
            continue;
        std::cout << "ε_" << D.root_size << " = " << D.epsilon << " from " << D.members.size()
                  << " rooted forests that do not collapse:\n";
        for (const auto& rf : D.members) {
            std::cout << "  F =";
            show_cells(rf.forest_cells(K));
            std::cout << "\n  R =";
            show_cells(rf.root_cells(K));
            std::cout << "\n  |H(F, R)| = " << relative_homology_order(K, rf) << "\n";
        }
    }
    std::cout << "\n";
}

} // namespace

int main() {
    tour(builtin("simplex_boundary", 3));
    tour(builtin("moebius"));
    tour(builtin("bipyramid"));
}
