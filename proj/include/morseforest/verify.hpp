#pragma once

// Theorem-level checks that compare the linear-algebra side with the
// combinatorial side and record every coefficient gap.

#include "morseforest/complex.hpp"
#include "morseforest/error.hpp"
#include "morseforest/forests.hpp"
#include "morseforest/integer.hpp"
#include "morseforest/linalg.hpp"
#include "morseforest/matrix.hpp"
#include "morseforest/morse.hpp"

#include <chrono>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace morseforest {

/// Evidence for one nonzero gap: the non-collapsing rooted forests with
/// |R| = root_size and the sum of their squared weights.
struct DefectWitness {
    std::size_t root_size = 0;
    Integer epsilon = 0;
    std::vector<RootedForest> members;
};

struct VerificationReport {
    std::string complex;
    std::string theorem;
    /// Compared quantities; for polynomial identities these are ascending
    /// coefficients, both sides padded to the same length.
    std::vector<Integer> lhs;
    std::vector<Integer> rhs;
    std::vector<Integer> delta; ///< lhs - rhs entrywise
    std::vector<DefectWitness> witnesses;
    bool pass = false;
    long long ms = 0;

    std::string verdict() const { return pass ? "pass" : "fail"; }
};

namespace detail {

class Stopwatch {
public:
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void fill_comparison(VerificationReport& r, std::vector<Integer> lhs, std::vector<Integer> rhs) {
    const std::size_t n = std::max(lhs.size(), rhs.size());
    lhs.resize(n);
    rhs.resize(n);
    r.delta.assign(n, 0);
    r.pass = true;
    for (std::size_t i = 0; i < n; ++i) {
        r.delta[i] = lhs[i] - rhs[i];
        if (r.delta[i] != 0)
            r.pass = false;
    }
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
}

inline std::string label_of(const SimplicialComplex& K) { return K.name().empty() ? "unnamed" : K.name(); }

/// det(Δ_d + λI) against the gradient generating function at the top level.
/// Every nonzero gap is matched with its defect set, and the two must agree.
inline VerificationReport compare_identity(const SimplicialComplex& K, std::string theorem, const Limits& limits) {
    Stopwatch clock;
    const int d = K.dim();
    VerificationReport r;
    r.complex = label_of(K);
    r.theorem = std::move(theorem);
    check_guard(K, d, limits);
    const IntegerPolynomial lhs = char_poly_shifted(laplacian(K, d), limits.jobs);
    const IntegerPolynomial rhs = census_polynomial(gradient_census(K, limits));
    const std::size_t len = K.size(d - 1) + 1;
    fill_comparison(r, lhs.padded(len), rhs.padded(len));
    if (!r.pass) {
        const auto all = defects(K, limits);
        for (std::size_t i = 0; i < r.delta.size(); ++i) {
            if (r.delta[i] == 0 && all[i].epsilon == 0)
                continue;
            if (r.delta[i] != all[i].epsilon)
                throw std::logic_error("coefficient gap at λ^" + std::to_string(i) +
                                       " differs from the defect sum");
            r.witnesses.push_back({i, all[i].epsilon, all[i].members});
        }
    }
    r.ms = clock.ms();
    return r;
}

} // namespace detail

/// det(Δ + λI) = Σ |𝓜_{m-i}(Γ)| λ^{n-i} on a graph.
inline VerificationReport verify_graph_theorem(const SimplicialComplex& G, const Limits& limits = {}) {
    if (G.dim() != 1)
        throw Error("verify graph: complex must be 1-dimensional");
    return detail::compare_identity(G, "graph", limits);
}

/// The identity on a complex of dimension d >= 2; gaps carry their Λ_i.
inline VerificationReport verify_main_theorem(const SimplicialComplex& K, const Limits& limits = {}) {
    if (K.dim() < 2)
        throw Error("verify main: complex must have dimension >= 2 (use verify graph)");
    return detail::compare_identity(K, "main", limits);
}

/// |𝓜_{β₁}(Γ)| = |V|·τ(Γ) = coefficient of λ in det(Δ + λI), for a connected
/// graph. lhs = [count, count]; rhs = [|V|·τ, λ-coefficient].
inline VerificationReport verify_kirchhoff_gradients(const SimplicialComplex& G, const Limits& limits = {}) {
    if (G.dim() != 1)
        throw Error("verify kirchhoff: complex must be 1-dimensional");
    if (!is_connected(G))
        throw Error("verify kirchhoff: graph is not connected");
    detail::Stopwatch clock;
    VerificationReport r;
    r.complex = detail::label_of(G);
    r.theorem = "kirchhoff";
    const std::size_t n = G.size(0);
    const std::size_t m = G.size(1);
    const std::size_t beta1 = m + 1 - n;
    const GradientCensus C = gradient_census(G, limits);
    const IntegerMatrix L = laplacian(G, 1);
    std::vector<std::size_t> rest(n - 1);
    std::iota(rest.begin(), rest.end(), std::size_t{1});
    const Integer tau = determinant(L.submatrix(rest, rest));
    const Integer linear = char_poly_shifted(L, limits.jobs).coeff(1);
    detail::fill_comparison(r, {C.counts[beta1], C.counts[beta1]}, {Integer(n) * tau, linear});
    r.ms = clock.ms();
    return r;
}

/// For a forest graph F with n vertices and m edges and its subdivision 𝓗_F:
/// det(A_{𝓗_F} + λI) = Σ_{k=0}^{m} (-1)^k a_{n-k} λ^{n+m-2k}, where a_j is
/// the λ^j coefficient of det(Δ_F + λI).
inline VerificationReport verify_matching_adjacency(const SimplicialComplex& F, const Limits& limits = {}) {
    if (F.dim() != 1)
        throw Error("verify matching-adjacency: complex must be 1-dimensional");
    const std::size_t n = F.size(0);
    const std::size_t m = F.size(1);
    const auto comp = vertex_components(F);
    const std::size_t components = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    if (m + components != n)
        throw Error("not a forest");
    detail::Stopwatch clock;
    VerificationReport r;
    r.complex = detail::label_of(F);
    r.theorem = "matching-adjacency";
    const SimplicialComplex H = hasse_as_graph(F);
    const IntegerPolynomial lhs = char_poly_shifted(adjacency_matrix(H), limits.jobs);
    const IntegerPolynomial a = char_poly_shifted(laplacian(F, 1), limits.jobs);
    std::vector<Integer> rhs(n + m + 1);
    for (std::size_t k = 0; k <= m; ++k) {
        const Integer c = a.coeff(n - k);
        rhs[n + m - 2 * k] = k % 2 == 0 ? c : Integer(-c);
    }
    detail::fill_comparison(r, lhs.padded(n + m + 1), std::move(rhs));
    r.ms = clock.ms();
    return r;
}

/// One complex in a conjecture scan: orientable pseudomanifold versus the
/// identity holding. A skipped row carries the reason instead of a report.
struct ScanRow {
    std::string complex;
    bool pseudomanifold = false;
    bool orientable = false;
    std::string reason; ///< why it is not a pseudomanifold, when it is not
    std::optional<VerificationReport> report;
    std::string skipped;

    bool identity_holds() const { return report && report->pass; }
    bool agrees() const { return report && (pseudomanifold && orientable) == report->pass; }
};

inline ScanRow scan_complex(const SimplicialComplex& K, const Limits& limits = {}) {
    ScanRow row;
    row.complex = detail::label_of(K);
    if (K.dim() < 1) {
        row.skipped = "dimension 0";
        return row;
    }
    const auto pm = is_pseudomanifold(K);
    row.pseudomanifold = pm.ok;
    row.reason = pm.reason;
    row.orientable = pm.ok && is_orientable(K);
    try {
        row.report = detail::compare_identity(K, "main", limits);
    } catch (const GuardExceeded& e) {
        row.skipped = e.what();
    }
    return row;
}

inline std::vector<ScanRow> conjecture_scan(const std::vector<SimplicialComplex>& family, const Limits& limits = {}) {
    std::vector<ScanRow> rows;
    for (const auto& K : family)
        rows.push_back(scan_complex(K, limits));
    return rows;
}

/// Every builtin at small sizes, the default scan family.
inline std::vector<SimplicialComplex> builtin_family() {
    return {builtin("cycle", 4),          builtin("path", 4),
            builtin("star", 3),           builtin("complete", 4),
            builtin("wheel", 5),          builtin("simplex", 2),
            builtin("simplex", 3),        builtin("simplex_boundary", 2),
            builtin("simplex_boundary", 3), builtin("simplex_boundary", 4),
            builtin("moebius"),           builtin("projective_plane"),
            builtin("bipyramid")};
}

} // namespace morseforest
