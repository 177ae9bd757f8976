#pragma once

// Rooted forests in the top dimension, fitting orientations, collapse by
// peeling free faces, homological weights and the defect sets Λ_i.

#include "morseforest/complex.hpp"
#include "morseforest/error.hpp"
#include "morseforest/integer.hpp"
#include "morseforest/linalg.hpp"
#include "morseforest/matrix.hpp"
#include "morseforest/morse.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace morseforest {

/// A pair (F, R): F a set of top cells with independent boundary columns and
/// R a set of (d-1)-cells whose complement R̄ indexes a nonsingular square
/// submatrix of ∂_d restricted to F. Cells are held by canonical index.
struct RootedForest {
    int dim = 0;
    std::vector<std::size_t> forest;   ///< indices into K_d, ascending
    std::vector<std::size_t> root;     ///< indices into K_{d-1}, ascending
    std::vector<std::size_t> non_root; ///< R̄ = K_{d-1} \ R, ascending
    /// |det ∂_d[R̄, F]|, which equals |H_{d-1}(F, R)|.
    Integer weight = 1;

    std::vector<Cell> forest_cells(const SimplicialComplex& K) const {
        std::vector<Cell> out;
        for (std::size_t i : forest)
            out.push_back(K.cell(dim, i));
        return out;
    }
    std::vector<Cell> root_cells(const SimplicialComplex& K) const {
        std::vector<Cell> out;
        for (std::size_t i : root)
            out.push_back(K.cell(dim - 1, i));
        return out;
    }

    friend bool operator==(const RootedForest& a, const RootedForest& b) {
        return a.dim == b.dim && a.forest == b.forest && a.root == b.root;
    }
};

/// A bijection R̄ -> F sending each (d-1)-cell to a top cell containing it;
/// pairs are (tail index, head index) sorted by tail.
struct FittingOrientation {
    int dim = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    VectorField field(const SimplicialComplex& K) const {
        std::vector<Arrow> arrows;
        for (auto [t, h] : pairs)
            arrows.push_back({K.cell(dim - 1, t), K.cell(dim, h)});
        return VectorField(std::move(arrows));
    }
    friend bool operator==(const FittingOrientation&, const FittingOrientation&) = default;
};

namespace detail {

/// Restriction of ∂_d to the given rows and columns.
inline IntegerMatrix boundary_block(const SimplicialComplex& K, int d,
                                    const std::vector<std::size_t>& rows,
                                    const std::vector<std::size_t>& cols) {
    IntegerMatrix B(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        auto f = K.facets(d, cols[c]);
        for (std::size_t j = 0; j < f.size(); ++j) {
            auto it = std::lower_bound(rows.begin(), rows.end(), f[j]);
            if (it != rows.end() && *it == f[j])
                B(static_cast<std::size_t>(it - rows.begin()), c) = (j % 2 == 0) ? 1 : -1;
        }
    }
    return B;
}

inline std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& sorted) {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (k < sorted.size() && sorted[k] == i) {
            ++k;
            continue;
        }
        out.push_back(i);
    }
    return out;
}

/// Stack of vectors kept in fraction-free (Bareiss) echelon form, so every
/// stored entry is a minor of the inserted vectors. push() fails on a
/// dependent vector; pop() undoes the last successful push.
template <class T>
class EchelonStack {
public:
    explicit EchelonStack(std::size_t length) : length_(length) {}

    std::size_t size() const noexcept { return rows_.size(); }

    bool push(std::vector<T> v) {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const T& prev = k == 0 ? one_ : rows_[k - 1][pivots_[k - 1]];
            const std::size_t p = pivots_[k];
            const T& a = rows_[k][p];
            const T b = v[p];
            for (std::size_t j = 0; j < length_; ++j)
                v[j] = arith::sub(arith::mul(v[j], a), arith::mul(b, rows_[k][j])) / prev;
        }
        for (std::size_t j = 0; j < length_; ++j)
            if (v[j] != 0) {
                pivots_.push_back(j);
                rows_.push_back(std::move(v));
                return true;
            }
        return false;
    }

    void pop() {
        rows_.pop_back();
        pivots_.pop_back();
    }

    /// Last pivot; for a full square system this is ± the determinant.
    const T& last_pivot() const { return rows_.back()[pivots_.back()]; }

private:
    std::size_t length_;
    std::vector<std::vector<T>> rows_;
    std::vector<std::size_t> pivots_;
    T one_ = T(1);
};

/// Depth-first enumeration of forests (columns, with rank pruning) and of
/// their roots (row subsets R̄ of size |F|, again with rank pruning).
template <class T, class Visitor>
void search_rooted_forests(const SimplicialComplex& K, int d, std::optional<std::size_t> root_size,
                           Visitor&& visit) {
    const std::size_t n = K.size(d - 1);
    const std::size_t m = K.size(d);
    // Signed columns of ∂_d.
    std::vector<std::vector<T>> column(m, std::vector<T>(n, T(0)));
    for (std::size_t c = 0; c < m; ++c) {
        auto f = K.facets(d, c);
        for (std::size_t j = 0; j < f.size(); ++j)
            column[c][f[j]] = (j % 2 == 0) ? T(1) : T(-1);
    }
    std::optional<std::size_t> want_forest;
    if (root_size) {
        if (*root_size > n)
            return;
        want_forest = n - *root_size;
        if (*want_forest > m)
            return;
    }

    std::vector<std::size_t> forest;
    EchelonStack<T> cols(n);

    auto roots_for = [&]() {
        const std::size_t k = forest.size();
        std::vector<std::size_t> candidates;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c : forest)
                if (column[c][r] != 0) {
                    candidates.push_back(r);
                    break;
                }
        if (k == 0) {
            RootedForest rf;
            rf.dim = d;
            rf.root = complement(n, {});
            rf.weight = 1;
            visit(rf);
            return;
        }
        std::vector<std::size_t> chosen;
        EchelonStack<T> rows(k);
        std::function<void(std::size_t)> rec = [&](std::size_t at) {
            if (chosen.size() == k) {
                RootedForest rf;
                rf.dim = d;
                rf.forest = forest;
                rf.non_root = chosen;
                rf.root = complement(n, chosen);
                rf.weight = arith::abs(Integer(rows.last_pivot()));
                visit(rf);
                return;
            }
            if (candidates.size() - at < k - chosen.size())
                return;
            const std::size_t r = candidates[at];
            std::vector<T> v(k);
            for (std::size_t j = 0; j < k; ++j)
                v[j] = column[forest[j]][r];
            if (rows.push(std::move(v))) {
                chosen.push_back(r);
                rec(at + 1);
                chosen.pop_back();
                rows.pop();
            }
            rec(at + 1);
        };
        rec(0);
    };

    std::function<void(std::size_t)> rec = [&](std::size_t at) {
        if (!want_forest || forest.size() == *want_forest)
            roots_for();
        if (want_forest && forest.size() == *want_forest)
            return;
        for (std::size_t c = at; c < m; ++c) {
            if (want_forest && m - c < *want_forest - forest.size())
                return;
            if (!cols.push(column[c]))
                continue;
            forest.push_back(c);
            rec(c + 1);
            forest.pop_back();
            cols.pop();
        }
    };
    rec(0);
}

/// True when every minor of ∂_d, and every product of two of them, fits in
/// int64: 2(d+1)^k < 2^63 for k = min(|K_{d-1}|, |K_d|) by Hadamard's bound.
inline bool boundary_minors_fit_word(const SimplicialComplex& K, int d) {
    const std::size_t k = std::min(K.size(d - 1), K.size(d));
    Integer bound = 2;
    for (std::size_t i = 0; i < k; ++i)
        bound *= (d + 1);
    return bound < (Integer(1) << 62);
}

} // namespace detail

/// True iff the boundary columns of the given top cells are independent.
inline bool is_forest(const SimplicialComplex& K, const std::vector<Cell>& F) {
    const int d = K.dim();
    if (d < 1)
        throw Error("is_forest: complex must have dimension >= 1");
    std::vector<std::size_t> cols;
    for (const auto& c : F) {
        if (c.dim() != d)
            throw Error("is_forest: " + c.str() + " is not a top cell");
        cols.push_back(K.index_of(c));
    }
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(cols.begin(), cols.end()) != cols.end())
        throw Error("is_forest: repeated cell");
    if (cols.empty())
        return true;
    std::vector<std::size_t> rows(K.size(d - 1));
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    return rank(detail::boundary_block(K, d, rows, cols)) == cols.size();
}

/// Streams every rooted forest of the top dimension, optionally only those
/// with |R| = root_size. Forest order is depth-first over top cells in
/// canonical order; roots likewise over (d-1)-cells.
template <class Visitor>
void for_each_rooted_forest(const SimplicialComplex& K, Visitor&& visit,
                            std::optional<std::size_t> root_size = std::nullopt,
                            const Limits& limits = {}) {
    const int d = K.dim();
    if (d < 1)
        throw Error("rooted forests need dimension >= 1");
    check_guard(K, d, limits);
    if (detail::boundary_minors_fit_word(K, d))
        detail::search_rooted_forests<std::int64_t>(K, d, root_size, visit);
    else
        detail::search_rooted_forests<Integer>(K, d, root_size, visit);
}

inline std::vector<RootedForest> enumerate_rooted_forests(const SimplicialComplex& K,
                                                          std::optional<std::size_t> root_size = std::nullopt,
                                                          const Limits& limits = {}) {
    std::vector<RootedForest> out;
    for_each_rooted_forest(K, [&](const RootedForest& rf) { out.push_back(rf); }, root_size, limits);
    return out;
}

/// Σ over rooted forests of |H_{d-1}(F,R)|² λ^{|R|}.
inline IntegerPolynomial forest_generating_polynomial(const SimplicialComplex& K, const Limits& limits = {}) {
    std::vector<Integer> coeffs(K.size(K.dim() - 1) + 1);
    for_each_rooted_forest(
        K, [&](const RootedForest& rf) { coeffs[rf.root.size()] += rf.weight * rf.weight; },
        std::nullopt, limits);
    return IntegerPolynomial(std::move(coeffs));
}

/// Builds a RootedForest from cells and checks the root certificate:
/// |R̄| = |F| and ∂_d[R̄, F] nonsingular. Throws when (F, R) is not a rooted forest.
inline RootedForest make_rooted_forest(const SimplicialComplex& K, const std::vector<Cell>& F,
                                       const std::vector<Cell>& R) {
    const int d = K.dim();
    RootedForest rf;
    rf.dim = d;
    for (const auto& c : F) {
        if (c.dim() != d)
            throw Error("forest cell " + c.str() + " is not a top cell");
        rf.forest.push_back(K.index_of(c));
    }
    for (const auto& c : R) {
        if (c.dim() != d - 1)
            throw Error("root cell " + c.str() + " has the wrong dimension");
        rf.root.push_back(K.index_of(c));
    }
    std::sort(rf.forest.begin(), rf.forest.end());
    std::sort(rf.root.begin(), rf.root.end());
    if (std::adjacent_find(rf.forest.begin(), rf.forest.end()) != rf.forest.end() ||
        std::adjacent_find(rf.root.begin(), rf.root.end()) != rf.root.end())
        throw Error("repeated cell in rooted forest");
    rf.non_root = detail::complement(K.size(d - 1), rf.root);
    if (rf.non_root.size() != rf.forest.size())
        throw Error("not a rooted forest: |R̄| != |F|");
    const Integer det = determinant(detail::boundary_block(K, d, rf.non_root, rf.forest));
    if (det == 0)
        throw Error("not a rooted forest: root rows are not a basis");
    rf.weight = arith::abs(det);
    return rf;
}

/// Tie-break for peeling: which free (d-1)-cell is collapsed first.
enum class PeelOrder { LowestFirst, HighestFirst };

/// Collapses F onto R by repeatedly removing a free non-root (d-1)-cell
/// together with its only remaining coface in F. Returns the resulting
/// bijection when all of R̄ is consumed, or nullopt when peeling stalls.
/// A successful result is the unique acyclic fitting orientation.
inline std::optional<FittingOrientation> acyclic_fitting_orientation(const SimplicialComplex& K,
                                                                     const RootedForest& rf,
                                                                     PeelOrder order = PeelOrder::LowestFirst) {
    const int d = rf.dim;
    if (d != K.dim() || rf.non_root.size() != rf.forest.size())
        throw Error("acyclic_fitting_orientation: invalid rooted forest");
    const std::size_t n = K.size(d - 1);
    std::vector<char> in_forest(K.size(d), 0);
    for (std::size_t t : rf.forest)
        in_forest[t] = 1;
    std::vector<char> open(n, 0); // non-root and not yet matched
    for (std::size_t r : rf.non_root)
        open[r] = 1;
    std::vector<std::size_t> remaining(n, 0);
    for (std::size_t t : rf.forest)
        for (std::size_t r : K.facets(d, t))
            ++remaining[r];

    auto cmp = [order](std::size_t a, std::size_t b) {
        return order == PeelOrder::LowestFirst ? a > b : a < b;
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> free_cells(cmp);
    for (std::size_t r : rf.non_root)
        if (remaining[r] == 1)
            free_cells.push(r);

    FittingOrientation psi;
    psi.dim = d;
    while (!free_cells.empty()) {
        const std::size_t r = free_cells.top();
        free_cells.pop();
        if (!open[r] || remaining[r] != 1)
            continue;
        std::size_t head = npos;
        for (std::size_t t : K.cofaces(d - 1, r))
            if (in_forest[t]) {
                head = t;
                break;
            }
        psi.pairs.emplace_back(r, head);
        open[r] = 0;
        in_forest[head] = 0;
        for (std::size_t s : K.facets(d, head)) {
            --remaining[s];
            if (open[s] && remaining[s] == 1)
                free_cells.push(s);
        }
    }
    if (psi.pairs.size() != rf.non_root.size())
        return std::nullopt;
    std::sort(psi.pairs.begin(), psi.pairs.end());
    return psi;
}

/// Whether F collapses simplicially onto R.
inline bool collapses_to_root(const SimplicialComplex& K, const RootedForest& rf) {
    return acyclic_fitting_orientation(K, rf).has_value();
}

/// |H_{d-1}(F, R)|, computed as |det ∂_d[R̄, F]| and as the product of the
/// invariant factors of the same relative boundary block; the two must agree.
inline Integer relative_homology_order(const SimplicialComplex& K, const RootedForest& rf) {
    const IntegerMatrix block = detail::boundary_block(K, rf.dim, rf.non_root, rf.forest);
    if (!block.is_square())
        throw Error("relative_homology_order: invalid rooted forest");
    const Integer by_det = arith::abs(determinant(block));
    const SmithForm snf = smith_normal_form(block);
    Integer by_snf = snf.rank == rf.forest.size() ? Integer(1) : Integer(0);
    if (by_snf != 0)
        for (const auto& f : snf.factors)
            by_snf *= f;
    if (by_det != by_snf)
        throw std::logic_error("relative_homology_order: determinant and Smith form disagree");
    return by_det;
}

/// Λ_i(K) and ε_i: rooted forests with |R| = i that do not collapse, and the
/// sum of their squared weights.
struct Defect {
    std::size_t root_size = 0;
    std::vector<RootedForest> members;
    Integer epsilon = 0;
};

inline Defect defect(const SimplicialComplex& K, std::size_t i, const Limits& limits = {}) {
    if (K.dim() < 1 || i > K.size(K.dim() - 1))
        throw Error("defect: root size out of range");
    Defect D;
    D.root_size = i;
    for_each_rooted_forest(
        K,
        [&](const RootedForest& rf) {
            if (!collapses_to_root(K, rf)) {
                D.epsilon += rf.weight * rf.weight;
                D.members.push_back(rf);
            }
        },
        i, limits);
    return D;
}

/// All ε_i at once (index i = root size), in a single enumeration.
inline std::vector<Defect> defects(const SimplicialComplex& K, const Limits& limits = {}) {
    const std::size_t n = K.size(K.dim() - 1);
    std::vector<Defect> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        out[i].root_size = i;
    for_each_rooted_forest(
        K,
        [&](const RootedForest& rf) {
            if (!collapses_to_root(K, rf)) {
                auto& D = out[rf.root.size()];
                D.epsilon += rf.weight * rf.weight;
                D.members.push_back(rf);
            }
        },
        std::nullopt, limits);
    return out;
}

/// The rooted forest of a gradient: F are the heads of its arrows, R the
/// (d-1)-cells left unmatched (complex-level root, |R| = n - |F|).
inline RootedForest rooted_forest_of(const SimplicialComplex& K, const VectorField& V) {
    const int d = K.dim();
    std::vector<Cell> F, R;
    const FieldIndex idx = index_field(K, V);
    for (const auto& a : V.arrows())
        if (a.head.dim() != d)
            throw Error("rooted_forest_of: arrows must end in the top dimension");
    for (std::size_t t = 0; t < K.size(d); ++t)
        if (idx.down[static_cast<std::size_t>(d)][t] != npos)
            F.push_back(K.cell(d, t));
    for (std::size_t r = 0; r < K.size(d - 1); ++r)
        if (idx.up[static_cast<std::size_t>(d - 1)][r] == npos)
            R.push_back(K.cell(d - 1, r));
    return make_rooted_forest(K, F, R);
}

/// Remainder of a graph gradient: the matched edges, rooted at their sinks
/// (critical vertices inside the edge-subgraph, one per component). Unlike
/// rooted_forest_of, vertices outside the forest are not listed in the root.
inline RootedForest remainder(const SimplicialComplex& G, const VectorField& V) {
    if (G.dim() != 1)
        throw Error("remainder: complex must be 1-dimensional");
    if (!is_acyclic(G, V))
        throw Error("remainder: gradient is not acyclic");
    const FieldIndex idx = index_field(G, V);
    RootedForest rf;
    rf.dim = 1;
    std::vector<char> touched(G.size(0), 0);
    for (std::size_t e = 0; e < G.size(1); ++e)
        if (idx.down[1][e] != npos) {
            rf.forest.push_back(e);
            for (std::size_t v : G.facets(1, e))
                touched[v] = 1;
        }
    for (std::size_t v = 0; v < G.size(0); ++v) {
        if (touched[v] && idx.up[0][v] == npos)
            rf.root.push_back(v);
        else if (touched[v])
            rf.non_root.push_back(v);
    }
    rf.weight = 1;
    return rf;
}

} // namespace morseforest
