#pragma once

// Discrete vector fields, acyclicity, enumeration of gradients supported on
// the top two levels, and explicit discrete Morse functions.

#include "morseforest/complex.hpp"
#include "morseforest/error.hpp"
#include "morseforest/integer.hpp"
#include "morseforest/linalg.hpp"
#include "morseforest/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <thread>
#include <vector>

namespace morseforest {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// A pair (tail, head) with tail a codimension-1 face of head.
struct Arrow {
    Cell tail;
    Cell head;
    friend bool operator==(const Arrow&, const Arrow&) = default;
    friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// A discrete vector field: arrows with no cell used twice. A field whose
/// heads all have the top dimension d is a top matching, the objects counted
/// by the gradient census.
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(std::vector<Arrow> arrows) : arrows_(std::move(arrows)) {
        std::sort(arrows_.begin(), arrows_.end());
    }
    VectorField(std::initializer_list<Arrow> arrows) : VectorField(std::vector<Arrow>(arrows)) {}

    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    std::size_t size() const noexcept { return arrows_.size(); }
    bool empty() const noexcept { return arrows_.empty(); }

    friend bool operator==(const VectorField&, const VectorField&) = default;

private:
    std::vector<Arrow> arrows_;
};

/// Partner lookup per dimension: up[p][i] is the (p+1)-cell paired with
/// (p, i), down[p][i] the (p-1)-cell; npos when unpaired.
struct FieldIndex {
    std::vector<std::vector<std::size_t>> up;
    std::vector<std::vector<std::size_t>> down;

    bool paired(int p, std::size_t i) const {
        return up[static_cast<std::size_t>(p)][i] != npos || down[static_cast<std::size_t>(p)][i] != npos;
    }
};

/// Checks incidence and the at-most-one-pair rule; throws on violation.
inline FieldIndex index_field(const SimplicialComplex& K, const VectorField& V) {
    FieldIndex idx;
    const auto levels = static_cast<std::size_t>(K.dim() + 1);
    idx.up.resize(levels);
    idx.down.resize(levels);
    for (std::size_t p = 0; p < levels; ++p) {
        idx.up[p].assign(K.size(static_cast<int>(p)), npos);
        idx.down[p].assign(K.size(static_cast<int>(p)), npos);
    }
    for (const auto& a : V.arrows()) {
        if (a.head.dim() != a.tail.dim() + 1 || !a.head.contains(a.tail))
            throw Error("pair " + a.tail.str() + " -> " + a.head.str() + " is not incident");
        const auto t = K.find(a.tail);
        const auto h = K.find(a.head);
        if (!t || !h)
            throw Error("pair " + a.tail.str() + " -> " + a.head.str() + " is not in the complex");
        const auto p = static_cast<std::size_t>(a.tail.dim());
        if (idx.paired(static_cast<int>(p), *t) || idx.paired(static_cast<int>(p) + 1, *h))
            throw Error("cell appears in more than one pair");
        idx.up[p][*t] = *h;
        idx.down[p + 1][*h] = *t;
    }
    return idx;
}

/// True iff the Hasse diagram, with paired edges pointing up and all others
/// down, has no directed cycle. Cycles of such a digraph live within two
/// adjacent levels, so each level pair is searched on its own.
inline bool is_acyclic(const SimplicialComplex& K, const VectorField& V) {
    const FieldIndex idx = index_field(K, V);
    for (int p = 1; p <= K.dim(); ++p) {
        // Alternating walk head -> other facet -> its head -> ...; a head seen
        // twice on the current path closes a cycle.
        const auto& down = idx.down[static_cast<std::size_t>(p)];
        const auto& up = idx.up[static_cast<std::size_t>(p - 1)];
        std::vector<int> state(K.size(p), 0); // 0 new, 1 on stack, 2 done
        std::function<bool(std::size_t)> dfs = [&](std::size_t h) {
            state[h] = 1;
            for (std::size_t f : K.facets(p, h)) {
                if (f == down[h])
                    continue;
                const std::size_t next = up[f];
                if (next == npos)
                    continue;
                if (state[next] == 1)
                    return true;
                if (state[next] == 0 && dfs(next))
                    return true;
            }
            state[h] = 2;
            return false;
        };
        for (std::size_t h = 0; h < K.size(p); ++h)
            if (down[h] != npos && state[h] == 0 && dfs(h))
                return false;
    }
    return true;
}

/// Cells not used by any arrow, per dimension.
inline std::vector<std::vector<Cell>> critical_cells(const SimplicialComplex& K, const VectorField& V) {
    const FieldIndex idx = index_field(K, V);
    std::vector<std::vector<Cell>> out(static_cast<std::size_t>(K.dim() + 1));
    for (int p = 0; p <= K.dim(); ++p)
        for (std::size_t i = 0; i < K.size(p); ++i)
            if (!idx.paired(p, i))
                out[static_cast<std::size_t>(p)].push_back(K.cell(p, i));
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration of acyclic matchings between levels d-1 and d

/// Budget for exhaustive enumerations.
struct Limits {
    /// Maximum |K_{d-1}| + |K_d|.
    std::size_t max_cells = 40;
    /// Worker threads for partitioned searches.
    unsigned jobs = 1;
};

inline void check_guard(const SimplicialComplex& K, int d, const Limits& limits) {
    const std::size_t cells = K.size(d - 1) + K.size(d);
    if (cells > limits.max_cells)
        throw GuardExceeded(cells, limits.max_cells);
}

namespace detail {

/// Depth-first search over the d-cells in canonical order. Each cell is
/// either left critical (explored first) or matched to a free facet, in
/// facet canonical order. Acyclicity is maintained incrementally: matching
/// (σ, τ) closes a cycle iff σ is reachable from τ in the current digraph.
class TopMatchingSearch {
public:
    TopMatchingSearch(const SimplicialComplex& K, int d)
        : K_(K), d_(d), m_(K.size(d)), n_(K.size(d - 1)),
          tail_of_(m_, npos), head_of_(n_, npos), mark_(m_, 0) {
        // Facets of each top cell in canonical (lexicographic) order.
        sorted_facets_.resize(m_);
        for (std::size_t t = 0; t < m_; ++t) {
            auto f = K.facets(d, t);
            sorted_facets_[t].assign(f.begin(), f.end());
            std::sort(sorted_facets_[t].begin(), sorted_facets_[t].end());
        }
    }

    std::size_t top_count() const noexcept { return m_; }
    std::size_t facet_count() const noexcept { return n_; }
    int level() const noexcept { return d_; }
    const std::vector<std::size_t>& tail_of() const noexcept { return tail_of_; }
    const std::vector<std::size_t>& head_of() const noexcept { return head_of_; }
    std::size_t pairs() const noexcept { return pairs_; }

    /// Assignment of the first cells, as produced by prefixes().
    void apply(const std::vector<std::size_t>& prefix) {
        for (std::size_t t = 0; t < prefix.size(); ++t)
            if (prefix[t] != npos)
                pair(prefix[t], t);
    }

    /// All valid assignments of the first k top cells (npos = critical).
    std::vector<std::vector<std::size_t>> prefixes(std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> cur;
        std::function<void(std::size_t)> rec = [&](std::size_t t) {
            if (t == k || t == m_) {
                out.push_back(cur);
                return;
            }
            cur.push_back(npos);
            rec(t + 1);
            cur.pop_back();
            for (std::size_t s : sorted_facets_[t]) {
                if (head_of_[s] != npos || closes_cycle(t, s))
                    continue;
                pair(s, t);
                cur.push_back(s);
                rec(t + 1);
                cur.pop_back();
                unpair(s, t);
            }
        };
        rec(0);
        return out;
    }

    /// Visits every acyclic matching extending the current state from top
    /// cell `start`. The visitor sees the live search state.
    template <class Visitor>
    void run(std::size_t start, Visitor&& visit) {
        if (start == m_) {
            visit(*this);
            return;
        }
        run(start + 1, visit);
        for (std::size_t s : sorted_facets_[start]) {
            if (head_of_[s] != npos || closes_cycle(start, s))
                continue;
            pair(s, start);
            run(start + 1, visit);
            unpair(s, start);
        }
    }

    VectorField field() const {
        std::vector<Arrow> arrows;
        for (std::size_t t = 0; t < m_; ++t)
            if (tail_of_[t] != npos)
                arrows.push_back({K_.cell(d_ - 1, tail_of_[t]), K_.cell(d_, t)});
        return VectorField(std::move(arrows));
    }

private:
    void pair(std::size_t s, std::size_t t) {
        tail_of_[t] = s;
        head_of_[s] = t;
        ++pairs_;
    }
    void unpair(std::size_t s, std::size_t t) {
        tail_of_[t] = npos;
        head_of_[s] = npos;
        --pairs_;
    }

    bool closes_cycle(std::size_t head, std::size_t tail) {
        ++epoch_;
        stack_.clear();
        stack_.push_back(head);
        mark_[head] = epoch_;
        while (!stack_.empty()) {
            const std::size_t h = stack_.back();
            stack_.pop_back();
            const std::size_t own = (h == head) ? tail : tail_of_[h];
            for (std::size_t f : K_.facets(d_, h)) {
                if (f == own)
                    continue;
                if (f == tail)
                    return true;
                const std::size_t next = head_of_[f];
                if (next != npos && mark_[next] != epoch_) {
                    mark_[next] = epoch_;
                    stack_.push_back(next);
                }
            }
        }
        return false;
    }

    const SimplicialComplex& K_;
    int d_;
    std::size_t m_;
    std::size_t n_;
    std::vector<std::size_t> tail_of_;
    std::vector<std::size_t> head_of_;
    std::vector<std::vector<std::size_t>> sorted_facets_;
    std::vector<std::uint64_t> mark_;
    std::uint64_t epoch_ = 0;
    std::vector<std::size_t> stack_;
    std::size_t pairs_ = 0;
};

inline void require_level(const SimplicialComplex& K, int d) {
    if (d < 1 || d > K.dim())
        throw Error("matching level " + std::to_string(d) + " out of range");
}

} // namespace detail

/// Calls visit(field) for every acyclic matching between levels d-1 and d,
/// in depth-first order (critical branch first).
template <class Visitor>
void for_each_acyclic_matching(const SimplicialComplex& K, int d, Visitor&& visit) {
    detail::require_level(K, d);
    detail::TopMatchingSearch search(K, d);
    search.run(0, [&](const detail::TopMatchingSearch& s) { visit(s.field()); });
}

/// |𝓜_ℓ(K)| for every ℓ: gradients whose only non-critical cells lie in the
/// top two levels, counted by their number ℓ of critical top cells.
struct GradientCensus {
    int dim = 0;
    std::size_t n = 0; ///< |K_{d-1}|
    std::size_t m = 0; ///< |K_d|
    std::vector<Integer> counts; ///< counts[ℓ], 0 <= ℓ <= m

    Integer total() const {
        Integer s = 0;
        for (const auto& c : counts)
            s += c;
        return s;
    }
};

/// Counts acyclic matchings between levels d-1 and d (d defaults to dim K).
/// The first branching decisions are split across limits.jobs workers;
/// the merged counts do not depend on the split.
inline GradientCensus gradient_census(const SimplicialComplex& K, const Limits& limits = {},
                                      std::optional<int> level = std::nullopt) {
    const int d = level.value_or(K.dim());
    detail::require_level(K, d);
    check_guard(K, d, limits);
    GradientCensus C;
    C.dim = d;
    C.n = K.size(d - 1);
    C.m = K.size(d);

    std::vector<std::uint64_t> by_pairs(C.m + 1, 0);
    if (limits.jobs <= 1 || C.m < 4) {
        detail::TopMatchingSearch search(K, d);
        search.run(0, [&](const detail::TopMatchingSearch& s) { ++by_pairs[s.pairs()]; });
    } else {
        std::vector<std::vector<std::size_t>> tasks;
        std::size_t depth = 1;
        {
            detail::TopMatchingSearch probe(K, d);
            do {
                tasks = probe.prefixes(depth);
                ++depth;
            } while (tasks.size() < 8 * static_cast<std::size_t>(limits.jobs) && depth <= C.m);
        }
        const std::size_t prefix_len = depth - 1;
        std::atomic<std::size_t> next{0};
        std::vector<std::vector<std::uint64_t>> partial(limits.jobs,
                                                        std::vector<std::uint64_t>(C.m + 1, 0));
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < limits.jobs; ++w)
            workers.emplace_back([&, w] {
                for (std::size_t i = next++; i < tasks.size(); i = next++) {
                    detail::TopMatchingSearch search(K, d);
                    search.apply(tasks[i]);
                    search.run(std::min(prefix_len, C.m), [&](const detail::TopMatchingSearch& s) {
                        ++partial[w][s.pairs()];
                    });
                }
            });
        for (auto& t : workers)
            t.join();
        for (const auto& p : partial)
            for (std::size_t k = 0; k <= C.m; ++k)
                by_pairs[k] += p[k];
    }
    C.counts.assign(C.m + 1, 0);
    for (std::size_t k = 0; k <= C.m; ++k)
        C.counts[C.m - k] = by_pairs[k];
    return C;
}

/// Σ_{i=0}^{n} |𝓜_{m-i}| λ^{n-i}.
inline IntegerPolynomial census_polynomial(const GradientCensus& C) {
    std::vector<Integer> coeffs(C.n + 1);
    for (std::size_t i = 0; i <= C.n; ++i)
        if (i <= C.m)
            coeffs[C.n - i] = C.counts[C.m - i];
    return IntegerPolynomial(std::move(coeffs));
}

/// Every gradient on a graph (all acyclic vertex-edge matchings).
template <class Visitor>
void enumerate_graph_gradients(const SimplicialComplex& G, Visitor&& visit) {
    if (G.dim() != 1)
        throw Error("enumerate_graph_gradients: complex must be 1-dimensional");
    for_each_acyclic_matching(G, 1, std::forward<Visitor>(visit));
}

inline std::vector<VectorField> graph_gradients(const SimplicialComplex& G) {
    std::vector<VectorField> out;
    enumerate_graph_gradients(G, [&](const VectorField& V) { out.push_back(V); });
    return out;
}

// ---------------------------------------------------------------------------
// Discrete Morse functions

/// Integer-valued function on cells; values[p][i] belongs to cell (p, i).
class MorseFunction {
public:
    MorseFunction() = default;
    explicit MorseFunction(std::vector<std::vector<long long>> values) : values_(std::move(values)) {}

    long long operator()(int p, std::size_t i) const {
        return values_.at(static_cast<std::size_t>(p)).at(i);
    }
    long long value(const SimplicialComplex& K, const Cell& c) const {
        return (*this)(c.dim(), K.index_of(c));
    }
    const std::vector<std::vector<long long>>& values() const noexcept { return values_; }

private:
    std::vector<std::vector<long long>> values_;
};

/// Builds f with V_f = V: each pair becomes one node of the Hasse diagram
/// with its remaining incidences oriented upward, and f is the longest-path
/// layer of that DAG. The empty field gives f(σ) = dim σ.
inline MorseFunction realize_morse_function(const SimplicialComplex& K, const VectorField& V) {
    const FieldIndex idx = index_field(K, V);
    // Node id per cell: paired cells share the id of their lower member.
    std::vector<std::size_t> offset(static_cast<std::size_t>(K.dim()) + 2, 0);
    for (int p = 0; p <= K.dim(); ++p)
        offset[static_cast<std::size_t>(p) + 1] = offset[static_cast<std::size_t>(p)] + K.size(p);
    const std::size_t total = offset.back();
    auto raw = [&](int p, std::size_t i) { return offset[static_cast<std::size_t>(p)] + i; };
    auto node = [&](int p, std::size_t i) {
        const std::size_t t = idx.down[static_cast<std::size_t>(p)][i];
        return t != npos ? raw(p - 1, t) : raw(p, i);
    };
    std::vector<std::vector<std::size_t>> succ(total);
    std::vector<std::size_t> indeg(total, 0);
    for (int p = 1; p <= K.dim(); ++p)
        for (std::size_t h = 0; h < K.size(p); ++h)
            for (std::size_t f : K.facets(p, h)) {
                if (idx.down[static_cast<std::size_t>(p)][h] == f)
                    continue;
                const std::size_t a = node(p - 1, f);
                const std::size_t b = node(p, h);
                succ[a].push_back(b);
                ++indeg[b];
            }
    std::vector<long long> layer(total, 0);
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < total; ++v)
        if (indeg[v] == 0)
            ready.push_back(v);
    std::size_t processed = 0;
    while (!ready.empty()) {
        const std::size_t v = ready.back();
        ready.pop_back();
        ++processed;
        for (std::size_t w : succ[v]) {
            layer[w] = std::max(layer[w], layer[v] + 1);
            if (--indeg[w] == 0)
                ready.push_back(w);
        }
    }
    // Upper members of pairs keep an isolated raw node; it is still processed.
    if (processed != total)
        throw Error("realize_morse_function: vector field is not acyclic");

    std::vector<std::vector<long long>> values(static_cast<std::size_t>(K.dim() + 1));
    for (int p = 0; p <= K.dim(); ++p) {
        auto& row = values[static_cast<std::size_t>(p)];
        row.resize(K.size(p));
        for (std::size_t i = 0; i < K.size(p); ++i)
            row[i] = layer[node(p, i)];
    }
    return MorseFunction(std::move(values));
}

/// Local counts behind the discrete Morse conditions at one cell.
struct MorseLocal {
    std::size_t faces_not_below = 0;  ///< facets τ with f(σ) <= f(τ)
    std::size_t cofaces_not_above = 0; ///< cofaces τ with f(τ) <= f(σ)
};

inline MorseLocal morse_local(const SimplicialComplex& K, const MorseFunction& f, int p, std::size_t i) {
    MorseLocal m;
    const long long v = f(p, i);
    if (p >= 1)
        for (std::size_t t : K.facets(p, i))
            if (v <= f(p - 1, t))
                ++m.faces_not_below;
    for (std::size_t t : K.cofaces(p, i))
        if (f(p + 1, t) <= v)
            ++m.cofaces_not_above;
    return m;
}

/// Both discrete Morse inequalities at every cell.
inline bool is_discrete_morse(const SimplicialComplex& K, const MorseFunction& f) {
    for (int p = 0; p <= K.dim(); ++p)
        for (std::size_t i = 0; i < K.size(p); ++i) {
            const MorseLocal m = morse_local(K, f, p, i);
            if (m.faces_not_below > 1 || m.cofaces_not_above > 1)
                return false;
        }
    return true;
}

/// For every non-critical cell, exactly one of the two exceptional
/// conditions holds (never both).
inline bool exceptional_conditions_exclusive(const SimplicialComplex& K, const MorseFunction& f) {
    for (int p = 0; p <= K.dim(); ++p)
        for (std::size_t i = 0; i < K.size(p); ++i) {
            const MorseLocal m = morse_local(K, f, p, i);
            if (m.faces_not_below > 0 && m.cofaces_not_above > 0)
                return false;
        }
    return true;
}

/// V_f = {(σ, τ) : σ a facet of τ, f(τ) <= f(σ)}.
inline VectorField induced_field(const SimplicialComplex& K, const MorseFunction& f) {
    std::vector<Arrow> arrows;
    for (int p = 1; p <= K.dim(); ++p)
        for (std::size_t h = 0; h < K.size(p); ++h)
            for (std::size_t t : K.facets(p, h))
                if (f(p, h) <= f(p - 1, t))
                    arrows.push_back({K.cell(p - 1, t), K.cell(p, h)});
    return VectorField(std::move(arrows));
}

/// c_p(f) for each p, with critical meaning both local counts are zero.
inline std::vector<std::size_t> critical_counts(const SimplicialComplex& K, const MorseFunction& f) {
    std::vector<std::size_t> c(static_cast<std::size_t>(K.dim() + 1), 0);
    for (int p = 0; p <= K.dim(); ++p)
        for (std::size_t i = 0; i < K.size(p); ++i) {
            const MorseLocal m = morse_local(K, f, p, i);
            if (m.faces_not_below == 0 && m.cofaces_not_above == 0)
                ++c[static_cast<std::size_t>(p)];
        }
    return c;
}

struct WeakMorseCheck {
    bool betti_bounds = false;  ///< c_i >= β_i for all i
    bool euler = false;         ///< Σ (-1)^i c_i = χ
    explicit operator bool() const noexcept { return betti_bounds && euler; }
};

inline WeakMorseCheck weak_morse_inequalities(const SimplicialComplex& K, const MorseFunction& f,
                                              const std::vector<std::size_t>& betti) {
    const auto c = critical_counts(K, f);
    WeakMorseCheck w;
    w.betti_bounds = true;
    long long alt = 0;
    for (std::size_t p = 0; p < c.size(); ++p) {
        if (c[p] < betti.at(p))
            w.betti_bounds = false;
        alt += (p % 2 == 0 ? 1 : -1) * static_cast<long long>(c[p]);
    }
    w.euler = alt == euler_characteristic(K);
    return w;
}

} // namespace morseforest
