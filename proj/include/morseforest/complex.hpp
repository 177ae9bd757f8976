#pragma once

// Finite simplicial complexes stored level by level in lexicographic order.
//
// The canonical index of a cell is its position inside its dimension; every
// matrix built from a complex uses these indices for rows and columns, and all
// orientation signs come from the ascending vertex order of each cell.

#include "morseforest/error.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace morseforest {

using Vertex = std::int32_t;

/// A simplex given by its strictly increasing vertex ids.
class Cell {
public:
    Cell() = default;

    /// Takes ownership of an already sorted, duplicate-free vertex list.
    explicit Cell(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.empty())
            throw Error("empty face");
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (vertices_[i] < 0)
                throw Error("negative vertex id");
            if (i > 0 && vertices_[i - 1] >= vertices_[i])
                throw Error("cell vertices must be strictly increasing");
        }
    }
    Cell(std::initializer_list<Vertex> vertices)
        : Cell(std::vector<Vertex>(vertices)) {}

    /// Sorts the input; repeated vertices are rejected as a degenerate face.
    static Cell from_unsorted(std::vector<Vertex> vertices) {
        if (vertices.empty())
            throw Error("empty face");
        std::sort(vertices.begin(), vertices.end());
        if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
            throw Error("degenerate face");
        return Cell(std::move(vertices));
    }

    int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    const std::vector<Vertex>& vertex_list() const noexcept { return vertices_; }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }

    /// The codimension-1 face obtained by deleting the j-th vertex.
    Cell without(std::size_t j) const {
        std::vector<Vertex> v;
        v.reserve(vertices_.size() - 1);
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (i != j)
                v.push_back(vertices_[i]);
        return Cell(std::move(v));
    }

    bool contains(const Cell& other) const {
        return std::includes(vertices_.begin(), vertices_.end(),
                             other.vertices_.begin(), other.vertices_.end());
    }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(vertices_[i]);
        }
        return s + "}";
    }

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell& a, const Cell& b) {
        return a.vertices_ <=> b.vertices_;
    }

private:
    std::vector<Vertex> vertices_;
};

struct CellHash {
    std::size_t operator()(const Cell& c) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (Vertex v : c.vertices()) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

/// Position of a cell in the complex: dimension plus canonical index.
struct CellRef {
    int dim = 0;
    std::size_t index = 0;
    friend bool operator==(const CellRef&, const CellRef&) = default;
    friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

/// Immutable, downward-closed simplicial complex.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of the given faces. Faces may repeat or be non-maximal.
    static SimplicialComplex from_maximal_faces(
        const std::vector<std::vector<Vertex>>& faces, std::string name = {}) {
        if (faces.empty())
            throw Error("empty complex");
        std::vector<std::set<std::vector<Vertex>>> levels;
        for (const auto& raw : faces) {
            Cell top = Cell::from_unsorted(raw);
            const auto& v = top.vertex_list();
            const std::size_t k = v.size();
            if (k > 24)
                throw Error("face too large");
            if (levels.size() < k)
                levels.resize(k);
            // Every non-empty subset, by bitmask.
            for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
                std::vector<Vertex> sub;
                for (std::size_t i = 0; i < k; ++i)
                    if (mask & (1u << i))
                        sub.push_back(v[i]);
                levels[sub.size() - 1].insert(std::move(sub));
            }
        }
        SimplicialComplex K;
        K.name_ = std::move(name);
        for (auto& level : levels) {
            std::vector<Cell> cells;
            cells.reserve(level.size());
            for (const auto& v : level)
                cells.emplace_back(v);
            K.cells_.push_back(std::move(cells));
        }
        K.build_incidence();
        return K;
    }

    /// Same complex from a flat list of cells (all closures are taken).
    static SimplicialComplex from_cells(const std::vector<Cell>& cells, std::string name = {}) {
        std::vector<std::vector<Vertex>> faces;
        faces.reserve(cells.size());
        for (const auto& c : cells)
            faces.push_back(c.vertex_list());
        return from_maximal_faces(faces, std::move(name));
    }

    const std::string& name() const noexcept { return name_; }
    SimplicialComplex renamed(std::string name) const {
        SimplicialComplex K = *this;
        K.name_ = std::move(name);
        return K;
    }

    int dim() const noexcept { return static_cast<int>(cells_.size()) - 1; }

    /// |K_d|; zero outside 0..dim.
    std::size_t size(int d) const noexcept {
        return (d < 0 || d > dim()) ? 0 : cells_[static_cast<std::size_t>(d)].size();
    }
    std::size_t total_cells() const noexcept {
        std::size_t n = 0;
        for (const auto& level : cells_)
            n += level.size();
        return n;
    }

    const std::vector<Cell>& cells(int d) const {
        check_dim(d);
        return cells_[static_cast<std::size_t>(d)];
    }
    const Cell& cell(int d, std::size_t i) const { return cells(d).at(i); }
    const Cell& cell(CellRef r) const { return cell(r.dim, r.index); }

    std::optional<std::size_t> find(const Cell& c) const {
        const int d = c.dim();
        if (d < 0 || d > dim())
            return std::nullopt;
        const auto& idx = index_[static_cast<std::size_t>(d)];
        auto it = idx.find(c);
        if (it == idx.end())
            return std::nullopt;
        return it->second;
    }
    bool contains(const Cell& c) const { return find(c).has_value(); }

    std::size_t index_of(const Cell& c) const {
        auto i = find(c);
        if (!i)
            throw Error("cell " + c.str() + " is not in the complex");
        return *i;
    }
    CellRef ref_of(const Cell& c) const { return {c.dim(), index_of(c)}; }

    /// Indices of the codimension-1 faces of cell (d, i), ordered by the
    /// position j of the deleted vertex; the incidence sign is (-1)^j.
    std::span<const std::size_t> facets(int d, std::size_t i) const {
        if (d < 1 || d > dim())
            throw Error("facets: dimension out of range");
        return facets_[static_cast<std::size_t>(d)].at(i);
    }

    /// Indices of the codimension-1 cofaces of cell (d, i), ascending.
    std::span<const std::size_t> cofaces(int d, std::size_t i) const {
        check_dim(d);
        if (d == dim())
            return {};
        return cofaces_[static_cast<std::size_t>(d)].at(i);
    }

    /// Cells of dimension < d+1 only.
    SimplicialComplex skeleton(int d) const {
        if (d < 0)
            throw Error("skeleton: negative dimension");
        std::vector<Cell> keep;
        for (int p = 0; p <= std::min(d, dim()); ++p)
            keep.insert(keep.end(), cells(p).begin(), cells(p).end());
        return from_cells(keep, name_);
    }

    /// Vertex ids present in the complex (canonical order).
    std::vector<Vertex> vertex_ids() const {
        std::vector<Vertex> out;
        for (const auto& c : cells(0))
            out.push_back(c[0]);
        return out;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.cells_ == b.cells_;
    }

private:
    void check_dim(int d) const {
        if (d < 0 || d > dim())
            throw Error("dimension " + std::to_string(d) + " out of range");
    }

    void build_incidence() {
        const std::size_t levels = cells_.size();
        index_.assign(levels, {});
        for (std::size_t d = 0; d < levels; ++d)
            for (std::size_t i = 0; i < cells_[d].size(); ++i)
                index_[d].emplace(cells_[d][i], i);
        facets_.assign(levels, {});
        cofaces_.assign(levels, {});
        for (std::size_t d = 0; d < levels; ++d)
            cofaces_[d].assign(cells_[d].size(), {});
        for (std::size_t d = 1; d < levels; ++d) {
            facets_[d].resize(cells_[d].size());
            for (std::size_t i = 0; i < cells_[d].size(); ++i) {
                const Cell& c = cells_[d][i];
                for (std::size_t j = 0; j <= d; ++j) {
                    std::size_t f = index_[d - 1].at(c.without(j));
                    facets_[d][i].push_back(f);
                    cofaces_[d - 1][f].push_back(i);
                }
            }
        }
        // Cofaces were pushed in increasing order of i already.
    }

    std::string name_;
    std::vector<std::vector<Cell>> cells_;
    std::vector<std::unordered_map<Cell, std::size_t, CellHash>> index_;
    std::vector<std::vector<std::vector<std::size_t>>> facets_;
    std::vector<std::vector<std::vector<std::size_t>>> cofaces_;
};

/// Codimension-1 faces of a cell, lexicographic.
inline std::vector<Cell> faces_of(const SimplicialComplex& K, const Cell& c) {
    const std::size_t i = K.index_of(c);
    std::vector<Cell> out;
    if (c.dim() == 0)
        return out;
    for (std::size_t f : K.facets(c.dim(), i))
        out.push_back(K.cell(c.dim() - 1, f));
    std::sort(out.begin(), out.end());
    return out;
}

/// Codimension-1 cofaces of a cell, lexicographic.
inline std::vector<Cell> cofaces_of(const SimplicialComplex& K, const Cell& c) {
    const std::size_t i = K.index_of(c);
    std::vector<Cell> out;
    for (std::size_t f : K.cofaces(c.dim(), i))
        out.push_back(K.cell(c.dim() + 1, f));
    return out;
}

inline long long euler_characteristic(const SimplicialComplex& K) {
    long long chi = 0;
    for (int d = 0; d <= K.dim(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(K.size(d));
    return chi;
}

// ---------------------------------------------------------------------------
// Hasse diagram

struct HasseEdge {
    CellRef lower; ///< face
    CellRef upper; ///< coface, one dimension higher
    friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

/// Covering relation of the face poset. Every edge points upward; a matching
/// marks some of them "upward" and the rest are read downward.
struct HasseDigraph {
    std::vector<CellRef> nodes;
    std::vector<HasseEdge> up_edges;
};

inline HasseDigraph hasse_diagram(const SimplicialComplex& K) {
    HasseDigraph H;
    for (int d = 0; d <= K.dim(); ++d)
        for (std::size_t i = 0; i < K.size(d); ++i) {
            H.nodes.push_back({d, i});
            if (d >= 1)
                for (std::size_t f : K.facets(d, i))
                    H.up_edges.push_back({{d - 1, f}, {d, i}});
        }
    return H;
}

/// The Hasse diagram read as a graph: cell k (dimension-major, lexicographic)
/// becomes vertex k. For a graph this is its subdivision.
inline SimplicialComplex hasse_as_graph(const SimplicialComplex& K) {
    std::vector<std::size_t> offset(static_cast<std::size_t>(K.dim()) + 2, 0);
    for (int d = 0; d <= K.dim(); ++d)
        offset[static_cast<std::size_t>(d) + 1] =
            offset[static_cast<std::size_t>(d)] + K.size(d);
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t k = 0; k < offset.back(); ++k)
        edges.push_back({static_cast<Vertex>(k)});
    for (const auto& e : hasse_diagram(K).up_edges)
        edges.push_back({static_cast<Vertex>(offset[static_cast<std::size_t>(e.lower.dim)] + e.lower.index),
                         static_cast<Vertex>(offset[static_cast<std::size_t>(e.upper.dim)] + e.upper.index)});
    return SimplicialComplex::from_maximal_faces(edges, K.name().empty() ? "" : "hasse(" + K.name() + ")");
}

// ---------------------------------------------------------------------------
// Graph helpers (1-dimensional complexes)

/// Connected components of the 1-skeleton, as a component id per vertex index.
inline std::vector<std::size_t> vertex_components(const SimplicialComplex& K) {
    const std::size_t n = K.size(0);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    if (K.dim() >= 1)
        for (std::size_t e = 0; e < K.size(1); ++e) {
            auto f = K.facets(1, e);
            parent[root(f[0])] = root(f[1]);
        }
    std::vector<std::size_t> comp(n);
    std::map<std::size_t, std::size_t> relabel;
    for (std::size_t v = 0; v < n; ++v) {
        auto [it, _] = relabel.emplace(root(v), relabel.size());
        comp[v] = it->second;
    }
    return comp;
}

inline bool is_connected(const SimplicialComplex& K) {
    auto comp = vertex_components(K);
    return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

// ---------------------------------------------------------------------------
// Pseudomanifolds and orientation

struct PseudomanifoldCheck {
    bool ok = false;
    std::string reason;
    explicit operator bool() const noexcept { return ok; }
};

/// Pure, every (d-1)-cell in exactly two d-cells, and the d-cells connected
/// through shared (d-1)-cells.
inline PseudomanifoldCheck is_pseudomanifold(const SimplicialComplex& K) {
    const int d = K.dim();
    if (d < 1)
        return {false, "dimension must be at least 1"};
    for (int p = 0; p < d; ++p)
        for (std::size_t i = 0; i < K.size(p); ++i)
            if (K.cofaces(p, i).empty())
                return {false, "cell " + K.cell(p, i).str() + " is not a face of any " +
                                   std::to_string(d) + "-cell"};
    for (std::size_t r = 0; r < K.size(d - 1); ++r) {
        const std::size_t n = K.cofaces(d - 1, r).size();
        if (n != 2)
            return {false, "cell " + K.cell(d - 1, r).str() + " has " + std::to_string(n) +
                               " cofaces"};
    }
    std::vector<bool> seen(K.size(d), false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
        std::size_t t = q.front();
        q.pop();
        for (std::size_t r : K.facets(d, t))
            for (std::size_t u : K.cofaces(d - 1, r))
                if (!seen[u]) {
                    seen[u] = true;
                    ++reached;
                    q.push(u);
                }
    }
    if (reached != K.size(d))
        return {false, "top cells are not strongly connected"};
    return {true, {}};
}

/// Signed breadth-first propagation over top cells. Requires a pseudomanifold.
inline bool is_orientable(const SimplicialComplex& K) {
    if (!is_pseudomanifold(K))
        throw Error("is_orientable: complex is not a pseudomanifold");
    const int d = K.dim();
    auto sign_in = [&](std::size_t top, std::size_t facet) {
        auto f = K.facets(d, top);
        for (std::size_t j = 0; j < f.size(); ++j)
            if (f[j] == facet)
                return (j % 2 == 0) ? 1 : -1;
        return 0;
    };
    std::vector<int> orient(K.size(d), 0);
    std::queue<std::size_t> q;
    orient[0] = 1;
    q.push(0);
    while (!q.empty()) {
        std::size_t t = q.front();
        q.pop();
        for (std::size_t r : K.facets(d, t))
            for (std::size_t u : K.cofaces(d - 1, r)) {
                if (u == t)
                    continue;
                // Induced orientations on r must cancel.
                const int want = -orient[t] * sign_in(t, r) * sign_in(u, r);
                if (orient[u] == 0) {
                    orient[u] = want;
                    q.push(u);
                } else if (orient[u] != want) {
                    return false;
                }
            }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Named complexes

namespace detail {

inline std::vector<std::vector<Vertex>> subsets_of_size(Vertex n, int k) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur;
    std::function<void(Vertex)> rec = [&](Vertex start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (Vertex v = start; v < n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

inline void require_min(std::string_view name, int n, int min) {
    if (n < min)
        throw Error(std::string(name) + "(n) requires n >= " + std::to_string(min));
}

} // namespace detail

/// Names accepted by builtin(); those taking a size parameter are marked.
struct BuiltinInfo {
    std::string_view name;
    bool parametric;
    int min_n;
    std::string_view summary;
};

inline constexpr BuiltinInfo kBuiltins[] = {
    {"cycle", true, 3, "cycle graph C_n on n vertices"},
    {"path", true, 2, "path graph P_n on n vertices"},
    {"star", true, 1, "star graph S_n: a hub joined to n leaves"},
    {"complete", true, 2, "complete graph K_n"},
    {"wheel", true, 4, "wheel graph W_n on n vertices: hub plus an (n-1)-cycle"},
    {"simplex", true, 1, "full n-simplex"},
    {"simplex_boundary", true, 2, "boundary of the n-simplex, an (n-1)-sphere"},
    {"moebius", false, 0, "5-vertex Moebius strip (5 triangles)"},
    {"projective_plane", false, 0, "6-vertex real projective plane (10 triangles)"},
    {"bipyramid", false, 0, "equatorial bipyramid: two tetrahedron boundaries glued along a triangle"},
};

inline SimplicialComplex builtin(std::string_view name, std::optional<int> param = std::nullopt) {
    const BuiltinInfo* info = nullptr;
    for (const auto& b : kBuiltins)
        if (b.name == name)
            info = &b;
    if (!info)
        throw Error("unknown builtin '" + std::string(name) + "'");
    int n = 0;
    if (info->parametric) {
        if (!param)
            throw Error("builtin '" + std::string(name) + "' needs a size parameter");
        n = *param;
        detail::require_min(name, n, info->min_n);
    }
    std::string label = std::string(name) + (info->parametric ? "(" + std::to_string(n) + ")" : "");
    std::vector<std::vector<Vertex>> faces;
    if (name == "cycle") {
        for (Vertex i = 0; i < n; ++i)
            faces.push_back({i, static_cast<Vertex>((i + 1) % n)});
    } else if (name == "path") {
        for (Vertex i = 0; i + 1 < n; ++i)
            faces.push_back({i, i + 1});
    } else if (name == "star") {
        for (Vertex i = 1; i <= n; ++i)
            faces.push_back({0, i});
    } else if (name == "complete") {
        faces = detail::subsets_of_size(n, 2);
    } else if (name == "wheel") {
        const Vertex rim = n - 1;
        for (Vertex i = 1; i <= rim; ++i) {
            faces.push_back({0, i});
            faces.push_back({i, static_cast<Vertex>(i % rim + 1)});
        }
    } else if (name == "simplex") {
        std::vector<Vertex> all(static_cast<std::size_t>(n) + 1);
        std::iota(all.begin(), all.end(), 0);
        faces.push_back(all);
    } else if (name == "simplex_boundary") {
        faces = detail::subsets_of_size(n + 1, n);
    } else if (name == "moebius") {
        for (Vertex i = 0; i < 5; ++i)
            faces.push_back({i, static_cast<Vertex>((i + 1) % 5), static_cast<Vertex>((i + 2) % 5)});
    } else if (name == "projective_plane") {
        faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                 {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
    } else if (name == "bipyramid") {
        faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    }
    return SimplicialComplex::from_maximal_faces(faces, label);
}

} // namespace morseforest
