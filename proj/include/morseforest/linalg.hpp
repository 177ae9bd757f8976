#pragma once

// Exact linear algebra over the integers: boundary matrices, Laplacians,
// fraction-free determinants, shifted characteristic polynomials, Smith
// normal form and integral homology.

#include "morseforest/complex.hpp"
#include "morseforest/error.hpp"
#include "morseforest/integer.hpp"
#include "morseforest/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <vector>

namespace morseforest {

/// Signed incidence matrix ∂_d: rows are (d-1)-cells, columns d-cells.
/// Entry (f \ v_j, f) is (-1)^j for the ascending vertices v_0 < ... < v_d of f.
inline IntegerMatrix boundary_matrix(const SimplicialComplex& K, int d) {
    if (d < 1 || d > K.dim())
        throw Error("boundary_matrix: dimension " + std::to_string(d) + " out of range 1.." +
                    std::to_string(K.dim()));
    IntegerMatrix B(K.size(d - 1), K.size(d));
    for (std::size_t c = 0; c < K.size(d); ++c) {
        auto f = K.facets(d, c);
        for (std::size_t j = 0; j < f.size(); ++j)
            B(f[j], c) = (j % 2 == 0) ? 1 : -1;
    }
    B.set_labels(K.cells(d - 1), K.cells(d));
    return B;
}

/// Δ_d = ∂_d ∂_dᵀ, indexed by (d-1)-cells.
inline IntegerMatrix laplacian(const SimplicialComplex& K, int d) {
    const IntegerMatrix B = boundary_matrix(K, d);
    IntegerMatrix L = B * B.transpose();
    L.set_labels(K.cells(d - 1), K.cells(d - 1));
    return L;
}

/// Vertex adjacency matrix of a graph.
inline IntegerMatrix adjacency_matrix(const SimplicialComplex& G) {
    if (G.dim() != 1)
        throw Error("adjacency_matrix: complex must be 1-dimensional");
    IntegerMatrix A(G.size(0), G.size(0));
    for (std::size_t e = 0; e < G.size(1); ++e) {
        auto f = G.facets(1, e);
        A(f[0], f[1]) = 1;
        A(f[1], f[0]) = 1;
    }
    A.set_labels(G.cells(0), G.cells(0));
    return A;
}

namespace detail {

template <class T>
using Dense = std::vector<std::vector<T>>;

template <class T>
Dense<T> to_dense(const IntegerMatrix& M) {
    Dense<T> a(M.rows(), std::vector<T>(M.cols()));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) {
            if constexpr (std::is_same_v<T, Integer>)
                a[i][j] = M(i, j);
            else
                a[i][j] = to_int64(M(i, j));
        }
    return a;
}

inline bool fits_word(const IntegerMatrix& M) {
    constexpr std::int64_t lim = std::int64_t{1} << 31;
    for (const auto& e : M.entries())
        if (e >= lim || e <= -lim)
            return false;
    return true;
}

/// Runs f<int64> and falls back to f<Integer> on overflow.
template <class F>
auto with_word_fallback(const IntegerMatrix& M, F&& f) {
    if (fits_word(M)) {
        try {
            return f(to_dense<std::int64_t>(M));
        } catch (const WordOverflow&) {
        }
    }
    return f(to_dense<Integer>(M));
}

} // namespace detail

/// Bareiss fraction-free elimination on a square dense matrix (consumed).
template <class T>
T bareiss_determinant(detail::Dense<T> a) {
    const std::size_t n = a.size();
    if (n == 0)
        return T(1);
    bool negate = false;
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return T(0);
            std::swap(a[k], a[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T v = arith::sub(arith::mul(a[i][j], a[k][k]), arith::mul(a[i][k], a[k][j]));
                a[i][j] = v / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    T det = a[n - 1][n - 1];
    return negate ? arith::neg(det) : det;
}

/// Rank by fraction-free row reduction.
template <class T>
std::size_t bareiss_rank(detail::Dense<T> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    T prev(1);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = arith::sub(arith::mul(a[i][j], a[r][c]), arith::mul(a[i][c], a[r][j])) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

inline Integer determinant(const IntegerMatrix& M) {
    if (!M.is_square())
        throw Error("determinant of a non-square matrix");
    return detail::with_word_fallback(M, [](auto a) {
        return Integer(bareiss_determinant(std::move(a)));
    });
}

inline std::size_t rank(const IntegerMatrix& M) {
    return detail::with_word_fallback(M, [](auto a) { return bareiss_rank(std::move(a)); });
}

/// Interpolates an integer polynomial of degree <= n from its values at
/// 0..n using forward differences: p(x) = Σ (Δᵏp(0)/k!) x(x-1)...(x-k+1).
/// Each Δᵏp(0) must be divisible by k!; anything else means the samples do
/// not come from an integer polynomial and is reported as an error.
inline IntegerPolynomial interpolate_consecutive(std::vector<Integer> values) {
    const std::size_t n = values.size();
    std::vector<Integer> newton(n);
    for (std::size_t k = 0; k < n; ++k) {
        newton[k] = values[0];
        for (std::size_t i = 0; i + 1 < values.size(); ++i)
            values[i] = values[i + 1] - values[i];
        values.pop_back();
    }
    std::vector<Integer> coeffs(n);
    std::vector<Integer> falling{1}; // x(x-1)...(x-k+1), ascending
    Integer factorial = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0)
            factorial *= k;
        if (newton[k] % factorial != 0)
            throw Error("interpolation produced a non-integer coefficient");
        const Integer c = newton[k] / factorial;
        for (std::size_t i = 0; i < falling.size(); ++i)
            coeffs[i] += c * falling[i];
        // falling *= (x - k)
        std::vector<Integer> next(falling.size() + 1);
        for (std::size_t i = 0; i < falling.size(); ++i) {
            next[i + 1] += falling[i];
            next[i] -= falling[i] * static_cast<long long>(k);
        }
        falling = std::move(next);
    }
    return IntegerPolynomial(std::move(coeffs));
}

/// det(M + λI) via n+1 exact determinants at λ = 0..n and exact interpolation.
/// With jobs > 1 the evaluations run concurrently; assembly order is fixed.
inline IntegerPolynomial char_poly_shifted(const IntegerMatrix& M, unsigned jobs = 1) {
    if (!M.is_square())
        throw Error("char_poly_shifted of a non-square matrix");
    const std::size_t n = M.rows();
    std::vector<Integer> values(n + 1);
    if (jobs <= 1 || n < 8) {
        for (std::size_t k = 0; k <= n; ++k)
            values[k] = determinant(M.shifted(static_cast<long long>(k)));
    } else {
        std::size_t next = 0;
        while (next <= n) {
            std::vector<std::future<Integer>> batch;
            std::vector<std::size_t> slots;
            for (unsigned t = 0; t < jobs && next <= n; ++t, ++next) {
                slots.push_back(next);
                batch.push_back(std::async(std::launch::async, [&M, k = next] {
                    return determinant(M.shifted(static_cast<long long>(k)));
                }));
            }
            for (std::size_t i = 0; i < batch.size(); ++i)
                values[slots[i]] = batch[i].get();
        }
    }
    return interpolate_consecutive(std::move(values));
}

// ---------------------------------------------------------------------------
// Smith normal form

struct SmithForm {
    /// Nonzero invariant factors d_1 | d_2 | ... (positive).
    std::vector<Integer> factors;
    std::size_t rank = 0;
};

namespace detail {

/// Smallest-absolute-value pivot search with row/column moves; ties broken
/// by the lowest (row, col).
template <class T>
std::vector<T> smith_diagonal(Dense<T> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<T> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Pivot: smallest nonzero |a_ij| in the trailing block.
            std::optional<std::pair<std::size_t, std::size_t>> best;
            T best_abs(0);
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0) {
                        T v = arith::abs(a[i][j]);
                        if (!best || v < best_abs) {
                            best = {i, j};
                            best_abs = v;
                        }
                    }
            if (!best)
                return diag;
            std::swap(a[t], a[best->first]);
            for (std::size_t i = 0; i < rows; ++i)
                std::swap(a[i][t], a[i][best->second]);

            bool clean = true;
            const T p = a[t][t];
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                const T q = a[i][t] / p;
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] = arith::sub(a[i][j], arith::mul(q, a[t][j]));
                if (a[i][t] != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                const T q = a[t][j] / p;
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] = arith::sub(a[i][j], arith::mul(q, a[i][t]));
                if (a[t][j] != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // Divisibility: fold an offending row into the pivot row and retry.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % p != 0) {
                        for (std::size_t k = t; k < cols; ++k)
                            a[t][k] = arith::add(a[t][k], a[i][k]);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        diag.push_back(arith::abs(a[t][t]));
    }
    return diag;
}

} // namespace detail

inline SmithForm smith_normal_form(const IntegerMatrix& M) {
    SmithForm S;
    auto diag = detail::with_word_fallback(M, [](auto a) {
        auto d = detail::smith_diagonal(std::move(a));
        return std::vector<Integer>(d.begin(), d.end());
    });
    S.factors = std::move(diag);
    S.rank = S.factors.size();
    return S;
}

// ---------------------------------------------------------------------------
// Homology

struct HomologySummary {
    std::size_t betti = 0;
    /// Prime-power orders of the cyclic torsion summands, ascending.
    std::vector<Integer> torsion;
    /// Invariant factors greater than one.
    std::vector<Integer> invariant_factors;

    bool torsion_free() const noexcept { return torsion.empty(); }
    /// Order of the group when finite (betti == 0).
    std::optional<Integer> order() const {
        if (betti != 0)
            return std::nullopt;
        Integer o = 1;
        for (const auto& t : torsion)
            o *= t;
        return o;
    }
    std::string str() const {
        std::string s;
        if (betti)
            s = "Z" + (betti > 1 ? "^" + std::to_string(betti) : std::string{});
        for (const auto& t : torsion)
            s += (s.empty() ? "" : " + ") + std::string("Z/") + t.str();
        return s.empty() ? "0" : s;
    }
};

/// Splits n > 1 into prime powers (ascending by prime).
inline std::vector<Integer> prime_power_parts(Integer n) {
    std::vector<Integer> out;
    for (Integer p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        Integer q = 1;
        while (n % p == 0) {
            n /= p;
            q *= p;
        }
        out.push_back(q);
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

/// H_d(K; Z) = ker ∂_d / im ∂_{d+1}.
inline HomologySummary homology(const SimplicialComplex& K, int d) {
    if (d < 0 || d > K.dim())
        throw Error("homology: dimension out of range");
    const std::size_t rank_d = d == 0 ? 0 : rank(boundary_matrix(K, d));
    const std::size_t kernel = K.size(d) - rank_d;
    HomologySummary H;
    std::size_t rank_up = 0;
    if (d < K.dim()) {
        SmithForm S = smith_normal_form(boundary_matrix(K, d + 1));
        rank_up = S.rank;
        for (const auto& f : S.factors)
            if (f > 1) {
                H.invariant_factors.push_back(f);
                for (auto& q : prime_power_parts(f))
                    H.torsion.push_back(q);
            }
        std::sort(H.torsion.begin(), H.torsion.end());
    }
    H.betti = kernel - rank_up;
    return H;
}

inline std::vector<std::size_t> betti_numbers(const SimplicialComplex& K) {
    std::vector<std::size_t> b;
    for (int d = 0; d <= K.dim(); ++d)
        b.push_back(homology(K, d).betti);
    return b;
}

} // namespace morseforest
