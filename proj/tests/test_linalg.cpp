#include <morseforest/complex.hpp>
#include <morseforest/linalg.hpp>
#include <morseforest/random.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace morseforest;

namespace {

std::vector<SimplicialComplex> all_builtins() {
    return {builtin("cycle", 4),   builtin("path", 3),     builtin("star", 3),
            builtin("complete", 5), builtin("wheel", 5),   builtin("simplex", 2),
            builtin("simplex", 3), builtin("simplex_boundary", 3), builtin("simplex_boundary", 4),
            builtin("moebius"),    builtin("projective_plane"), builtin("bipyramid")};
}

IntegerMatrix from_ll(const std::vector<std::vector<long long>>& rows) { return IntegerMatrix::from_rows(rows); }

std::vector<Integer> ints(std::initializer_list<long long> xs) {
    std::vector<Integer> out;
    for (long long x : xs)
        out.emplace_back(x);
    return out;
}

} // namespace

TEST(Boundary, SingleEdge) {
    const auto K = SimplicialComplex::from_maximal_faces({{0, 1}});
    const auto B = boundary_matrix(K, 1);
    EXPECT_EQ(B, from_ll({{-1}, {1}}));
    ASSERT_TRUE(B.row_labels());
    EXPECT_EQ((*B.row_labels())[0], Cell{0});
    EXPECT_EQ((*B.col_labels())[0], (Cell{0, 1}));
}

TEST(Boundary, Triangle) {
    const auto B = boundary_matrix(builtin("simplex", 2), 2);
    // rows {0,1}, {0,2}, {1,2}
    EXPECT_EQ(B, from_ll({{1}, {-1}, {1}}));
}

TEST(Boundary, OutOfRange) {
    const auto K = builtin("simplex", 2);
    EXPECT_THROW(boundary_matrix(K, 0), Error);
    EXPECT_THROW(boundary_matrix(K, 3), Error);
    EXPECT_THROW(laplacian(K, 3), Error);
}

TEST(Boundary, MatchesOracle) {
    for (const auto& K : all_builtins())
        for (int d = 1; d <= K.dim(); ++d)
            EXPECT_EQ(boundary_matrix(K, d), from_ll(oracle::boundary(K, d))) << K.name() << " d=" << d;
}

TEST(Boundary, SquaresToZero) {
    std::mt19937_64 rng(11);
    auto complexes = all_builtins();
    for (int i = 0; i < 50; ++i)
        complexes.push_back(random_pure_complex(rng, 6, 2 + i % 2, 3 + static_cast<std::size_t>(i % 6)));
    for (const auto& K : complexes)
        for (int d = 2; d <= K.dim(); ++d)
            EXPECT_TRUE((boundary_matrix(K, d - 1) * boundary_matrix(K, d)).is_zero());
}

TEST(Laplacian, C4) {
    EXPECT_EQ(laplacian(builtin("cycle", 4), 1),
              from_ll({{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}}));
}

TEST(Laplacian, Edge) {
    EXPECT_EQ(laplacian(SimplicialComplex::from_maximal_faces({{0, 1}}), 1), from_ll({{1, -1}, {-1, 1}}));
}

TEST(Laplacian, BipyramidDiagonal) {
    const auto B = builtin("bipyramid");
    const auto L = laplacian(B, 2);
    const auto e = B.index_of(Cell{1, 2});
    EXPECT_EQ(L(e, e), 3);
}

TEST(Laplacian, EqualsCaseFormula) {
    for (const auto& K : all_builtins())
        for (int d = 1; d <= K.dim(); ++d) {
            const auto L = laplacian(K, d);
            EXPECT_TRUE(L.is_symmetric());
            EXPECT_EQ(L, from_ll(oracle::laplacian_cases(K, d))) << K.name() << " d=" << d;
        }
}

TEST(Determinant, Examples) {
    EXPECT_EQ(determinant(from_ll({{2, -1}, {-1, 2}})), 3);
    EXPECT_EQ(determinant(laplacian(builtin("cycle", 4), 1)), 0);
    EXPECT_EQ(determinant(IntegerMatrix(0, 0)), 1);
    EXPECT_THROW(determinant(IntegerMatrix(2, 3)), Error);
}

TEST(Determinant, MatchesCofactorExpansion) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> entry(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
        for (auto& r : rows)
            for (auto& x : r)
                x = entry(rng);
        EXPECT_EQ(determinant(from_ll(rows)), oracle::cofactor_det(oracle::to_square(rows)));
    }
}

TEST(Determinant, LargeEntriesUseBigIntegers) {
    // Entries near 2^40 overflow int64 products; the result must stay exact.
    const long long big = 1LL << 40;
    const auto M = from_ll({{big, 1, 3}, {2, big, 5}, {7, 11, big}});
    EXPECT_EQ(determinant(M), oracle::cofactor_det(oracle::to_square({{big, 1, 3}, {2, big, 5}, {7, 11, big}})));
    IntegerMatrix H(2, 2);
    H(0, 0) = Integer("123456789012345678901234567890");
    H(1, 1) = Integer("987654321098765432109876543210");
    H(0, 1) = 1;
    H(1, 0) = 1;
    EXPECT_EQ(determinant(H), H(0, 0) * H(1, 1) - 1);
}

TEST(CharPoly, KnownComplexes) {
    EXPECT_EQ(char_poly_shifted(laplacian(builtin("cycle", 4), 1)), (IntegerPolynomial{0, 16, 20, 8, 1}));
    EXPECT_EQ(char_poly_shifted(laplacian(builtin("moebius"), 2)),
              (IntegerPolynomial{0, 0, 0, 0, 0, 125, 275, 225, 85, 15, 1}));
    EXPECT_EQ(char_poly_shifted(laplacian(builtin("bipyramid"), 2)),
              (IntegerPolynomial{0, 0, 0, 0, 1125, 1425, 710, 174, 21, 1}));
    EXPECT_EQ(char_poly_shifted(laplacian(builtin("cycle", 4), 1)).str(), "λ^4 + 8λ^3 + 20λ^2 + 16λ");
}

TEST(CharPoly, FrozenOracleValues) {
    // Independent rational-interpolation values, computed once and frozen.
    EXPECT_EQ(char_poly_shifted(laplacian(builtin("projective_plane"), 2)).coeffs(),
              ints({0, 0, 0, 0, 0, 5184, 30240, 73440, 97320, 78040, 39906, 13305, 2880, 390, 30, 1}));
    const auto O = SimplicialComplex::from_maximal_faces(
        {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
    EXPECT_EQ(char_poly_shifted(laplacian(O, 2)).coeffs(),
              ints({0, 0, 0, 0, 0, 3072, 7424, 7488, 4080, 1296, 240, 24, 1}));
}

TEST(CharPoly, MatchesRationalInterpolationOracle) {
    for (const auto& K : all_builtins())
        for (int d = 1; d <= K.dim(); ++d) {
            const auto L = laplacian(K, d);
            std::vector<std::vector<long long>> rows(L.rows(), std::vector<long long>(L.cols()));
            for (std::size_t i = 0; i < L.rows(); ++i)
                for (std::size_t j = 0; j < L.cols(); ++j)
                    rows[i][j] = static_cast<long long>(L(i, j));
            EXPECT_EQ(char_poly_shifted(L).padded(L.rows() + 1), oracle::char_poly(rows)) << K.name();
        }
}

TEST(CharPoly, Properties) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const auto K = random_pure_complex(rng, 6, 2, 2 + static_cast<std::size_t>(trial % 8));
        const auto L = laplacian(K, 2);
        const auto p = char_poly_shifted(L);
        const std::size_t n = L.rows();
        EXPECT_EQ(p.degree(), static_cast<int>(n));
        EXPECT_EQ(p.coeff(n), 1);
        for (const auto& c : p.coeffs())
            EXPECT_GE(c, 0);
        for (std::size_t k = 0; k <= n; ++k)
            EXPECT_EQ(p(Integer(k)), determinant(L.shifted(Integer(k))));
        Integer sum = 0;
        for (const auto& c : p.coeffs())
            sum += c;
        EXPECT_EQ(sum, determinant(L.shifted(1)));
    }
}

TEST(CharPoly, ParallelMatchesSequential) {
    const auto L = laplacian(builtin("projective_plane"), 2);
    EXPECT_EQ(char_poly_shifted(L, 4), char_poly_shifted(L, 1));
}

TEST(CharPoly, PrincipalMinorsNonNegative) {
    const auto L = laplacian(builtin("bipyramid"), 2);
    const std::size_t n = L.rows();
    for (std::uint32_t mask = 1; mask < (1u << n); mask += 7) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                idx.push_back(i);
        EXPECT_GE(determinant(L.submatrix(idx, idx)), 0);
    }
}

TEST(Interpolation, RejectsNonPolynomialData) {
    // 0, 1, 3 is not the value table of an integer polynomial at 0, 1, 2.
    EXPECT_THROW(interpolate_consecutive(ints({0, 1, 3})), Error);
    EXPECT_EQ(interpolate_consecutive(ints({1, 2, 5})), (IntegerPolynomial{1, 0, 1}));
}

TEST(Smith, Examples) {
    const auto s = smith_normal_form(from_ll({{2}}));
    EXPECT_EQ(s.factors, ints({2}));
    EXPECT_EQ(s.rank, 1u);
    const auto p = smith_normal_form(boundary_matrix(builtin("path", 3), 1));
    EXPECT_EQ(p.factors, ints({1, 1}));
    EXPECT_EQ(p.rank, 2u);
    const auto z = smith_normal_form(IntegerMatrix(2, 3));
    EXPECT_TRUE(z.factors.empty());
    EXPECT_EQ(z.rank, 0u);
}

TEST(Smith, ProjectivePlaneOracle) {
    const auto P = builtin("projective_plane");
    const auto s = smith_normal_form(boundary_matrix(P, 2));
    const auto b = oracle::boundary(P, 2);
    // Rank 10 over Q and mod 3, 5, 7; rank 9 mod 2: exactly one factor is even.
    EXPECT_EQ(oracle::rank_mod(b, 2), 9u);
    EXPECT_EQ(oracle::rank_mod(b, 3), 10u);
    EXPECT_EQ(oracle::rank_mod(b, 5), 10u);
    EXPECT_EQ(oracle::rank_mod(b, 7), 10u);
    // The gcd of all 10x10 minors is the product of the invariant factors.
    Integer g = 0;
    std::vector<std::size_t> rows;
    std::function<void(std::size_t)> rec = [&](std::size_t at) {
        if (rows.size() == 10) {
            oracle::Square sq;
            for (std::size_t r : rows) {
                std::vector<Integer> row;
                for (long long x : b[r])
                    row.emplace_back(x);
                sq.push_back(std::move(row));
            }
            g = boost::multiprecision::gcd(g, oracle::rational_det(sq));
            return;
        }
        for (std::size_t r = at; r < b.size(); ++r) {
            rows.push_back(r);
            rec(r + 1);
            rows.pop_back();
        }
    };
    rec(0);
    EXPECT_EQ(g, 2);
    EXPECT_EQ(s.rank, 10u);
    std::vector<Integer> expected(9, 1);
    expected.push_back(2);
    EXPECT_EQ(s.factors, expected);
}

TEST(Smith, RankMatchesElimination) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long long> entry(-4, 4);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = dim(rng), c = dim(rng);
        std::vector<std::vector<long long>> rows(r, std::vector<long long>(c));
        for (auto& row : rows)
            for (auto& x : row)
                x = trial % 3 == 0 ? entry(rng) * entry(rng) % 3 : entry(rng);
        const auto M = from_ll(rows);
        const auto s = smith_normal_form(M);
        EXPECT_EQ(s.rank, rank(M));
        EXPECT_EQ(s.rank, s.factors.size());
        for (std::size_t i = 1; i < s.factors.size(); ++i)
            EXPECT_EQ(s.factors[i] % s.factors[i - 1], 0);
        if (r == c) {
            Integer prod = s.rank == r ? Integer(1) : Integer(0);
            for (const auto& f : s.factors)
                prod *= f;
            EXPECT_EQ(prod, boost::multiprecision::abs(determinant(M)));
        }
    }
}

TEST(Homology, Examples) {
    const auto c = homology(builtin("cycle", 4), 1);
    EXPECT_EQ(c.betti, 1u);
    EXPECT_TRUE(c.torsion.empty());
    const auto p = homology(builtin("projective_plane"), 1);
    EXPECT_EQ(p.betti, 0u);
    EXPECT_EQ(p.torsion, ints({2}));
    EXPECT_EQ(p.order(), Integer(2));
    const auto s = homology(builtin("simplex_boundary", 3), 2);
    EXPECT_EQ(s.betti, 1u);
    EXPECT_TRUE(s.torsion.empty());
    EXPECT_FALSE(s.order());
    EXPECT_EQ(homology(builtin("projective_plane"), 0).betti, 1u);
    EXPECT_EQ(homology(builtin("projective_plane"), 2).betti, 0u);
}

TEST(Homology, TorsionAsPrimePowers) {
    EXPECT_EQ(prime_power_parts(Integer(12)), ints({4, 3}));
    EXPECT_EQ(prime_power_parts(Integer(8)), ints({8}));
}

TEST(Homology, BettiAndEuler) {
    for (const auto& K : all_builtins()) {
        const auto b = betti_numbers(K);
        long long alt = 0;
        for (std::size_t p = 0; p < b.size(); ++p)
            alt += (p % 2 == 0 ? 1 : -1) * static_cast<long long>(b[p]);
        EXPECT_EQ(alt, euler_characteristic(K)) << K.name();
    }
}

TEST(Adjacency, Examples) {
    EXPECT_EQ(adjacency_matrix(builtin("path", 2)), from_ll({{0, 1}, {1, 0}}));
    EXPECT_EQ(adjacency_matrix(builtin("cycle", 3)), from_ll({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    const auto sub = SimplicialComplex::from_maximal_faces({{0, 3}, {1, 3}, {1, 4}, {2, 4}});
    EXPECT_EQ(adjacency_matrix(hasse_as_graph(builtin("path", 3))), adjacency_matrix(sub));
    EXPECT_THROW(adjacency_matrix(builtin("simplex", 2)), Error);
}

TEST(Kirchhoff, LinearCoefficientIsVerticesTimesTrees) {
    // K_n has n^{n-2} spanning trees.
    for (int n = 3; n <= 6; ++n) {
        const auto p = char_poly_shifted(laplacian(builtin("complete", n), 1));
        Integer trees = 1;
        for (int i = 0; i < n - 2; ++i)
            trees *= n;
        EXPECT_EQ(p.coeff(1), trees * n);
    }
}

TEST(Polynomial, Arithmetic) {
    const IntegerPolynomial a{1, 1};
    EXPECT_EQ(a * a, (IntegerPolynomial{1, 2, 1}));
    EXPECT_EQ(a - a, IntegerPolynomial{});
    EXPECT_EQ(IntegerPolynomial{}.degree(), -1);
    EXPECT_EQ((IntegerPolynomial{0, -2, 0, 1}).str(), "λ^3 - 2λ");
    EXPECT_EQ((IntegerPolynomial{-3}).str(), "-3");
}
