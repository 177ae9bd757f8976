#include <morseforest/complex.hpp>

#include <gtest/gtest.h>

using namespace morseforest;

namespace {

std::vector<SimplicialComplex> all_builtins() {
    return {builtin("cycle", 4),   builtin("path", 3),     builtin("star", 3),
            builtin("complete", 5), builtin("wheel", 5),   builtin("simplex", 2),
            builtin("simplex", 3), builtin("simplex_boundary", 3), builtin("simplex_boundary", 4),
            builtin("moebius"),    builtin("projective_plane"), builtin("bipyramid")};
}

} // namespace

TEST(Cell, RejectsUnsortedAndNegative) {
    EXPECT_THROW(Cell(std::vector<Vertex>{1, 0}), Error);
    EXPECT_THROW(Cell(std::vector<Vertex>{-1, 2}), Error);
    EXPECT_EQ(Cell::from_unsorted({2, 0, 1}), (Cell{0, 1, 2}));
    EXPECT_EQ((Cell{0, 2}).str(), "{0,2}");
}

TEST(FromMaximalFaces, ClosureOfTriangle) {
    const auto K = SimplicialComplex::from_maximal_faces({{0, 1, 2}});
    EXPECT_EQ(K.dim(), 2);
    EXPECT_EQ(K.cells(0), (std::vector<Cell>{{0}, {1}, {2}}));
    EXPECT_EQ(K.cells(1), (std::vector<Cell>{{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(K.cells(2), (std::vector<Cell>{{0, 1, 2}}));
}

TEST(FromMaximalFaces, CycleGraph) {
    const auto C4 = SimplicialComplex::from_maximal_faces({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    EXPECT_EQ(C4.dim(), 1);
    EXPECT_EQ(C4.size(0), 4u);
    EXPECT_EQ(C4.size(1), 4u);
    EXPECT_EQ(C4, builtin("cycle", 4));
}

TEST(FromMaximalFaces, Errors) {
    EXPECT_THROW(
        {
            try {
                SimplicialComplex::from_maximal_faces({});
            } catch (const Error& e) {
                EXPECT_STREQ(e.what(), "empty complex");
                throw;
            }
        },
        Error);
    EXPECT_THROW(
        {
            try {
                SimplicialComplex::from_maximal_faces({{0, 1, 1}});
            } catch (const Error& e) {
                EXPECT_STREQ(e.what(), "degenerate face");
                throw;
            }
        },
        Error);
}

TEST(FromMaximalFaces, DuplicatesAndNonMaximalIgnored) {
    const auto a = SimplicialComplex::from_maximal_faces({{0, 1, 2}, {0, 1}, {2, 1, 0}, {1}});
    EXPECT_EQ(a, SimplicialComplex::from_maximal_faces({{0, 1, 2}}));
}

TEST(FromMaximalFaces, Idempotent) {
    for (const auto& K : all_builtins()) {
        std::vector<std::vector<Vertex>> every;
        for (int d = 0; d <= K.dim(); ++d)
            for (const auto& c : K.cells(d))
                every.push_back(c.vertex_list());
        EXPECT_EQ(SimplicialComplex::from_maximal_faces(every), K) << K.name();
    }
}

TEST(Builtins, ProjectivePlaneCounts) {
    const auto P = builtin("projective_plane");
    EXPECT_EQ(P.size(0), 6u);
    EXPECT_EQ(P.size(1), 15u);
    EXPECT_EQ(P.size(2), 10u);
    for (std::size_t e = 0; e < P.size(1); ++e)
        EXPECT_EQ(P.cofaces(1, e).size(), 2u);
}

TEST(Builtins, BipyramidAndMoebius) {
    const auto B = builtin("bipyramid");
    EXPECT_EQ(B.size(0), 5u);
    EXPECT_EQ(B.size(1), 9u);
    EXPECT_EQ(B.size(2), 7u);
    const auto M = builtin("moebius");
    EXPECT_EQ(M.size(0), 5u);
    EXPECT_EQ(M.size(1), 10u);
    EXPECT_EQ(M.size(2), 5u);
}

TEST(Builtins, SimplexBoundary3) {
    const auto S = builtin("simplex_boundary", 3);
    EXPECT_EQ(S.size(0), 4u);
    EXPECT_EQ(S.size(1), 6u);
    EXPECT_EQ(S.size(2), 4u);
    EXPECT_EQ(euler_characteristic(S), 2);
}

TEST(Builtins, GraphFamilies) {
    EXPECT_EQ(builtin("star", 3).size(0), 4u);
    EXPECT_EQ(builtin("star", 3).size(1), 3u);
    EXPECT_EQ(builtin("wheel", 4), builtin("complete", 4));
    EXPECT_EQ(builtin("wheel", 6).size(1), 10u);
    EXPECT_EQ(builtin("path", 4).size(1), 3u);
    EXPECT_EQ(builtin("complete", 5).size(1), 10u);
    EXPECT_EQ(builtin("simplex", 3).size(3), 1u);
}

TEST(Builtins, Errors) {
    EXPECT_THROW(builtin("torus"), Error);
    EXPECT_THROW(builtin("cycle", 2), Error);
    EXPECT_THROW(builtin("cycle"), Error);
    EXPECT_THROW(builtin("simplex_boundary", 1), Error);
}

TEST(FacesCofaces, Examples) {
    const auto T = builtin("simplex", 2);
    auto faces = faces_of(T, Cell{0, 1, 2});
    std::sort(faces.begin(), faces.end());
    EXPECT_EQ(faces, (std::vector<Cell>{{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(cofaces_of(builtin("cycle", 4), Cell{0}), (std::vector<Cell>{{0, 1}, {0, 3}}));
    EXPECT_EQ(cofaces_of(builtin("bipyramid"), Cell{1, 2}),
              (std::vector<Cell>{{0, 1, 2}, {1, 2, 3}, {1, 2, 4}}));
    EXPECT_THROW(faces_of(T, Cell{0, 3}), Error);
    EXPECT_THROW(cofaces_of(T, Cell{5}), Error);
}

TEST(FacesCofaces, FacetCountIsDimPlusOne) {
    for (const auto& K : all_builtins())
        for (int p = 1; p <= K.dim(); ++p)
            for (const auto& c : K.cells(p))
                EXPECT_EQ(faces_of(K, c).size(), static_cast<std::size_t>(p + 1));
}

TEST(FacesCofaces, FacetOrderFollowsDeletedVertex) {
    const auto K = builtin("simplex", 3);
    for (std::size_t i = 0; i < K.size(2); ++i) {
        const auto f = K.facets(2, i);
        for (std::size_t j = 0; j < f.size(); ++j)
            EXPECT_EQ(K.cell(1, f[j]), K.cell(2, i).without(j));
    }
}

TEST(Euler, Examples) {
    EXPECT_EQ(euler_characteristic(builtin("simplex", 2)), 1);
    EXPECT_EQ(euler_characteristic(builtin("cycle", 4)), 0);
    EXPECT_EQ(euler_characteristic(builtin("bipyramid")), 3);
    EXPECT_EQ(euler_characteristic(builtin("projective_plane")), 1);
}

TEST(Hasse, UpEdgeCount) {
    for (const auto& K : all_builtins()) {
        std::size_t expected = 0;
        for (int d = 1; d <= K.dim(); ++d)
            expected += static_cast<std::size_t>(d + 1) * K.size(d);
        EXPECT_EQ(hasse_diagram(K).up_edges.size(), expected) << K.name();
    }
}

TEST(Hasse, GraphOfPathIsSubdivision) {
    const auto H = hasse_as_graph(builtin("path", 3));
    // vertices 0,1,2 then edges {0,1} -> 3, {1,2} -> 4
    const auto sub = SimplicialComplex::from_maximal_faces({{0, 3}, {1, 3}, {1, 4}, {2, 4}});
    EXPECT_EQ(H, sub);
}

TEST(Hasse, IsolatedCellsKept) {
    const auto G = SimplicialComplex::from_maximal_faces({{0, 1}, {2}});
    EXPECT_EQ(hasse_as_graph(G).size(0), 4u);
}

TEST(Pseudomanifold, Examples) {
    EXPECT_TRUE(is_pseudomanifold(builtin("simplex_boundary", 3)));
    const auto b = is_pseudomanifold(builtin("bipyramid"));
    EXPECT_FALSE(b);
    EXPECT_NE(b.reason.find("3 cofaces"), std::string::npos);
    const auto m = is_pseudomanifold(builtin("moebius"));
    EXPECT_FALSE(m);
    EXPECT_NE(m.reason.find("1 cofaces"), std::string::npos);
    EXPECT_TRUE(is_pseudomanifold(builtin("projective_plane")));
}

TEST(Pseudomanifold, SimplexBoundaries) {
    for (int n = 2; n <= 5; ++n)
        EXPECT_TRUE(is_pseudomanifold(builtin("simplex_boundary", n))) << n;
}

TEST(Pseudomanifold, NotStronglyConnected) {
    // Two tetrahedron boundaries sharing one vertex.
    const auto K = SimplicialComplex::from_maximal_faces(
        {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {3, 4, 5}, {3, 4, 6}, {3, 5, 6}, {4, 5, 6}});
    const auto r = is_pseudomanifold(K);
    EXPECT_FALSE(r);
    EXPECT_NE(r.reason.find("connected"), std::string::npos);
}

TEST(Orientable, Examples) {
    EXPECT_TRUE(is_orientable(builtin("simplex_boundary", 3)));
    EXPECT_TRUE(is_orientable(builtin("simplex_boundary", 4)));
    EXPECT_TRUE(is_orientable(builtin("simplex_boundary", 5)));
    EXPECT_TRUE(is_orientable(builtin("cycle", 5)));
    EXPECT_FALSE(is_orientable(builtin("projective_plane")));
    EXPECT_THROW(is_orientable(builtin("bipyramid")), Error);
}

TEST(Connectivity, Components) {
    EXPECT_TRUE(is_connected(builtin("wheel", 5)));
    const auto G = SimplicialComplex::from_maximal_faces({{0, 1}, {2, 3}});
    EXPECT_FALSE(is_connected(G));
    EXPECT_EQ(vertex_components(G), (std::vector<std::size_t>{0, 0, 1, 1}));
}
