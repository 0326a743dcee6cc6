#include <gtest/gtest.h>

#include "../support/oracles.hpp"

using namespace alpha_spectra;

namespace {

/// Component count of the neighborhood of v, computed with a plain BFS over
/// an adjacency matrix.
std::size_t neighborhood_components(const Graph& g, Vertex v) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [a, b] : g.edges()) adj[a][b] = adj[b][a] = true;
    std::vector<Vertex> nb;
    for (Vertex u = 0; u < n; ++u)
        if (adj[v][u]) nb.push_back(u);
    std::vector<int> comp(nb.size(), -1);
    int count = 0;
    for (std::size_t s = 0; s < nb.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> queue{s};
        comp[s] = count;
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (std::size_t t = 0; t < nb.size(); ++t)
                if (comp[t] < 0 && adj[nb[queue[h]]][nb[t]]) {
                    comp[t] = count;
                    queue.push_back(t);
                }
        ++count;
    }
    return static_cast<std::size_t>(count);
}

}  // namespace

TEST(Seeds, ShapeAndCospectrality) {
    const auto seeds = seed_pairs();
    ASSERT_FALSE(seeds.empty());
    for (const auto& s : seeds) {
        for (const Graph* g : {&s.first, &s.second}) {
            EXPECT_EQ(g->vertex_count(), 16u);
            EXPECT_EQ(g->edge_count(), 48u);
            EXPECT_EQ(oracle::count_degrees(16, g->edges()), std::vector<std::size_t>(16, 6));
        }
        for (const Alpha& a : {Alpha(0, 1), Alpha(1, 2)}) {
            const auto x = eigenvalues(alpha_matrix(s.first, a)).expanded();
            const auto y = eigenvalues(alpha_matrix(s.second, a)).expanded();
            ASSERT_EQ(x.size(), y.size());
            for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(x[i], y[i], 1e-9);
        }
    }
}

TEST(Seeds, NeighborhoodWitness) {
    const Graph shr = shrikhande_graph(), rook = rook_graph(4);
    for (Vertex v = 0; v < 16; ++v) {
        EXPECT_EQ(neighborhood_components(shr, v), 1u);
        EXPECT_EQ(neighborhood_components(rook, v), 2u);
    }
    EXPECT_EQ(is_regular(induced_subgraph(shr, shr.adjacency_lists()[0])), 2u);   // a 6-cycle
    EXPECT_EQ(is_regular(induced_subgraph(rook, rook.adjacency_lists()[0])), 2u);  // two triangles
    const auto w = noniso_witness(shr, rook);
    ASSERT_TRUE(w.has_value());
    EXPECT_NE(w->find("16 vertices with 2 components"), std::string::npos);
    EXPECT_FALSE(noniso_witness(shr, shr).has_value());
}

TEST(MakePairG1, ShrikhandeRookWithP3) {
    const auto pair = make_pair_g1(JoinKind::sv, shrikhande_graph(), rook_graph(4), path_graph(3), Alpha(1, 2));
    EXPECT_TRUE(pair.certificate.certified);
    EXPECT_LT(pair.certificate.max_spectral_gap, 1e-8);
    EXPECT_EQ(pair.first.vertex_count(), 67u);
    EXPECT_NE(pair.certificate.noniso_witness, "not established");
}

TEST(MakePairG1, ReWithK1AtZero) {
    const auto pair = make_pair_g1(JoinKind::re, shrikhande_graph(), rook_graph(4), Graph::from_edge_list(1, {}),
                                   Alpha(0, 1));
    EXPECT_TRUE(pair.certificate.certified);
}

TEST(MakePairG1, FullGridForRegularSeeds) {
    const auto pair =
        make_pair_g1(JoinKind::rv, shrikhande_graph(), rook_graph(4), path_graph(2), alpha_grid(10));
    EXPECT_TRUE(pair.certificate.certified);
    EXPECT_EQ(pair.certificate.alpha_grid.size(), 11u);
    EXPECT_EQ(pair.first.edge_count(), pair.second.edge_count());
}

TEST(MakePairG1, Rejections) {
    EXPECT_THROW(make_pair_g1(JoinKind::sv, cycle_graph(4), cycle_graph(3), path_graph(2), Alpha(1, 2)),
                 PreconditionError);
    EXPECT_THROW(make_pair_g1(JoinKind::sv, path_graph(3), path_graph(3), path_graph(2), Alpha(1, 2)),
                 PreconditionError);
    // 2C3 vs C6: same counts and degree, different spectra.
    const Graph two_c3 = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    EXPECT_THROW(make_pair_g1(JoinKind::sv, two_c3, cycle_graph(6), path_graph(2), Alpha(1, 2)), PreconditionError);
    EXPECT_THROW(make_pair_g1(JoinKind::sv, cycle_graph(4), cycle_graph(4), path_graph(2), std::vector<Alpha>{}),
                 PreconditionError);
}

TEST(MakePairG2, RegularCospectralHs) {
    const auto pair = make_pair_g2(JoinKind::sv, cycle_graph(3), shrikhande_graph(), rook_graph(4), Alpha(1, 3));
    EXPECT_TRUE(pair.certificate.certified);
    EXPECT_NE(pair.certificate.noniso_witness, "not established");
}

TEST(MakePairG2, IsomorphicInputs) {
    const auto pair =
        make_pair_g2(JoinKind::se, complete_graph(4), complete_bipartite_graph(2, 2), cycle_graph(4), Alpha(0, 1));
    EXPECT_TRUE(pair.certificate.certified);
    EXPECT_EQ(pair.certificate.noniso_witness, "not established");
}

TEST(MakePairG2, Rejections) {
    EXPECT_THROW(make_pair_g2(JoinKind::rv, cycle_graph(4), path_graph(3), complete_graph(3), Alpha(1, 2)),
                 PreconditionError);
    EXPECT_THROW(make_pair_g2(JoinKind::rv, path_graph(3), cycle_graph(3), cycle_graph(3), Alpha(1, 2)),
                 PreconditionError);
    // K_{1,4} and C4 + K1 are A-cospectral but their coronals differ.
    const Graph star = complete_bipartite_graph(1, 4);
    const Graph c4k1 = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    try {
        make_pair_g2(JoinKind::sv, cycle_graph(3), star, c4k1, Alpha(0, 1));
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("coronals differ"), std::string::npos);
    }
}

TEST(Certificate, Serialization) {
    const auto pair = make_pair_g1(JoinKind::se, shrikhande_graph(), rook_graph(4), path_graph(3), Alpha(9, 10));
    const std::string s = pair.certificate.serialize();
    EXPECT_NE(s.find("kind se\n"), std::string::npos);
    EXPECT_NE(s.find("alpha_grid 9/10\n"), std::string::npos);
    EXPECT_NE(s.find("status CERTIFIED"), std::string::npos);
}
