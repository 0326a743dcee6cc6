#include <cmath>

#include <gtest/gtest.h>

#include "../support/oracles.hpp"

using namespace alpha_spectra;

namespace {
const Graph k1 = Graph::from_edge_list(1, {});
}

TEST(OracleSpectrum, Examples) {
    const auto c4 = oracle_spectrum(JoinKind::sv, path_graph(2), k1, Alpha(0, 1)).expanded();
    ASSERT_EQ(c4.size(), 4u);
    const std::vector<double> expect{2, 0, 0, -2};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(c4[i], expect[i], 1e-12);

    EXPECT_EQ(oracle_spectrum(JoinKind::rv, path_graph(2), k1, Alpha(1, 1)).expanded(),
              (std::vector<double>{3, 3, 2, 2}));

    const auto star = oracle_spectrum(JoinKind::se, path_graph(2), k1, Alpha(0, 1)).expanded();
    ASSERT_EQ(star.size(), 4u);
    EXPECT_NEAR(star[0], std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(star[1], 0, 1e-12);
    EXPECT_NEAR(star[3], -std::sqrt(3.0), 1e-12);
}

TEST(Compare, ToleranceSemantics) {
    const Spectrum one = Spectrum::from_pairs({{1.0, 1}});
    const auto same = compare(one, one, 1e-8);
    EXPECT_TRUE(same.pass);
    EXPECT_EQ(same.max_gap, 0);

    const auto close = compare(one, Spectrum::from_pairs({{1.0 + 5e-9, 1}}), 1e-8);
    EXPECT_TRUE(close.pass);
    EXPECT_NEAR(close.max_gap, 5e-9, 1e-15);

    const auto off = compare(Spectrum::from_pairs({{1.0, 2}}), Spectrum::from_pairs({{1.0, 1}, {0.0, 1}}), 1e-8);
    EXPECT_FALSE(off.pass);
    EXPECT_EQ(off.max_gap, 1);

    const auto sizes = compare(one, Spectrum::from_pairs({{1.0, 2}}), 1e-8);
    EXPECT_FALSE(sizes.structural_ok);
    EXPECT_FALSE(sizes.pass);
}

TEST(Sweep, C4P3AllPass) {
    const auto reports = sweep(JoinKind::sv, cycle_graph(4), path_graph(3), alpha_grid(4), 1e-8);
    ASSERT_EQ(reports.size(), 5u);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        EXPECT_TRUE(reports[i].pass()) << reports[i].line();
        EXPECT_EQ(reports[i].alpha, alpha_grid(4)[i]);
    }
    EXPECT_EQ(reports[2].line().substr(0, 24), "alpha=1/2 kind=sv n=11 m");
}

TEST(Sweep, ReC3K23) {
    const auto r = sweep(JoinKind::re, cycle_graph(3), complete_bipartite_graph(2, 3), {Alpha(1, 3)}, 1e-8);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_TRUE(r[0].pass());
    EXPECT_TRUE(r[0].line().ends_with(" PASS"));
}

TEST(Sweep, EmptyAlphaList) {
    EXPECT_THROW(sweep(JoinKind::sv, cycle_graph(4), path_graph(3), {}, 1e-8), PreconditionError);
}

TEST(Sweep, TraceIdentity) {
    for (JoinKind kind : kAllJoinKinds)
        for (const Alpha& a : alpha_grid(5)) {
            const auto j = join(kind, complete_graph(4), complete_bipartite_graph(2, 3));
            const double s = oracle_spectrum(kind, complete_graph(4), complete_bipartite_graph(2, 3), a).sum();
            EXPECT_NEAR(s, a.to_double() * 2.0 * static_cast<double>(j.graph.edge_count()), 1e-8);
        }
}
