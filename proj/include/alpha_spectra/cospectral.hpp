#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "char_poly.hpp"
#include "coronal.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "jacobi.hpp"
#include "joins.hpp"
#include "rational.hpp"
#include "verify.hpp"

namespace alpha_spectra {

/// Cayley graph of Z4 x Z4 with connection set {±(0,1), ±(1,0), ±(1,1)}.
inline Graph shrikhande_graph() {
    auto id = [](int a, int b) { return static_cast<Vertex>(((a + 4) % 4) * 4 + (b + 4) % 4); };
    const int steps[3][2] = {{0, 1}, {1, 0}, {1, 1}};
    std::vector<Edge> e;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (const auto& s : steps) e.emplace_back(id(a, b), id(a + s[0], b + s[1]));
    return Graph::from_edge_list(16, e);
}

/// K_k x K_k: cells of a k x k board, adjacent when they share a row or column.
inline Graph rook_graph(std::size_t k) {
    std::vector<Edge> e;
    for (std::size_t u = 0; u < k * k; ++u)
        for (std::size_t v = u + 1; v < k * k; ++v)
            if (u / k == v / k || u % k == v % k) e.emplace_back(u, v);
    return Graph::from_edge_list(k * k, e);
}

struct SeedPair {
    std::string name;
    Graph first;
    Graph second;
};

inline std::vector<SeedPair> seed_pairs() {
    return {{"shrikhande-vs-rook4", shrikhande_graph(), rook_graph(4)}};
}

/// Sorted multiset of component counts of the induced vertex neighborhoods.
inline std::vector<std::size_t> neighborhood_profile(const Graph& g) {
    const auto adj = g.adjacency_lists();
    std::vector<std::size_t> profile;
    for (Vertex v = 0; v < g.vertex_count(); ++v) profile.push_back(component_count(induced_subgraph(g, adj[v])));
    std::sort(profile.begin(), profile.end());
    return profile;
}

namespace detail {

inline std::string describe_profile(const std::vector<std::size_t>& p) {
    std::map<std::size_t, std::size_t> counts;
    for (auto c : p) ++counts[c];
    std::string s;
    for (auto [c, k] : counts) {
        if (!s.empty()) s += ", ";
        s += std::to_string(k) + " vertices with " + std::to_string(c) + (c == 1 ? " component" : " components");
    }
    return s.empty() ? "empty" : s;
}

}  // namespace detail

/// A description of why a and b are not isomorphic, if the neighborhood
/// connectivity profile tells them apart.
inline std::optional<std::string> noniso_witness(const Graph& a, const Graph& b) {
    const auto pa = neighborhood_profile(a), pb = neighborhood_profile(b);
    if (pa == pb) return std::nullopt;
    return "neighborhood connectivity differs: first has " + detail::describe_profile(pa) + "; second has " +
           detail::describe_profile(pb);
}

struct CospectralCertificate {
    JoinKind kind = JoinKind::sv;
    std::vector<Alpha> alpha_grid;
    double max_spectral_gap = 0;
    double tolerance = kDefaultTolerance;
    std::string noniso_witness = "not established";
    bool certified = false;
    /// First failed check, empty when certified.
    std::string failure;

    std::string serialize() const {
        std::string s = "kind " + to_string(kind) + "\nalpha_grid";
        for (const auto& a : alpha_grid) s += " " + a.to_string();
        char gap[32];
        std::snprintf(gap, sizeof gap, "%.3g", max_spectral_gap);
        s += std::string("\nmax_spectral_gap ") + gap + "\nwitness " + noniso_witness + "\nstatus " +
             (certified ? "CERTIFIED" : "REJECTED: " + failure) + "\n";
        return s;
    }
};

struct CospectralPair {
    Graph first;
    Graph second;
    CospectralCertificate certificate;
};

namespace detail {

inline std::vector<std::size_t> sorted_degrees(const Graph& g) {
    auto d = g.degrees();
    std::sort(d.begin(), d.end());
    return d;
}

/// Max oracle gap between A_alpha(a) and A_alpha(b); infinite on a size mismatch.
inline double oracle_gap(const Graph& a, const Graph& b, const Alpha& alpha) {
    return compare(eigenvalues(alpha_matrix(a, alpha)), eigenvalues(alpha_matrix(b, alpha)), 0).max_gap;
}

inline void require_cospectral(const Graph& a, const Graph& b, const std::vector<Alpha>& grid, double tol,
                               const char* what) {
    for (const auto& alpha : grid) {
        const double gap = oracle_gap(a, b, alpha);
        if (!(gap <= tol))
            throw PreconditionError(std::string(what) + " are not A_alpha-cospectral at alpha=" + alpha.to_string() +
                                    " (gap " + std::to_string(gap) + ")");
    }
}

inline CospectralPair certify_joins(JoinKind kind, Graph first, Graph second, const std::vector<Alpha>& grid,
                                    double tol, std::string witness) {
    CospectralPair out{std::move(first), std::move(second), {}};
    auto& cert = out.certificate;
    cert.kind = kind;
    cert.alpha_grid = grid;
    cert.tolerance = tol;
    if (auto direct = noniso_witness(out.first, out.second))
        cert.noniso_witness = *direct;
    else
        cert.noniso_witness = std::move(witness);

    if (out.first.vertex_count() != out.second.vertex_count() || out.first.edge_count() != out.second.edge_count() ||
        sorted_degrees(out.first) != sorted_degrees(out.second)) {
        cert.failure = "joins differ in vertex count, edge count or degree multiset";
        return out;
    }
    for (const auto& alpha : grid) cert.max_spectral_gap = std::max(cert.max_spectral_gap, oracle_gap(out.first, out.second, alpha));
    cert.certified = cert.max_spectral_gap <= tol;
    if (!cert.certified) cert.failure = "join spectra differ beyond tolerance";
    return out;
}

inline void require_grid(const std::vector<Alpha>& grid) {
    if (grid.empty()) throw PreconditionError("certificate needs a non-empty alpha grid");
}

}  // namespace detail

/// Joins two cospectral regular graphs with the same h.
inline CospectralPair make_pair_g1(JoinKind kind, const Graph& g1a, const Graph& g1b, const Graph& h,
                                   const std::vector<Alpha>& grid, double tol = kDefaultTolerance) {
    detail::require_grid(grid);
    const auto ra = is_regular(g1a), rb = is_regular(g1b);
    if (!ra || !rb) throw PreconditionError("both G1 operands must be regular");
    if (g1a.vertex_count() != g1b.vertex_count() || g1a.edge_count() != g1b.edge_count())
        throw PreconditionError("operand counts differ: (n, m) = (" + std::to_string(g1a.vertex_count()) + ", " +
                                std::to_string(g1a.edge_count()) + ") vs (" + std::to_string(g1b.vertex_count()) +
                                ", " + std::to_string(g1b.edge_count()) + ")");
    if (*ra != *rb) throw PreconditionError("operand degrees differ: " + std::to_string(*ra) + " vs " + std::to_string(*rb));
    detail::require_cospectral(g1a, g1b, grid, tol, "G1 operands");

    std::string witness = "not established";
    if (auto w = noniso_witness(g1a, g1b)) witness = "inherited from the G1 operands (the joins restrict to them): " + *w;
    return detail::certify_joins(kind, join(kind, g1a, h).graph, join(kind, g1b, h).graph, grid, tol,
                                 std::move(witness));
}

inline CospectralPair make_pair_g1(JoinKind kind, const Graph& g1a, const Graph& g1b, const Graph& h, const Alpha& a,
                                   double tol = kDefaultTolerance) {
    return make_pair_g1(kind, g1a, g1b, h, std::vector<Alpha>{a}, tol);
}

/// Joins a regular g with two cospectral graphs of equal A_alpha-coronal.
inline CospectralPair make_pair_g2(JoinKind kind, const Graph& g, const Graph& h1, const Graph& h2,
                                   const std::vector<Alpha>& grid, double tol = kDefaultTolerance) {
    detail::require_grid(grid);
    if (!is_regular(g)) throw PreconditionError("G operand must be regular");
    detail::require_cospectral(h1, h2, grid, tol, "H operands");
    for (const auto& alpha : grid) {
        const RationalFn c1 = coronal_rational(alpha_matrix(h1, alpha));
        const RationalFn c2 = coronal_rational(alpha_matrix(h2, alpha));
        if (!(c1 == c2))
            throw PreconditionError("coronals differ at alpha=" + alpha.to_string() + ": (" + c1.to_string() +
                                    ") vs (" + c2.to_string() + ")");
    }
    std::string witness = "not established";
    if (auto w = noniso_witness(h1, h2)) witness = "inherited from the H operands (the joins restrict to them): " + *w;
    return detail::certify_joins(kind, join(kind, g, h1).graph, join(kind, g, h2).graph, grid, tol,
                                 std::move(witness));
}

inline CospectralPair make_pair_g2(JoinKind kind, const Graph& g, const Graph& h1, const Graph& h2, const Alpha& a,
                                   double tol = kDefaultTolerance) {
    return make_pair_g2(kind, g, h1, h2, std::vector<Alpha>{a}, tol);
}

}  // namespace alpha_spectra
