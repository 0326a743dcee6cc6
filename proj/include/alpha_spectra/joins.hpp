#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace alpha_spectra {

/// Subdivision-vertex, subdivision-edge, R-vertex and R-edge join.
enum class JoinKind { sv, se, rv, re };

inline constexpr std::array<JoinKind, 4> kAllJoinKinds{JoinKind::sv, JoinKind::se, JoinKind::rv, JoinKind::re};

inline std::string to_string(JoinKind k) {
    switch (k) {
        case JoinKind::sv: return "sv";
        case JoinKind::se: return "se";
        case JoinKind::rv: return "rv";
        case JoinKind::re: return "re";
    }
    return "?";
}

inline JoinKind parse_join_kind(std::string_view s) {
    for (JoinKind k : kAllJoinKinds)
        if (s == to_string(k)) return k;
    throw PreconditionError("unknown join kind '" + std::string(s) + "' (expected sv, se, rv or re)");
}

/// Does the base graph keep the edges of G1 (R-graph) or not (subdivision)?
inline bool uses_r_graph(JoinKind k) { return k == JoinKind::rv || k == JoinKind::re; }
/// Are G2 vertices joined to V(G1) (vertex joins) or to I(G1) (edge joins)?
inline bool joins_original_vertices(JoinKind k) { return k == JoinKind::sv || k == JoinKind::rv; }

/// Vertex blocks V(G1) = [0, n1), I(G1) = [n1, n1 + m1), V(G2) = [n1 + m1, total).
struct JoinLabeling {
    std::size_t n1 = 0;
    std::size_t m1 = 0;
    std::size_t n2 = 0;

    std::size_t total() const { return n1 + m1 + n2; }
    std::size_t original(std::size_t i) const { return i; }
    std::size_t inserted(std::size_t e) const { return n1 + e; }
    std::size_t second(std::size_t k) const { return n1 + m1 + k; }
};

struct JoinResult {
    Graph graph;
    JoinLabeling labeling;
};

namespace detail {
inline std::vector<Edge> subdivision_edges(const Graph& g, bool keep_original) {
    const std::size_t n = g.vertex_count();
    std::vector<Edge> out;
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        out.emplace_back(edges[e].first, n + e);
        out.emplace_back(edges[e].second, n + e);
    }
    if (keep_original) out.insert(out.end(), edges.begin(), edges.end());
    return out;
}
}  // namespace detail

/// S(G): canonical edge e of g becomes vertex n + e.
inline Graph subdivision(const Graph& g) {
    if (g.edge_count() == 0) throw PreconditionError("subdivision needs at least one edge");
    return Graph::from_edge_list(g.vertex_count() + g.edge_count(), detail::subdivision_edges(g, false));
}

/// R(G): g plus a vertex n + e adjacent to both ends of canonical edge e.
inline Graph r_graph(const Graph& g) {
    if (g.edge_count() == 0) throw PreconditionError("R-graph needs at least one edge");
    return Graph::from_edge_list(g.vertex_count() + g.edge_count(), detail::subdivision_edges(g, true));
}

inline JoinResult join(JoinKind kind, const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() == 0 || g2.vertex_count() == 0) throw PreconditionError("join operands must be non-empty");
    if (g1.edge_count() == 0) throw PreconditionError("G1 must have at least one edge");
    JoinLabeling lab{g1.vertex_count(), g1.edge_count(), g2.vertex_count()};

    std::vector<Edge> edges = detail::subdivision_edges(g1, uses_r_graph(kind));
    for (auto [u, v] : g2.edges()) edges.emplace_back(lab.second(u), lab.second(v));
    const std::size_t left = joins_original_vertices(kind) ? lab.n1 : lab.m1;
    for (std::size_t i = 0; i < left; ++i) {
        const std::size_t a = joins_original_vertices(kind) ? lab.original(i) : lab.inserted(i);
        for (std::size_t k = 0; k < lab.n2; ++k) edges.emplace_back(a, lab.second(k));
    }
    return {Graph::from_edge_list(lab.total(), edges), lab};
}

inline JoinResult sv_join(const Graph& g1, const Graph& g2) { return join(JoinKind::sv, g1, g2); }
inline JoinResult se_join(const Graph& g1, const Graph& g2) { return join(JoinKind::se, g1, g2); }
inline JoinResult rv_join(const Graph& g1, const Graph& g2) { return join(JoinKind::rv, g1, g2); }
inline JoinResult re_join(const Graph& g1, const Graph& g2) { return join(JoinKind::re, g1, g2); }

}  // namespace alpha_spectra
