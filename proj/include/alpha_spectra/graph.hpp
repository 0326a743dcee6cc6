#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace alpha_spectra {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph. Edges are stored as (min, max) pairs in
/// lexicographic order; that order is the canonical edge index used by the
/// incidence matrix, the line graph and the inserted vertices of every join.
class Graph {
  public:
    Graph() = default;

    /// Rejects self-loops, out-of-range endpoints and repeated unordered pairs.
    static Graph from_edge_list(std::size_t n, const std::vector<Edge>& pairs) {
        std::vector<Edge> edges;
        edges.reserve(pairs.size());
        for (auto [u, v] : pairs) {
            const std::string pair_text = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
            if (u == v) throw PreconditionError("self-loop " + pair_text);
            if (u >= n || v >= n)
                throw PreconditionError("edge " + pair_text + " out of range for n=" + std::to_string(n));
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(edges.begin(), edges.end());
        auto dup = std::adjacent_find(edges.begin(), edges.end());
        if (dup != edges.end())
            throw PreconditionError("duplicate edge (" + std::to_string(dup->first) + "," +
                                    std::to_string(dup->second) + ")");
        return Graph(n, std::move(edges));
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const& { return edges_; }
    std::vector<Edge> edges() && { return std::move(edges_); }
    std::size_t degree(Vertex v) const { return degrees_.at(v); }
    const std::vector<std::size_t>& degrees() const { return degrees_; }

    bool has_edge(Vertex u, Vertex v) const {
        Edge e{std::min(u, v), std::max(u, v)};
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    std::vector<std::vector<Vertex>> adjacency_lists() const {
        std::vector<std::vector<Vertex>> adj(n_);
        for (auto [u, v] : edges_) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        return adj;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

  private:
    Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), degrees_(n, 0) {
        for (auto [u, v] : edges_) {
            ++degrees_[u];
            ++degrees_[v];
        }
    }

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> degrees_;
};

inline std::vector<std::size_t> degrees(const Graph& g) { return g.degrees(); }

/// Common degree r when every vertex has degree r.
inline std::optional<std::size_t> is_regular(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    const auto& d = g.degrees();
    if (std::all_of(d.begin(), d.end(), [&](std::size_t x) { return x == d.front(); })) return d.front();
    return std::nullopt;
}

/// n x m 0/1 matrix; column e is the canonical edge e.
inline RationalMatrix incidence_matrix(const Graph& g) {
    RationalMatrix r(g.vertex_count(), g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        r(g.edges()[e].first, e) = 1;
        r(g.edges()[e].second, e) = 1;
    }
    return r;
}

inline RationalSymMatrix adjacency_matrix(const Graph& g) {
    RationalMatrix a(g.vertex_count(), g.vertex_count());
    for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
    return RationalSymMatrix(std::move(a));
}

inline RationalSymMatrix degree_matrix(const Graph& g) {
    RationalMatrix d(g.vertex_count(), g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) d(v, v) = static_cast<long>(g.degree(v));
    return RationalSymMatrix(std::move(d));
}

/// Vertex e of the result is canonical edge e of g.
inline Graph line_graph(const Graph& g) {
    const auto& edges = g.edges();
    std::vector<Edge> out;
    for (std::size_t e = 0; e < edges.size(); ++e)
        for (std::size_t f = e + 1; f < edges.size(); ++f) {
            auto [a, b] = edges[e];
            auto [c, d] = edges[f];
            if (a == c || a == d || b == c || b == d) out.emplace_back(e, f);
        }
    return Graph::from_edge_list(edges.size(), out);
}

inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
    std::vector<std::size_t> index(g.vertex_count(), g.vertex_count());
    for (std::size_t i = 0; i < vertices.size(); ++i) index.at(vertices[i]) = i;
    std::vector<Edge> out;
    for (auto [u, v] : g.edges())
        if (index[u] < vertices.size() && index[v] < vertices.size()) out.emplace_back(index[u], index[v]);
    return Graph::from_edge_list(vertices.size(), out);
}

inline std::size_t component_count(const Graph& g) {
    const auto adj = g.adjacency_lists();
    std::vector<bool> seen(g.vertex_count(), false);
    std::size_t components = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        ++components;
        std::vector<Vertex> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
    }
    return components;
}

// ---- Named families used by tests, seeds and the CLI ------------------------

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw PreconditionError("cycle needs n >= 3");
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, e);
}

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edge_list(n, e);
}

/// Parts are [0, p) and [p, p + q).
inline Graph complete_bipartite_graph(std::size_t p, std::size_t q) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j) e.emplace_back(i, p + j);
    return Graph::from_edge_list(p + q, e);
}

inline Graph petersen_graph() {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph::from_edge_list(10, e);
}

// ---- Edge-list text format: "n m" then m lines "u v" ------------------------

inline Graph read_edge_list(std::istream& in) {
    std::size_t n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("edge list: expected header \"n m\"", 0);
    std::vector<Edge> pairs;
    pairs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        long long u = -1, v = -1;
        if (!(in >> u >> v)) throw ParseError("edge list: expected edge line " + std::to_string(i + 1), i + 1);
        if (u < 0 || v < 0) throw ParseError("edge list: negative vertex index", i + 1);
        pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::string extra;
    if (in >> extra) throw ParseError("edge list: trailing content after " + std::to_string(m) + " edges", m + 1);
    return Graph::from_edge_list(n, pairs);
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace alpha_spectra
