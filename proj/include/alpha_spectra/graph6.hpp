#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace alpha_spectra {

namespace detail {
constexpr int kGraph6Offset = 63;

inline int graph6_value(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kGraph6Offset || c > 126) throw ParseError("graph6: byte outside printable range 63..126", pos);
    return c - kGraph6Offset;
}
}  // namespace detail

/// Standard graph6: N(n) header then the upper triangle x(0,1), x(0,2), x(1,2),
/// x(0,3), ... packed six bits per byte, most significant first.
inline Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw ParseError("graph6: empty input", 0);

    std::size_t pos = 0;
    std::size_t n = 0;
    const int first = detail::graph6_value(text, 0);
    if (first < 63) {
        n = static_cast<std::size_t>(first);
        pos = 1;
    } else {
        const bool wide = detail::graph6_value(text, 1) == 63;
        const std::size_t start = wide ? 2 : 1;
        const std::size_t groups = wide ? 6 : 3;
        for (std::size_t k = 0; k < groups; ++k)
            n = (n << 6) | static_cast<std::size_t>(detail::graph6_value(text, start + k));
        pos = start + groups;
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() != pos + bytes)
        throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes for n=" + std::to_string(n) +
                             ", found " + std::to_string(text.size() - std::min(text.size(), pos)),
                         std::min(text.size(), pos + bytes));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const int byte = detail::graph6_value(text, pos + k / 6);
            if (byte & (1 << (5 - k % 6))) edges.emplace_back(i, j);
        }
    for (; k < bytes * 6; ++k)
        if (detail::graph6_value(text, pos + k / 6) & (1 << (5 - k % 6)))
            throw ParseError("graph6: nonzero padding bits", pos + k / 6);
    return Graph::from_edge_list(n, edges);
}

inline std::string encode_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::string out;
    auto put = [&](std::size_t v) { out.push_back(static_cast<char>(v + detail::kGraph6Offset)); };
    if (n < 63) {
        put(n);
    } else if (n < 258048) {
        put(63);
        for (int s = 12; s >= 0; s -= 6) put((n >> s) & 63);
    } else {
        put(63);
        put(63);
        for (int s = 30; s >= 0; s -= 6) put((n >> s) & 63);
    }
    int acc = 0, filled = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                put(static_cast<std::size_t>(acc));
                acc = filled = 0;
            }
        }
    if (filled > 0) put(static_cast<std::size_t>(acc << (6 - filled)));
    return out;
}

}  // namespace alpha_spectra
