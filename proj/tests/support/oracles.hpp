#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls the library routine it is used to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <alpha_spectra/alpha_spectra.hpp>

namespace oracle {

using alpha_spectra::Edge;
using alpha_spectra::Graph;
using alpha_spectra::Polynomial;
using alpha_spectra::Rational;
using alpha_spectra::RationalMatrix;

/// Leibniz expansion over all permutations; fine up to n = 8.
inline Rational leibniz_det(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total(0);
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational term(inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Lagrange interpolation through (xs[i], ys[i]).
inline Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    Polynomial acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Polynomial basis(1);
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis *= Polynomial::linear_factor(xs[j]);
            denom *= xs[i] - xs[j];
        }
        acc += basis * Rational(ys[i] / denom);
    }
    return acc;
}

/// det(xI - M) recovered from n + 1 determinant samples.
template <typename Det>
Polynomial sampled_char_poly(const RationalMatrix& m, Det det) {
    const std::size_t n = m.rows();
    std::vector<Rational> xs, ys;
    for (std::size_t k = 0; k <= n; ++k) {
        const Rational x(static_cast<long>(k) - static_cast<long>(n / 2));
        RationalMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j ? x : Rational(0)) - m(i, j);
        xs.push_back(x);
        ys.push_back(det(a));
    }
    return interpolate(xs, ys);
}

/// graph6 written straight from the format description.
inline std::string graph6_encode(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [u, v] : edges) adj[u][v] = adj[v][u] = true;
    std::string bits;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) bits.push_back(adj[i][j] ? '1' : '0');
    while (bits.size() % 6) bits.push_back('0');
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    for (std::size_t k = 0; k < bits.size(); k += 6) out.push_back(static_cast<char>(63 + std::stoi(bits.substr(k, 6), nullptr, 2)));
    return out;
}

/// Erdos-Renyi sample with a fixed engine.
inline Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return Graph::from_edge_list(n, e);
}

inline Rational random_rational(std::mt19937& rng, long lo, long hi, long max_den) {
    std::uniform_int_distribution<long> den(1, max_den);
    const long d = den(rng);
    std::uniform_int_distribution<long> num(lo * d, hi * d);
    Rational r(num(rng), d);
    r.canonicalize();
    return r;
}

/// Degree vector from an explicit edge list, without the Graph class.
inline std::vector<std::size_t> count_degrees(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<std::size_t> d(n, 0);
    for (auto [u, v] : edges) {
        ++d[u];
        ++d[v];
    }
    return d;
}

/// Descending copy.
inline std::vector<double> sorted_desc(std::vector<double> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

}  // namespace oracle
