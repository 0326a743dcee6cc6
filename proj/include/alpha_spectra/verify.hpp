#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "char_poly.hpp"
#include "closed_form.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "jacobi.hpp"
#include "joins.hpp"
#include "rational.hpp"
#include "roots.hpp"
#include "spectrum.hpp"

namespace alpha_spectra {

inline constexpr double kDefaultTolerance = 1e-8;

inline Spectrum oracle_spectrum(JoinKind kind, const Graph& g1, const Graph& g2, const Alpha& a, double tol = 1e-12) {
    return eigenvalues(alpha_matrix(join(kind, g1, g2).graph, a), tol);
}

struct CompareReport {
    /// false when the two multisets have different sizes; max_gap is then infinite.
    bool structural_ok = true;
    std::size_t closed_total = 0;
    std::size_t oracle_total = 0;
    double max_gap = 0;
    bool pass = false;
    /// (closed, oracle) values paired in descending order.
    std::vector<std::pair<double, double>> pairing;
};

inline CompareReport compare(const Spectrum& closed, const Spectrum& oracle, double tol) {
    CompareReport r;
    const auto a = closed.expanded();
    const auto b = oracle.expanded();
    r.closed_total = a.size();
    r.oracle_total = b.size();
    if (a.size() != b.size()) {
        r.structural_ok = false;
        r.max_gap = std::numeric_limits<double>::infinity();
        return r;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.pairing.emplace_back(a[i], b[i]);
        r.max_gap = std::max(r.max_gap, std::abs(a[i] - b[i]));
    }
    r.pass = r.max_gap <= tol;
    return r;
}

struct SweepReport {
    Alpha alpha{0, 1};
    JoinKind kind = JoinKind::sv;
    std::size_t order = 0;
    CompareReport comparison;

    bool pass() const { return comparison.pass; }

    std::string line() const {
        char gap[32];
        if (comparison.structural_ok)
            std::snprintf(gap, sizeof gap, "%.3g", comparison.max_gap);
        else
            std::snprintf(gap, sizeof gap, "inf");
        return "alpha=" + alpha.to_string() + " kind=" + to_string(kind) + " n=" + std::to_string(order) +
               " max_gap=" + gap + (comparison.pass ? " PASS" : " FAIL");
    }
};

/// Closed-form roots against the oracle for one alpha.
inline SweepReport verify_one(JoinKind kind, const Graph& g1, const Graph& g2, const Alpha& a, double tol) {
    SweepReport rep;
    rep.alpha = a;
    rep.kind = kind;
    rep.order = g1.vertex_count() + g1.edge_count() + g2.vertex_count();
    const Spectrum closed = real_roots(theorem_charpoly(kind, g1, g2, a));
    rep.comparison = compare(closed, oracle_spectrum(kind, g1, g2, a), tol);
    return rep;
}

/// One report per alpha, in input order. Entries run concurrently.
inline std::vector<SweepReport> sweep(JoinKind kind, const Graph& g1, const Graph& g2, const std::vector<Alpha>& alphas,
                                      double tol) {
    if (alphas.empty()) throw PreconditionError("sweep needs a non-empty alpha list");
    std::vector<std::future<SweepReport>> jobs;
    jobs.reserve(alphas.size());
    for (const Alpha& a : alphas)
        jobs.push_back(std::async(std::launch::async, [&, a] { return verify_one(kind, g1, g2, a, tol); }));
    std::vector<SweepReport> out;
    out.reserve(jobs.size());
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

}  // namespace alpha_spectra
