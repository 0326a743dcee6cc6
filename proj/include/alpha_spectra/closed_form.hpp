#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "char_poly.hpp"
#include "coronal.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "joins.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "roots.hpp"
#include "spectrum.hpp"

namespace alpha_spectra {

/// Quadratic factor attached to an eigenvalue lambda of A_alpha(G1):
/// base(x) - lambda * slope(x).
struct EigenFactorFamily {
    Polynomial base;
    Polynomial slope;

    Polynomial at(const Rational& lambda) const { return base - slope * lambda; }
};

/// Building blocks of the closed-form characteristic polynomial of a join:
///
///   (x - prefactor_root)^(m1 - n1) * psi_{A_alpha(G2)}(x - shift)
///     * prod_{i>=2} family(lambda_i(A_alpha(G1)))
///     * (family(r1) - coronal_weight(x) * Gamma_{A_alpha(G2)}(x - shift))
struct JoinTerms {
    Rational prefactor_root;
    long prefactor_exponent = 0;
    Rational shift;
    EigenFactorFamily family;
    Polynomial coronal_weight;
};

namespace detail {

inline Polynomial px() { return Polynomial::x(); }
inline Polynomial pc(const Rational& c) { return Polynomial(c); }
inline Rational q(std::size_t v) { return Rational(static_cast<long>(v)); }

}  // namespace detail

/// The quadratic G_i(x) of each join kind, with n2 the order of G2.
inline EigenFactorFamily eigen_factor_family(JoinKind kind, std::size_t r1_, std::size_t n2_, const Alpha& alpha) {
    using detail::pc;
    using detail::px;
    const Rational& a = alpha.value();
    const Rational r1 = detail::q(r1_), n2 = detail::q(n2_);
    const Rational b = 1 - a;
    const Polynomial x2 = px() * px();
    switch (kind) {
        case JoinKind::sv:
            return {x2 - px() * Rational(a * (2 + r1 + n2)) + pc(a * (a * r1 + r1 + 2 * a * n2) - b * b * r1), pc(b)};
        case JoinKind::se:
            return {x2 - px() * Rational(a * (2 + r1 + n2)) + pc(r1 * (a * a * n2 + 3 * a - 1)), pc(b)};
        case JoinKind::rv:
            return {x2 - px() * Rational(2 * a + a * r1 + a * n2) + pc(2 * a * a * n2 + 3 * a * r1 - r1),
                    px() + pc(1 - 3 * a)};
        case JoinKind::re:
            return {x2 - px() * Rational(2 * a + a * r1 + a * n2) + pc(a * a * r1 * n2 + 3 * a * r1 - r1),
                    px() + pc(1 - 3 * a - a * n2)};
    }
    throw PreconditionError("unknown join kind");
}

inline JoinTerms join_terms(JoinKind kind, std::size_t n1_, std::size_t m1_, std::size_t r1_, std::size_t n2_,
                            const Alpha& alpha) {
    using detail::px;
    const Rational& a = alpha.value();
    const Rational n1 = detail::q(n1_), m1 = detail::q(m1_), r1 = detail::q(r1_), n2 = detail::q(n2_);
    const Rational b2 = (1 - a) * (1 - a);
    JoinTerms t;
    t.family = eigen_factor_family(kind, r1_, n2_, alpha);
    t.prefactor_exponent = static_cast<long>(m1_) - static_cast<long>(n1_);
    switch (kind) {
        case JoinKind::sv:
        case JoinKind::rv:
            t.prefactor_root = 2 * a;
            t.shift = a * n1;
            t.coronal_weight = Polynomial::linear_factor(2 * a) * Rational(n1 * b2);
            break;
        case JoinKind::se:
            t.prefactor_root = 2 * a + a * n2;
            t.shift = a * m1;
            t.coronal_weight = Polynomial::linear_factor(a * r1) * Rational(m1 * b2);
            break;
        case JoinKind::re:
            t.prefactor_root = 2 * a + a * n2;
            t.shift = a * m1;
            t.coronal_weight = Polynomial::linear_factor(a * r1 + r1) * Rational(m1 * b2);
            break;
    }
    return t;
}

/// sum_k psi_k P^k L^(d-k) = prod_i (P - lambda_i L), lambda_i the roots of psi.
inline Polynomial homogenized_product(const Polynomial& psi, const EigenFactorFamily& f) {
    const long d = psi.degree();
    if (d < 0) return {};
    std::vector<Polynomial> ppow{Polynomial(1)}, lpow{Polynomial(1)};
    for (long k = 1; k <= d; ++k) {
        ppow.push_back(ppow.back() * f.base);
        lpow.push_back(lpow.back() * f.slope);
    }
    Polynomial acc;
    for (long k = 0; k <= d; ++k) {
        const Rational& c = psi.coefficients()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        acc += ppow[static_cast<std::size_t>(k)] * lpow[static_cast<std::size_t>(d - k)] * c;
    }
    return acc;
}

namespace detail {

inline std::size_t require_regular(const Graph& g, const char* name) {
    auto r = is_regular(g);
    if (!r) throw PreconditionError(std::string(name) + " is not regular");
    return *r;
}

inline void require_join_operands(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() == 0 || g2.vertex_count() == 0) throw PreconditionError("join operands must be non-empty");
    if (g1.edge_count() == 0) throw PreconditionError("G1 must have at least one edge");
}

inline Polynomial apply_prefactor(const Polynomial& body, const Rational& root, long exponent) {
    const Polynomial factor = Polynomial::linear_factor(root);
    if (exponent >= 0) return body * factor.pow(static_cast<std::size_t>(exponent));
    return exact_div(body, factor.pow(static_cast<std::size_t>(-exponent)));
}

}  // namespace detail

/// Characteristic polynomial of A_alpha(G1 * G2) from the closed form, for
/// r1-regular G1 and arbitrary G2. Everything is exact; a negative prefactor
/// exponent (m1 < n1) is cancelled by exact division.
inline Polynomial theorem_charpoly(JoinKind kind, const Graph& g1, const Graph& g2, const Alpha& alpha) {
    detail::require_join_operands(g1, g2);
    const std::size_t r1 = detail::require_regular(g1, "G1");
    const std::size_t n1 = g1.vertex_count(), m1 = g1.edge_count(), n2 = g2.vertex_count();
    const JoinTerms t = join_terms(kind, n1, m1, r1, n2, alpha);

    // prod over all eigenvalues of A_alpha(G1), then drop the lambda_1 = r1 slot.
    const Polynomial psi1 = char_poly(alpha_matrix(g1, alpha));
    const Polynomial perron_factor = t.family.at(detail::q(r1));
    const Polynomial rest = exact_div(homogenized_product(psi1, t.family), perron_factor);

    // psi_{A_alpha(G2)}(x - s) * (perron_factor - K(x) Gamma(x - s)), cleared of denominators.
    const RationalSymMatrix a2 = alpha_matrix(g2, alpha);
    const Polynomial psi2 = char_poly(a2).shifted(t.shift);
    const RationalFn gamma = coronal_rational(a2).shifted(t.shift);
    const Polynomial cleared =
        perron_factor * psi2 - t.coronal_weight * gamma.numerator() * exact_div(psi2, gamma.denominator());

    Polynomial result = detail::apply_prefactor(rest * cleared, t.prefactor_root, t.prefactor_exponent);
    if (result.degree() != static_cast<long>(n1 + m1 + n2) || !result.is_monic())
        throw InconsistencyError("closed-form polynomial has degree " + std::to_string(result.degree()) +
                                 ", expected monic of degree " + std::to_string(n1 + m1 + n2));
    return result;
}

/// psi_{A(L(G))}(x) = (x + 2)^(m - n) psi_{A(G)}(x - r + 2) for r-regular G with m >= n.
inline Polynomial linegraph_charpoly(const Graph& g) {
    const std::size_t r = detail::require_regular(g, "graph");
    if (g.edge_count() < g.vertex_count())
        throw PreconditionError("line-graph identity needs m >= n (got m=" + std::to_string(g.edge_count()) +
                                ", n=" + std::to_string(g.vertex_count()) + ")");
    const Polynomial psi = char_poly(adjacency_matrix(g));
    const Rational shift = Rational(static_cast<long>(r)) - 2;
    return Polynomial::linear_factor(-2).pow(g.edge_count() - g.vertex_count()) * psi.shifted(shift);
}

// ---- Explicit spectra for regular and complete bipartite G2 ------------------

struct ExplicitPart {
    double value;
    std::size_t multiplicity;
    std::string provenance;
};

struct FactorPart {
    Polynomial factor;
    std::size_t power;
    std::string provenance;
};

/// Spectrum of a join in corollary form. explicit_parts lists eigenvalues
/// given by formula; explicit_factors carries their exact minimal factors;
/// polynomial_parts are the G_i and F factors whose roots complete the spectrum.
struct ClosedSpectrumReport {
    JoinKind kind = JoinKind::sv;
    std::vector<ExplicitPart> explicit_parts;
    std::vector<FactorPart> explicit_factors;
    std::vector<FactorPart> polynomial_parts;
    Polynomial assembled_charpoly;

    std::size_t explicit_multiplicity() const {
        std::size_t t = 0;
        for (const auto& e : explicit_parts) t += e.multiplicity;
        return t;
    }

    std::size_t total_multiplicity() const {
        std::size_t t = explicit_multiplicity();
        for (const auto& p : polynomial_parts) t += static_cast<std::size_t>(p.factor.degree()) * p.power;
        return t;
    }

    /// Explicit values plus the real roots of every polynomial part.
    Spectrum spectrum(double root_tol = 1e-12) const {
        std::vector<SpectralValue> values;
        for (const auto& e : explicit_parts) values.push_back({e.value, e.multiplicity});
        for (const auto& p : polynomial_parts) {
            const Spectrum roots = real_roots(p.factor, root_tol);
            for (const auto& r : roots.pairs()) values.push_back({r.value, r.multiplicity * p.power});
        }
        return Spectrum::from_pairs(std::move(values), 1e-9);
    }
};

namespace detail {

class ReportBuilder {
  public:
    explicit ReportBuilder(JoinKind kind) { report_.kind = kind; }

    void add_value(const Rational& value, std::size_t multiplicity, std::string provenance) {
        if (multiplicity == 0) return;
        report_.explicit_parts.push_back({value.get_d(), multiplicity, provenance});
        report_.explicit_factors.push_back({Polynomial::linear_factor(value), multiplicity, std::move(provenance)});
    }

    /// Roots of psi / (y - top), each shifted by shift.
    void add_shifted_roots(const Polynomial& psi, const Rational& top, const Rational& shift,
                           const std::string& provenance) {
        const Polynomial deflated = exact_div(psi, Polynomial::linear_factor(top));
        for (const auto& [f, k] : square_free_decomposition(deflated)) {
            const Spectrum roots = real_roots(f);
            for (const auto& r : roots.pairs())
                report_.explicit_parts.push_back({r.value + shift.get_d(), k, provenance});
            report_.explicit_factors.push_back({f.shifted(shift), k, provenance});
        }
    }

    /// G_i factors for the eigenvalues lambda_2..lambda_n1 of A_alpha(G1).
    void add_family(const Polynomial& psi1, const Rational& r1, const EigenFactorFamily& family,
                    const std::string& provenance) {
        const Polynomial deflated = exact_div(psi1, Polynomial::linear_factor(r1));
        for (const auto& [f, k] : square_free_decomposition(deflated))
            report_.polynomial_parts.push_back({homogenized_product(f, family), k, provenance});
    }

    void add_polynomial(Polynomial p, std::string provenance) {
        report_.polynomial_parts.push_back({std::move(p), 1, std::move(provenance)});
    }

    ClosedSpectrumReport finish() {
        Polynomial product(1);
        for (const auto& f : report_.explicit_factors) product *= f.factor.pow(f.power);
        for (const auto& f : report_.polynomial_parts) product *= f.factor.pow(f.power);
        report_.assembled_charpoly = std::move(product);
        return std::move(report_);
    }

  private:
    ClosedSpectrumReport report_;
};

inline void require_connected_if_matching(std::size_t r1, std::size_t n1) {
    if (r1 == 1 && n1 != 2)
        throw PreconditionError("corollary branch r1 = 1 applies only to connected G1 = P2 (got n1=" +
                                std::to_string(n1) + ")");
}

/// Value of the simple eigenvalue appearing when G1 = P2.
inline Rational p2_extra_value(JoinKind kind, const Rational& a, const Rational& n2) {
    switch (kind) {
        case JoinKind::sv: return a * (1 + n2);
        case JoinKind::se: return a;
        case JoinKind::rv: return a * (3 + n2) - 1;
        case JoinKind::re: return 3 * a - 1;
    }
    return 0;
}

inline Rational extra_value_for_r(JoinKind kind, const Rational& a, const Rational& n2) {
    return joins_original_vertices(kind) ? Rational(2 * a) : Rational(a * (2 + n2));
}

}  // namespace detail

/// Spectrum of the join for r1-regular G1 and r2-regular G2.
inline ClosedSpectrumReport corollary_spectrum_regular(JoinKind kind, const Graph& g1, const Graph& g2,
                                                       const Alpha& alpha) {
    using detail::pc;
    using detail::px;
    detail::require_join_operands(g1, g2);
    const std::size_t r1_ = detail::require_regular(g1, "G1");
    const std::size_t r2_ = detail::require_regular(g2, "G2");
    const std::size_t n1_ = g1.vertex_count(), m1_ = g1.edge_count(), n2_ = g2.vertex_count();
    detail::require_connected_if_matching(r1_, n1_);

    const Rational& a = alpha.value();
    const Rational b2 = (1 - a) * (1 - a);
    const Rational n1 = detail::q(n1_), m1 = detail::q(m1_), r1 = detail::q(r1_), r2 = detail::q(r2_),
                   n2 = detail::q(n2_);
    const Polynomial x = px(), x2 = px() * px();
    const Polynomial psi2 = char_poly(alpha_matrix(g2, alpha));
    detail::ReportBuilder out(kind);
    const bool vertex_join = joins_original_vertices(kind);

    if (r1_ == 1) {
        out.add_value(detail::p2_extra_value(kind, a, n2), 1, "simple eigenvalue for G1 = P2");
        const Rational shift = vertex_join ? Rational(2 * a) : a;
        out.add_shifted_roots(psi2, r2, shift, "shift + lambda_i(A_alpha(G2)), i >= 2");
        Polynomial f;
        switch (kind) {
            case JoinKind::sv:
                f = Polynomial::linear_factor(2 * a + r2) *
                        (x2 - x * Rational(a * (3 + n2)) - pc(2 * (1 - 2 * a - a * a * n2))) -
                    Polynomial::linear_factor(2 * a) * Rational(2 * n2 * b2);
                break;
            case JoinKind::se:
                f = Polynomial::linear_factor(a + r2) * (x2 - x * Rational(a * (3 + n2)) + pc(a * a * n2 + 4 * a - 2)) -
                    Polynomial::linear_factor(a) * Rational(n2 * b2);
                break;
            case JoinKind::rv:
                f = Polynomial::linear_factor(2 * a + r2) *
                        (x2 - x * Rational(3 * a + a * n2 + 1) + pc(2 * a * a * n2 + 6 * a - 2)) -
                    Polynomial::linear_factor(2 * a) * Rational(2 * n2 * b2);
                break;
            case JoinKind::re:
                f = Polynomial::linear_factor(a + r2) *
                        (x2 - x * Rational(3 * a + a * n2 + 1) + pc(a * a * n2 + 6 * a + a * n2 - 2)) -
                    Polynomial::linear_factor(a + 1) * Rational(n2 * b2);
                break;
        }
        out.add_polynomial(std::move(f), "F(x), cubic");
        return out.finish();
    }

    out.add_value(detail::extra_value_for_r(kind, a, n2), m1_ - n1_, "repeated m1 - n1 times");
    const Rational shift = vertex_join ? Rational(a * n1) : Rational(a * m1);
    out.add_shifted_roots(psi2, r2, shift, vertex_join ? "alpha n1 + lambda_i(A_alpha(G2)), i >= 2"
                                                       : "alpha m1 + lambda_i(A_alpha(G2)), i >= 2");
    const Polynomial psi1 = char_poly(alpha_matrix(g1, alpha));
    out.add_family(psi1, r1, eigen_factor_family(kind, r1_, n2_, alpha), "G_i(x), i = 2..n1");

    Polynomial f;
    switch (kind) {
        case JoinKind::sv:
            f = Polynomial::linear_factor(a * n1 + r2) *
                    (x2 - x * Rational(a * (2 + r1 + n2)) - pc(2 * (r1 - 2 * a * r1 - a * a * n2))) -
                Polynomial::linear_factor(2 * a) * Rational(n1 * n2 * b2);
            break;
        case JoinKind::se:
            f = Polynomial::linear_factor(a * m1 + r2) *
                    (x2 - x * Rational(a * (2 + r1 + n2)) + pc(r1 * (a * a * n2 + 4 * a - 2))) -
                Polynomial::linear_factor(a * r1) * Rational(m1 * n2 * b2);
            break;
        case JoinKind::rv:
            f = Polynomial::linear_factor(a * n1 + r2) *
                    (x2 - x * Rational(2 * a + a * r1 + a * n2 + r1) + pc(2 * a * a * n2 + 6 * a * r1 - 2 * r1)) -
                Polynomial::linear_factor(2 * a) * Rational(n1 * n2 * b2);
            break;
        case JoinKind::re:
            f = Polynomial::linear_factor(a * m1 + r2) *
                    (x2 - x * Rational(2 * a + a * r1 + a * n2 + r1) +
                     pc(a * a * r1 * n2 + 6 * a * r1 + a * r1 * n2 - 2 * r1)) -
                Polynomial::linear_factor(a * r1 + r1) * Rational(m1 * n2 * b2);
            break;
    }
    out.add_polynomial(std::move(f), "F(x), cubic");
    return out.finish();
}

/// Spectrum of the join for r1-regular G1 and G2 = K_{p,q}.
inline ClosedSpectrumReport corollary_spectrum_kpq(JoinKind kind, const Graph& g1, std::size_t p_, std::size_t q_,
                                                   const Alpha& alpha) {
    using detail::pc;
    using detail::px;
    if (p_ < 1 || q_ < 1) throw PreconditionError("K_{p,q} needs p, q >= 1");
    const Graph g2 = complete_bipartite_graph(p_, q_);
    detail::require_join_operands(g1, g2);
    const std::size_t r1_ = detail::require_regular(g1, "G1");
    const std::size_t n1_ = g1.vertex_count(), m1_ = g1.edge_count();
    detail::require_connected_if_matching(r1_, n1_);

    const Rational& a = alpha.value();
    const Rational b2 = (1 - a) * (1 - a);
    const Rational n1 = detail::q(n1_), m1 = detail::q(m1_), r1 = detail::q(r1_), p = detail::q(p_), q = detail::q(q_);
    const Rational s = p + q, pq = p * q;
    const Polynomial x = px(), x2 = px() * px();
    detail::ReportBuilder out(kind);
    const bool vertex_join = joins_original_vertices(kind);

    if (r1_ == 1) {
        // Shift applied to the alpha p, alpha q eigenvalues of K_{p,q}.
        const Rational base = kind == JoinKind::sv || kind == JoinKind::rv ? Rational(2 * a) : a;
        out.add_value(detail::p2_extra_value(kind, a, s), 1, "simple eigenvalue for G1 = P2");
        out.add_value(base + a * p, q_ - 1, "repeated q - 1 times");
        out.add_value(base + a * q, p_ - 1, "repeated p - 1 times");
        Polynomial f;
        switch (kind) {
            case JoinKind::sv:
                f = (x2 - x * Rational(a * (3 + s)) - pc(2 * (1 - 2 * a - a * a * p - a * a * q))) *
                        (x2 - x * Rational(a * (4 + s)) + pc(4 * a * a + 2 * a * a * p + 2 * a * a * q + 2 * a * pq - pq)) -
                    Polynomial::linear_factor(2 * a) *
                        (Polynomial::linear_factor(2 * a) * s - pc(a * s * s) + pc(2 * pq)) * Rational(2 * b2);
                break;
            case JoinKind::se:
                f = (x2 - x * Rational(a * (3 + s)) + pc(a * a * p + a * a * q + 4 * a - 2)) *
                        (x2 - x * Rational(a * (2 + s)) + pc(a * a + a * a * p + a * a * q + 2 * a * pq - pq)) -
                    Polynomial::linear_factor(a) * (Polynomial::linear_factor(a) * s - pc(a * s * s) + pc(2 * pq)) *
                        b2;
                break;
            case JoinKind::rv:
                f = (x2 - x * Rational(3 * a + a * p + a * q + 1) + pc(2 * a * a * p + 2 * a * a * q + 6 * a - 2)) *
                        (x2 - x * Rational(4 * a + a * p + a * q) +
                         pc(4 * a * a + 2 * a * a * p + 2 * a * a * q + 2 * a * pq - pq)) -
                    Polynomial::linear_factor(2 * a) *
                        (Polynomial::linear_factor(2 * a) * s - pc(a * s * s) + pc(2 * pq)) * Rational(2 * b2);
                break;
            case JoinKind::re:
                f = (x2 - x * Rational(2 * a + a * p + a * q + a + 1) +
                     pc(a * a * p + a * a * q + 6 * a + a * p + a * q - 2)) *
                        (x2 - x * Rational(2 * a + a * p + a * q) + pc(a * a + a * a * p + a * a * q + 2 * a * pq - pq)) -
                    Polynomial::linear_factor(a + 1) *
                        (x * s - pc(a * p + a * q + a * p * p + a * q * q + 2 * a * pq) + pc(2 * pq)) * b2;
                break;
        }
        out.add_polynomial(std::move(f), "F(x), quartic");
        return out.finish();
    }

    const Rational shift = vertex_join ? Rational(a * n1) : Rational(a * m1);
    out.add_value(detail::extra_value_for_r(kind, a, s), m1_ - n1_, "repeated m1 - n1 times");
    out.add_value(shift + a * p, q_ - 1, "repeated q - 1 times");
    out.add_value(shift + a * q, p_ - 1, "repeated p - 1 times");
    const Polynomial psi1 = char_poly(alpha_matrix(g1, alpha));
    out.add_family(psi1, r1, eigen_factor_family(kind, r1_, p_ + q_, alpha), "G_i(x), i = 2..n1");

    // (x - shift)(p+q) - alpha (p+q)^2 + 2pq: numerator of the K_{p,q} coronal at x - shift.
    const Polynomial coronal_num = Polynomial::linear_factor(shift) * s - pc(a * s * s) + pc(2 * pq);
    const Polynomial kpq_den =
        x2 - x * Rational(2 * shift + a * p + a * q) + pc(shift * shift + shift * a * p + shift * a * q + 2 * a * pq - pq);
    Polynomial f;
    switch (kind) {
        case JoinKind::sv:
            f = (x2 - x * Rational(a * (2 + r1 + s)) - pc(2 * (r1 - 2 * a * r1 - a * a * p - a * a * q))) * kpq_den -
                Polynomial::linear_factor(2 * a) * coronal_num * Rational(n1 * b2);
            break;
        case JoinKind::se:
            f = (x2 - x * Rational(a * (2 + r1 + s)) + pc(r1 * (a * a * p + a * a * q + 4 * a - 2))) * kpq_den -
                Polynomial::linear_factor(a * r1) * coronal_num * Rational(m1 * b2);
            break;
        case JoinKind::rv:
            f = (x2 - x * Rational(2 * a + a * r1 + a * p + a * q + r1) +
                 pc(2 * a * a * p + 2 * a * a * q + 6 * a * r1 - 2 * r1)) *
                    kpq_den -
                Polynomial::linear_factor(2 * a) * coronal_num * Rational(n1 * b2);
            break;
        case JoinKind::re:
            f = (x2 - x * Rational(2 * a + a * r1 + a * p + a * q + r1) +
                 pc(a * a * r1 * p + a * a * r1 * q + 6 * a * r1 + a * r1 * p + a * r1 * q - 2 * r1)) *
                    kpq_den -
                Polynomial::linear_factor(a * r1 + r1) * coronal_num * Rational(m1 * b2);
            break;
    }
    out.add_polynomial(std::move(f), "F(x), quartic");
    return out.finish();
}

}  // namespace alpha_spectra
