#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "char_poly.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "spectrum.hpp"

namespace alpha_spectra {

/// 1^T (xI - M)^{-1} 1, solving (xI - M) y = 1 with partial pivoting.
inline double coronal_value(const RealSymMatrix& m, double x) {
    const std::size_t n = m.size();
    RealMatrix a(n, n);
    std::vector<double> rhs(n, 1.0);
    double scale = std::abs(x);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = (i == j ? x : 0.0) - m(i, j);
            scale = std::max(scale, std::abs(m(i, j)));
        }
    const double singular_tol = 1e-13 * std::max(scale, 1.0) * static_cast<double>(std::max<std::size_t>(n, 1));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::abs(a(i, col)) > std::abs(a(piv, col))) piv = i;
        if (std::abs(a(piv, col)) <= singular_tol)
            throw SingularError("x=" + std::to_string(x) + " is an eigenvalue");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            std::swap(rhs[piv], rhs[col]);
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            const double f = a(i, col) / a(col, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
            rhs[i] -= f * rhs[col];
        }
    }
    double total = 0;
    std::vector<double> y(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * y[j];
        y[i] = s / a(i, i);
        total += y[i];
    }
    return total;
}

inline double coronal_value(const RationalSymMatrix& m, double x) { return coronal_value(to_real(m), x); }

/// Gamma_M(x) = (psi_M(x) - psi_{M+J}(x)) / psi_M(x), reduced.
/// This is det(A + cJ) = det A + c 1^T adj(A) 1 with A = xI - M and c = -1.
inline RationalFn coronal_rational(const RationalSymMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) throw PreconditionError("coronal of an empty matrix");
    const Polynomial psi = char_poly(m);
    const Polynomial psi_plus_j = char_poly(m.matrix() + RationalMatrix::ones(n, n));
    return RationalFn(psi - psi_plus_j, psi);
}

/// n / (x - t) for a matrix whose rows all sum to t.
inline RationalFn constant_rowsum_coronal(std::size_t n, const Rational& t) {
    if (n == 0) throw PreconditionError("constant_rowsum_coronal needs n >= 1");
    return RationalFn(Polynomial(Rational(static_cast<long>(n))), Polynomial::linear_factor(t));
}

/// A_alpha(K_{p,q}) spectrum in closed form; coincident values (within 1e-12 scale) merge.
inline Spectrum kpq_alpha_spectrum(std::size_t p, std::size_t q, const Alpha& a) {
    if (p < 1 || q < 1) throw PreconditionError("K_{p,q} needs p, q >= 1");
    const double al = a.to_double();
    const double s = static_cast<double>(p + q);
    const double pq = static_cast<double>(p * q);
    const double disc = std::sqrt(al * al * s * s + 4 * pq * (1 - 2 * al));
    std::vector<SpectralValue> parts{
        {(al * s + disc) / 2, 1},
        {al * static_cast<double>(p), q - 1},
        {al * static_cast<double>(q), p - 1},
        {(al * s - disc) / 2, 1},
    };
    return Spectrum::from_pairs(std::move(parts), 1e-12 * (1 + s));
}

/// ((p+q)x - alpha (p+q)^2 + 2pq) / (x^2 - alpha (p+q) x + (2 alpha - 1) pq).
inline RationalFn kpq_coronal(std::size_t p, std::size_t q, const Alpha& a) {
    if (p < 1 || q < 1) throw PreconditionError("K_{p,q} needs p, q >= 1");
    const Rational& al = a.value();
    const Rational s(static_cast<long>(p + q));
    const Rational pq(static_cast<long>(p * q));
    Polynomial num({-al * s * s + 2 * pq, s});
    Polynomial den({(2 * al - 1) * pq, -al * s, Rational(1)});
    return RationalFn(std::move(num), std::move(den));
}

}  // namespace alpha_spectra
