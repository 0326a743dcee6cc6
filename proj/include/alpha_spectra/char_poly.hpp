#pragma once

#include <cstddef>
#include <vector>

#include "graph.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace alpha_spectra {

/// A_alpha(G) = alpha D(G) + (1 - alpha) A(G).
inline RationalSymMatrix alpha_matrix(const Graph& g, const Alpha& a) {
    const Rational& alpha = a.value();
    const Rational beta = 1 - alpha;
    RationalMatrix m(g.vertex_count(), g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) m(v, v) = alpha * static_cast<long>(g.degree(v));
    for (auto [u, v] : g.edges()) m(u, v) = m(v, u) = beta;
    return RationalSymMatrix(std::move(m));
}

/// det(xI - M) by Faddeev-LeVerrier on the integer matrix s*M, where s is the
/// lcm of the entry denominators. Integer arithmetic keeps every step exact:
/// with B = sM, tr(B N_k)/k is always an integer.
inline Polynomial char_poly(const RationalMatrix& m) {
    if (!m.square()) throw PreconditionError("char_poly of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial(1);

    Integer scale(1);
    for (const auto& v : m.values()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());

    Matrix<Integer> b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = m(i, j);
            b(i, j) = v.get_num() * (scale / v.get_den());
        }

    // c[k] is the coefficient of x^k in det(xI - B).
    std::vector<Integer> c(n + 1, Integer(0));
    c[n] = 1;
    Matrix<Integer> nk(n, n);  // N_1 = I
    for (std::size_t i = 0; i < n; ++i) nk(i, i) = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix<Integer> bn = b * nk;
        Integer tr = bn.trace();
        Integer ck;
        mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), k);
        ck = -ck;
        c[n - k] = ck;
        if (k == n) break;
        for (std::size_t i = 0; i < n; ++i) bn(i, i) += ck;
        nk = std::move(bn);
    }

    // det(xI - M) = s^{-n} det((s x) I - B)  =>  coefficient of x^k is c[k] / s^{n-k}.
    std::vector<Rational> coeffs(n + 1);
    Integer power(1);
    for (std::size_t k = n + 1; k-- > 0;) {
        Rational q(c[k], power);
        q.canonicalize();
        coeffs[k] = q;
        power *= scale;
    }
    return Polynomial(std::move(coeffs));
}

inline Polynomial char_poly(const RationalSymMatrix& m) { return char_poly(m.matrix()); }

}  // namespace alpha_spectra
