#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "spectrum.hpp"

namespace alpha_spectra {

struct JacobiOptions {
    /// Stop once the off-diagonal Frobenius norm drops below tol * ||M||_F.
    double tol = 1e-12;
    std::size_t max_sweeps = 100;
};

/// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// sorted descending.
inline std::vector<double> jacobi_eigenvalues(const RealSymMatrix& sym, const JacobiOptions& opts = {}) {
    if (!(opts.tol > 0)) throw PreconditionError("Jacobi tolerance must be positive");
    RealMatrix a = sym.matrix();
    const std::size_t n = a.rows();
    const double norm = frobenius_norm(a);
    auto off_norm = [&] {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += a(i, j) * a(i, j);
        return std::sqrt(s);
    };
    const double threshold = opts.tol * norm;

    double off = off_norm();
    std::size_t sweep = 0;
    while (off >= threshold && off > 0) {
        if (sweep++ == opts.max_sweeps)
            throw ConvergenceError("Jacobi eigensolver did not converge in " + std::to_string(opts.max_sweeps) +
                                       " sweeps",
                                   off / std::max(norm, 1e-300));
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0) continue;
                // Rotation angle zeroing a(p,q); t = tan(theta), smaller root.
                const double theta = (a(q, q) - a(p, p)) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0;
            }
        off = off_norm();
    }

    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

/// Eigenvalue clustering width used when the oracle output becomes a Spectrum.
inline double oracle_merge_tolerance(double matrix_norm) { return 1e-7 * (1 + matrix_norm); }

/// Jacobi spectrum; eigenvalues within 1e-7 (1 + ||M||_F) of a cluster head
/// share one multiplicity entry.
inline Spectrum eigenvalues(const RealSymMatrix& m, double tol = 1e-12) {
    const auto ev = jacobi_eigenvalues(m, JacobiOptions{tol, 100});
    return Spectrum::from_values(ev, oracle_merge_tolerance(frobenius_norm(m.matrix())));
}

inline Spectrum eigenvalues(const RationalSymMatrix& m, double tol = 1e-12) { return eigenvalues(to_real(m), tol); }

}  // namespace alpha_spectra
