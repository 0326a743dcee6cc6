#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "spectrum.hpp"

namespace alpha_spectra {

namespace detail {

/// Integer polynomial, ascending; a positive rational multiple of its source.
using IntPoly = std::vector<Integer>;

inline IntPoly primitive_part(const Polynomial& p) {
    const auto& c = p.coefficients();
    Integer den(1);
    for (const auto& v : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    IntPoly out(c.size());
    Integer content(0);
    for (std::size_t k = 0; k < c.size(); ++k) {
        out[k] = c[k].get_num() * (den / c[k].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[k].get_mpz_t());
    }
    if (content > 1)
        for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    return out;
}

/// sign(f(x)) for rational x = num/den, den > 0, via den^d f(num/den).
inline int sign_at(const IntPoly& f, const Rational& x) {
    if (f.empty()) return 0;
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    Integer acc = f.back();
    Integer dpow(1);
    for (std::size_t k = f.size() - 1; k-- > 0;) {
        dpow *= den;
        acc = acc * num + f[k] * dpow;
    }
    return sgn(acc);
}

inline std::vector<IntPoly> sturm_chain(const Polynomial& f) {
    std::vector<IntPoly> chain;
    Polynomial a = f, b = f.derivative();
    chain.push_back(primitive_part(a));
    while (!b.is_zero()) {
        chain.push_back(primitive_part(b));
        Polynomial r = -divmod(a, b).second;
        // Positive rescaling keeps signs and bounds coefficient growth.
        if (!r.is_zero()) {
            const IntPoly prim = primitive_part(r);
            std::vector<Rational> rc(prim.begin(), prim.end());
            r = Polynomial(std::move(rc));
        }
        a = std::move(b);
        b = std::move(r);
    }
    return chain;
}

inline std::size_t sign_changes(const std::vector<IntPoly>& chain, const Rational& x) {
    std::size_t changes = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const int s = sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

/// Power of two strictly above every root magnitude (Cauchy bound).
inline Rational root_bound(const Polynomial& f) {
    Rational m(0);
    const Rational lead = abs(f.leading());
    for (long k = 0; k < f.degree(); ++k) {
        Rational r = abs(f.coeff(static_cast<std::size_t>(k))) / lead;
        if (r > m) m = r;
    }
    Rational bound(1);
    while (bound <= m + 1) bound *= 2;
    return bound;
}

/// Distinct real roots of a square-free polynomial, each refined to a
/// bracket narrower than tol; returns bracket midpoints (exact when hit).
inline std::vector<double> isolate_square_free(const Polynomial& f, const Rational& tol) {
    std::vector<double> roots;
    if (f.degree() < 1) return roots;
    if (f.degree() == 1) {
        roots.push_back(Rational(-f.coeff(0) / f.coeff(1)).get_d());
        return roots;
    }
    const IntPoly fi = primitive_part(f);
    const auto chain = sturm_chain(f);
    const Rational bound = root_bound(f);

    auto refine = [&](Rational lo, Rational hi) {
        // lo may itself be a root recorded by a split; f then takes the sign of f' just past it.
        int slo = sign_at(fi, lo);
        if (slo == 0) slo = sign_at(chain[1], lo);
        while (hi - lo >= tol) {
            Rational mid = (lo + hi) / 2;
            const int sm = sign_at(fi, mid);
            if (sm == 0) return mid.get_d();
            if (sm == slo) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return Rational((lo + hi) / 2).get_d();
    };

    struct Interval {
        Rational lo, hi;
        std::size_t vlo, vhi;
    };
    std::vector<Interval> work{{-bound, bound, sign_changes(chain, -bound), sign_changes(chain, bound)}};
    while (!work.empty()) {
        Interval iv = std::move(work.back());
        work.pop_back();
        const std::size_t count = iv.vlo - iv.vhi;
        if (count == 0) continue;
        if (count == 1) {
            roots.push_back(refine(iv.lo, iv.hi));
            continue;
        }
        // Split at the midpoint. A root hit exactly is recorded; V(x) at a simple
        // root counts it on the left, so the left count drops by one.
        const Rational mid = (iv.lo + iv.hi) / 2;
        const std::size_t vmid = sign_changes(chain, mid);
        if (sign_at(fi, mid) == 0) {
            roots.push_back(mid.get_d());
            work.push_back({iv.lo, mid, iv.vlo, vmid + 1});
        } else {
            work.push_back({iv.lo, mid, iv.vlo, vmid});
        }
        work.push_back({mid, iv.hi, vmid, iv.vhi});
    }
    return roots;
}

}  // namespace detail

/// All real roots with multiplicities via square-free decomposition and Sturm
/// bisection. Fails if p has non-real roots.
inline Spectrum real_roots(const Polynomial& p, double tol = 1e-12) {
    if (p.is_zero()) throw PreconditionError("real_roots of the zero polynomial");
    if (!(tol > 0)) throw PreconditionError("root tolerance must be positive");
    const Rational rtol(tol);
    std::vector<SpectralValue> pairs;
    std::size_t found = 0;
    for (const auto& [factor, multiplicity] : square_free_decomposition(p)) {
        const auto roots = detail::isolate_square_free(factor, rtol);
        if (static_cast<long>(roots.size()) != factor.degree())
            throw PreconditionError("polynomial has " + std::to_string(factor.degree() - static_cast<long>(roots.size())) +
                                    " non-real roots (multiplicity " + std::to_string(multiplicity) + ")");
        for (double r : roots) pairs.push_back({r, multiplicity});
        found += roots.size() * multiplicity;
    }
    if (static_cast<long>(found) != p.degree()) throw InconsistencyError("root count does not match degree");
    return Spectrum::from_pairs(std::move(pairs), 0.0);
}

}  // namespace alpha_spectra
