#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace alpha_spectra {

/// Univariate polynomial over Q, coefficients in ascending degree.
/// The leading coefficient is nonzero unless the polynomial is zero.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const Rational& constant) : c_{constant} { trim(); }
    Polynomial(long constant) : Polynomial(Rational(constant)) {}
    explicit Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }
    Polynomial(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }

    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
    /// x - root
    static Polynomial linear_factor(const Rational& root) { return Polynomial({Rational(-root), Rational(1)}); }
    static Polynomial monomial(const Rational& coef, std::size_t degree) {
        std::vector<Rational> c(degree + 1, Rational(0));
        c[degree] = coef;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const& { return c_; }
    std::vector<Rational> coefficients() && { return std::move(c_); }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    double evaluate(double x) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }
    Polynomial operator-() const {
        Polynomial p = *this;
        for (auto& v : p.c_) v = -v;
        return p;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial pow(std::size_t k) const {
        Polynomial result(1), base = *this;
        while (k > 0) {
            if (k & 1) result *= base;
            k >>= 1;
            if (k > 0) base *= base;
        }
        return result;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
        return Polynomial(std::move(d));
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        return *this * (Rational(1) / leading());
    }

    /// p(q(x)).
    Polynomial compose(const Polynomial& q) const {
        Polynomial acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Polynomial(*it);
        return acc;
    }

    /// p(x - s), by repeated synthetic division (Taylor shift).
    Polynomial shifted(const Rational& s) const {
        std::vector<Rational> c = c_;
        const Rational minus_s = -s;
        const std::size_t n = c.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t k = n - 1; k > i; --k) c[k - 1] += minus_s * c[k];
        return Polynomial(std::move(c));
    }

    /// Coefficients as "p/q" fractions, ascending degree, space separated.
    std::string to_string() const {
        if (c_.empty()) return "0/1";
        std::string s;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (k) s += ' ';
            s += fraction_string(c_[k]);
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Quotient and remainder over Q.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw SingularError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> r = a.coefficients();
    const auto& d = b.coefficients();
    const std::size_t db = d.size() - 1;
    std::vector<Rational> q(r.size() - db, Rational(0));
    const Rational inv_lead = Rational(1) / d.back();
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k] == 0) continue;
        const Rational f = r[k] * inv_lead;
        q[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * d[j];
    }
    r.resize(db);
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

/// a / b when b divides a; a nonzero remainder is an internal inconsistency.
inline Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw InconsistencyError("exact polynomial division left remainder " + r.to_string() + " (divisor " +
                                 b.to_string() + ")");
    return q;
}

/// Monic gcd; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// Yun's algorithm: p = lead * prod_k f_k^k with f_k square-free, monic and
/// pairwise coprime. Returns the nonconstant (f_k, k) pairs.
inline std::vector<std::pair<Polynomial, std::size_t>> square_free_decomposition(const Polynomial& p) {
    std::vector<std::pair<Polynomial, std::size_t>> out;
    if (p.degree() < 1) return out;
    const Polynomial f = p.monic();
    const Polynomial df = f.derivative();
    Polynomial a = gcd(f, df);
    Polynomial b = exact_div(f, a);
    Polynomial c = exact_div(df, a);
    Polynomial d = c - b.derivative();
    for (std::size_t k = 1; b.degree() >= 1; ++k) {
        Polynomial g = gcd(b, d);
        if (g.degree() >= 1) out.emplace_back(g, k);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
    }
    return out;
}

/// Quotient of polynomials kept in lowest terms with a monic denominator.
class RationalFn {
  public:
    RationalFn() : num_(), den_(1) {}
    RationalFn(Polynomial numerator, Polynomial denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero()) throw SingularError("rational function with zero denominator");
        reduce();
    }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    Rational evaluate(const Rational& x) const {
        const Rational d = den_.evaluate(x);
        if (d == 0) throw SingularError("rational function evaluated at a pole x=" + fraction_string(x));
        return num_.evaluate(x) / d;
    }
    double evaluate(double x) const { return num_.evaluate(x) / den_.evaluate(x); }

    /// f(x - s)
    RationalFn shifted(const Rational& s) const { return RationalFn(num_.shifted(s), den_.shifted(s)); }

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const { return "(" + num_.to_string() + ") / (" + den_.to_string() + ")"; }

  private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Polynomial(1);
            return;
        }
        const Polynomial g = gcd(num_, den_);
        if (g.degree() >= 1) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        const Rational lead = den_.leading();
        if (lead != 1) {
            const Rational inv = Rational(1) / lead;
            num_ *= inv;
            den_ *= inv;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

}  // namespace alpha_spectra
