#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace alpha_spectra {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw PreconditionError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Always "p/q" with q >= 1, including integers ("3/1").
inline std::string fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p/q" or an integer, optionally signed. Decimals are rejected.
inline Rational parse_fraction(std::string_view text) {
    if (text.empty()) throw ParseError("empty fraction", 0);
    std::size_t slash = std::string_view::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '/') {
            if (slash != std::string_view::npos) throw ParseError("second '/' in fraction", i);
            slash = i;
        } else if ((c == '-' || c == '+') && i == 0) {
            continue;
        } else if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError(std::string("unexpected character '") + c + "' in fraction", i);
        }
    }
    auto digits_ok = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty();
    };
    std::string num(text.substr(0, slash));
    std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
    if (!digits_ok(num)) throw ParseError("missing numerator", 0);
    if (den.empty()) throw ParseError("missing denominator", text.size());
    if (!num.empty() && num.front() == '+') num.erase(0, 1);
    Integer n(num, 10), d(den, 10);
    if (d == 0) throw ParseError("zero denominator", slash + 1);
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// Rational in [0, 1].
class Alpha {
  public:
    explicit Alpha(Rational value) : value_(std::move(value)) {
        value_.canonicalize();
        if (value_ < 0 || value_ > 1)
            throw PreconditionError("alpha " + fraction_string(value_) + " outside [0,1]");
    }
    Alpha(long num, long den) : Alpha(make_rational(num, den)) {}

    static Alpha parse(std::string_view text) { return Alpha(parse_fraction(text)); }

    const Rational& value() const { return value_; }
    double to_double() const { return value_.get_d(); }
    std::string to_string() const { return fraction_string(value_); }

    friend bool operator==(const Alpha& a, const Alpha& b) { return a.value_ == b.value_; }

  private:
    Rational value_;
};

/// {0, 1/k, 2/k, ..., 1}.
inline std::vector<Alpha> alpha_grid(long steps) {
    std::vector<Alpha> grid;
    for (long i = 0; i <= steps; ++i) grid.emplace_back(i, steps);
    return grid;
}

}  // namespace alpha_spectra
