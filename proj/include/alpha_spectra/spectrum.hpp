#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace alpha_spectra {

struct SpectralValue {
    double value;
    std::size_t multiplicity;
};

/// Eigenvalue multiset as (value, multiplicity), strictly descending by value.
class Spectrum {
  public:
    Spectrum() = default;

    /// Takes explicit (value, multiplicity) pairs; pairs closer than merge_tol
    /// are combined, multiplicity-weighted.
    static Spectrum from_pairs(std::vector<SpectralValue> pairs, double merge_tol = 0.0) {
        std::erase_if(pairs, [](const SpectralValue& p) { return p.multiplicity == 0; });
        std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.value > b.value; });
        Spectrum s;
        double cluster_head = 0;
        double weighted = 0;
        for (const auto& p : pairs) {
            if (!s.pairs_.empty() && cluster_head - p.value <= merge_tol) {
                auto& last = s.pairs_.back();
                weighted += p.value * static_cast<double>(p.multiplicity);
                last.multiplicity += p.multiplicity;
                last.value = weighted / static_cast<double>(last.multiplicity);
            } else {
                s.pairs_.push_back(p);
                cluster_head = p.value;
                weighted = p.value * static_cast<double>(p.multiplicity);
            }
        }
        return s;
    }

    /// Each value counted once; values within merge_tol of the head of a
    /// descending cluster join that cluster.
    static Spectrum from_values(const std::vector<double>& values, double merge_tol) {
        std::vector<SpectralValue> pairs;
        pairs.reserve(values.size());
        for (double v : values) pairs.push_back({v, 1});
        return from_pairs(std::move(pairs), merge_tol);
    }

    const std::vector<SpectralValue>& pairs() const& { return pairs_; }
    std::vector<SpectralValue> pairs() && { return std::move(pairs_); }
    std::size_t distinct() const { return pairs_.size(); }

    std::size_t total_multiplicity() const {
        std::size_t t = 0;
        for (const auto& p : pairs_) t += p.multiplicity;
        return t;
    }

    /// Descending, each value repeated by its multiplicity.
    std::vector<double> expanded() const {
        std::vector<double> out;
        out.reserve(total_multiplicity());
        for (const auto& p : pairs_) out.insert(out.end(), p.multiplicity, p.value);
        return out;
    }

    double sum() const {
        double s = 0;
        for (const auto& p : pairs_) s += p.value * static_cast<double>(p.multiplicity);
        return s;
    }

    /// Total multiplicity of values within tol of target.
    std::size_t multiplicity_near(double target, double tol) const {
        std::size_t m = 0;
        for (const auto& p : pairs_)
            if (std::abs(p.value - target) <= tol) m += p.multiplicity;
        return m;
    }

    /// One "value multiplicity" line per distinct value, value to 12 significant digits.
    std::string serialize() const {
        std::ostringstream out;
        for (const auto& p : pairs_) out << format_value(p.value) << ' ' << p.multiplicity << '\n';
        return out.str();
    }

    static std::string format_value(double v) {
        if (v == 0) v = 0;  // no "-0"
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        std::string s(buf);
        if (s == "-0") s = "0";
        return s;
    }

  private:
    std::vector<SpectralValue> pairs_;
};

}  // namespace alpha_spectra
