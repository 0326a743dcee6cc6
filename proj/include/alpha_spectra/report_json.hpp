#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "closed_form.hpp"
#include "cospectral.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace alpha_spectra {

inline nlohmann::json polynomial_json(const Polynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(fraction_string(c));
    return coeffs;
}

inline nlohmann::json to_json(const ClosedSpectrumReport& r) {
    nlohmann::json j;
    j["kind"] = to_string(r.kind);
    j["explicit_parts"] = nlohmann::json::array();
    for (const auto& e : r.explicit_parts)
        j["explicit_parts"].push_back({{"value", e.value}, {"multiplicity", e.multiplicity}, {"provenance", e.provenance}});
    auto factors = [](const std::vector<FactorPart>& parts) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& f : parts)
            a.push_back({{"coefficients", polynomial_json(f.factor)}, {"power", f.power}, {"provenance", f.provenance}});
        return a;
    };
    j["explicit_factors"] = factors(r.explicit_factors);
    j["polynomial_parts"] = factors(r.polynomial_parts);
    j["assembled_charpoly"] = polynomial_json(r.assembled_charpoly);
    j["total_multiplicity"] = r.total_multiplicity();
    return j;
}

inline nlohmann::json to_json(const CospectralCertificate& c) {
    nlohmann::json grid = nlohmann::json::array();
    for (const auto& a : c.alpha_grid) grid.push_back(a.to_string());
    return {{"kind", to_string(c.kind)},          {"alpha_grid", grid},
            {"max_spectral_gap", c.max_spectral_gap}, {"tolerance", c.tolerance},
            {"noniso_witness", c.noniso_witness}, {"certified", c.certified},
            {"failure", c.failure}};
}

}  // namespace alpha_spectra
