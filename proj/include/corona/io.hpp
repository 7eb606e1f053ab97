#pragma once

#include <json.hpp>

#include <string>

#include "corona/bounds.hpp"
#include "corona/cospectral.hpp"
#include "corona/expander.hpp"
#include "corona/graph.hpp"
#include "corona/poly.hpp"
#include "corona/spectra.hpp"
#include "corona/spectrum.hpp"

namespace corona {

// Graph wire format: {"name": string?, "n": int, "edges": [[u,v], ...]},
// edges sorted lexicographically with u < v. Bit-exact on round trip.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

std::string graph_to_dot(const Graph& g);

// Spectrum CSV: one "value,multiplicity" line per entry, 15 significant digits.
std::string spectrum_to_csv(const Spectrum& s);

// Polynomial coefficients as decimal strings to avoid precision loss.
nlohmann::json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const RationalFunction& r);

nlohmann::json verification_to_json(const VerificationRecord& rec);
nlohmann::json certificate_to_json(const CospectralCertificate& cert);
nlohmann::json family_report_to_json(const FamilyReport& rep);
nlohmann::json sl2_family_to_json(const Sl2FamilyResult& result);
nlohmann::json bounds_report_to_json(const BoundsReport& rep);
nlohmann::json cayley_spec_to_json(const CayleySpec& spec);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace corona
