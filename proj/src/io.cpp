#include "corona/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "corona/util.hpp"

namespace corona {

using nlohmann::json;

json graph_to_json(const Graph& g) {
  json j;
  if (!g.name().empty()) j["name"] = g.name();
  j["n"] = g.vertex_count();
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph json needs 'n' and 'edges'");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph json edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(j.at("n").get<int>(), std::move(edges), j.value("name", ""));
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  json j;
  in >> j;
  return graph_from_json(j);
}

void save_graph(const Graph& g, const std::string& path) {
  write_text_file(path, graph_to_json(g).dump(2) + "\n");
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph " << (g.name().empty() ? "G" : "\"" + g.name() + "\"") << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string spectrum_to_csv(const Spectrum& s) {
  std::ostringstream out;
  out << "value,multiplicity\n";
  for (const auto& e : s.entries)
    out << format_double(e.value) << "," << e.multiplicity << "\n";
  return out.str();
}

json poly_to_json(const IntPoly& p) { return json{{"coeffs", p.coeff_strings()}}; }

IntPoly poly_from_json(const json& j) {
  return IntPoly::from_strings(j.at("coeffs").get<std::vector<std::string>>());
}

json rational_to_json(const RationalFunction& r) {
  return json{{"num", r.num.coeff_strings()},
              {"den", r.den.coeff_strings()},
              {"reduced", r.reduced}};
}

json verification_to_json(const VerificationRecord& rec) {
  json j{{"kind", rec.kind},
         {"n1", rec.n1},
         {"n2", rec.n2},
         {"product_order", rec.product_order},
         {"tol", rec.tol},
         {"max_abs_error", rec.max_abs_error},
         {"multiplicities_match", rec.multiplicities_match},
         {"pass", rec.pass}};
  if (!rec.mismatches.empty()) {
    json m = json::array();
    for (const auto& [closed, oracle] : rec.mismatches)
      m.push_back({{"closed", closed}, {"oracle", oracle}});
    j["mismatches"] = std::move(m);
  }
  return j;
}

json certificate_to_json(const CospectralCertificate& cert) {
  json j{{"mode", to_string(cert.mode)},
         {"left", graph_to_json(cert.left)},
         {"right", graph_to_json(cert.right)},
         {"char_left", poly_to_json(cert.char_left)},
         {"char_right", poly_to_json(cert.char_right)},
         {"equal", cert.equal},
         {"detail", cert.detail}};
  if (cert.coronal_check) j["coronal_check"] = *cert.coronal_check;
  return j;
}

json family_report_to_json(const FamilyReport& rep) {
  json graphs = json::array();
  for (const auto& e : rep.graphs) {
    json g{{"label", e.label},       {"order", e.order},   {"degree", e.degree},
           {"regular", e.regular},   {"connected", e.connected},
           {"algebraic_connectivity", e.a},
           {"pass", e.pass}};
    if (!e.diagnostic.empty()) g["diagnostic"] = e.diagnostic;
    graphs.push_back(std::move(g));
  }
  return json{{"n", rep.n},
              {"k", rep.k},
              {"eps", rep.eps},
              {"delta", rep.delta},
              {"expected_degree", rep.expected_degree},
              {"min_algebraic_connectivity", rep.min_a},
              {"graphs", std::move(graphs)},
              {"pass", rep.pass}};
}

json sl2_family_to_json(const Sl2FamilyResult& result) {
  json entries = json::array();
  for (const auto& e : result.entries)
    entries.push_back({{"m", e.m},
                       {"group_order", e.group_order},
                       {"base_a", e.base_a},
                       {"corona_a", e.corona_a},
                       {"augmented_a", e.hat_a},
                       {"lower_bound", e.lower_bound},
                       {"regular", e.regular16},
                       {"connected", e.connected},
                       {"monotone", e.monotone},
                       {"bound_ok", e.bound_ok}});
  return json{{"entries", std::move(entries)},
              {"eps", result.eps},
              {"eps_measured", result.eps_measured},
              {"family", family_report_to_json(result.report)},
              {"pass", result.pass}};
}

json bounds_report_to_json(const BoundsReport& rep) {
  json j{{"m", rep.m},
         {"n", rep.n},
         {"k", rep.k},
         {"a_g", rep.a_g},
         {"bw_lower", rep.bw_lower},
         {"ivx_lower", rep.ivx_lower},
         {"consistent", rep.consistent}};
  if (rep.oracle) {
    j["oracle"] = {{"bisection_width", rep.oracle->bisection_width},
                   {"vertex_expansion",
                    {{"num", rep.oracle->vertex_expansion.num},
                     {"den", rep.oracle->vertex_expansion.den},
                     {"value", rep.oracle->vertex_expansion.value()}}},
                   {"isoperimetric",
                    {{"num", rep.oracle->isoperimetric.num},
                     {"den", rep.oracle->isoperimetric.den},
                     {"value", rep.oracle->isoperimetric.value()}}}};
  }
  return j;
}

json cayley_spec_to_json(const CayleySpec& spec) {
  return json{{"name", spec.name},
              {"order", spec.order},
              {"identity", spec.identity},
              {"labels", spec.labels},
              {"generators", spec.gens},
              {"distinguished", spec.gens0}};
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace corona
