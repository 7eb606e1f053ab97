#include "corona/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>

#include "corona/bounds.hpp"
#include "corona/coronal.hpp"
#include "corona/cospectral.hpp"
#include "corona/exact.hpp"
#include "corona/expander.hpp"
#include "corona/io.hpp"
#include "corona/products.hpp"
#include "corona/spectra.hpp"
#include "corona/util.hpp"

namespace corona {

namespace {

using nlohmann::json;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    out.push_back(std::stoi(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

Graph parse_builtin(const std::string& name) {
  if (name == "k14") return star_graph(4).renamed("K1,4");
  if (name == "c4uk1") return disjoint_union(cycle_graph(4), empty_graph(1)).renamed("C4+K1");
  if (name == "shrikhande") return shrikhande_graph();
  if (name == "rook4") return rook_graph(4);
  if (name == "petersen") return petersen_graph();
  if (name == "cube") return cube_graph();
  throw std::invalid_argument("unknown builtin graph: " + name);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

struct SharedOpts {
  double tol = kDefaultVerifyTol;
  double cluster_tol = kDefaultClusterTol;
  unsigned long seed = 42;
  std::string out;
  std::string format = "csv";  // csv | json | dot where applicable
};

int spectra_nc(const SharedOpts& opts, MatrixKind kind, const std::string& g1_spec,
               const std::string& g2_spec, bool verify, int battery,
               const std::string& fastpath) {
  if (battery > 0) {
    // Seeded random pairs plus the structured quartet; deterministic order.
    std::mt19937_64 rng(opts.seed);
    std::vector<std::pair<Graph, Graph>> cases;
    std::uniform_int_distribution<int> n1_dist(1, 8), n2_dist(1, 6);
    for (int i = 0; i < battery; ++i) {
      const int n1 = n1_dist(rng), n2 = n2_dist(rng);
      Graph g1 = random_graph(rng, n1, 0.5);
      Graph g2 = random_graph(rng, n2, 0.5);
      cases.emplace_back(std::move(g1), std::move(g2));
    }
    cases.emplace_back(path_graph(4), path_graph(3));
    cases.emplace_back(path_graph(2), path_graph(1));
    cases.emplace_back(cycle_graph(4), path_graph(2));
    cases.emplace_back(path_graph(1), complete_bipartite(1, 2));

    std::vector<VerificationRecord> recs(cases.size());
    parallel_for(static_cast<int>(cases.size()), [&](int i) {
      recs[i] = verify_nc_spectrum(kind, cases[i].first, cases[i].second, opts.tol,
                                   opts.cluster_tol);
    });
    json report;
    report["kind"] = to_string(kind);
    report["seed"] = opts.seed;
    report["tol"] = opts.tol;
    json case_list = json::array();
    bool all_pass = true;
    for (const auto& rec : recs) {
      case_list.push_back(verification_to_json(rec));
      all_pass = all_pass && rec.pass;
    }
    report["cases"] = std::move(case_list);
    report["pass"] = all_pass;
    emit(report.dump(2) + "\n", opts.out);
    return all_pass ? 0 : 1;
  }

  const Graph g1 = parse_graph_spec(g1_spec);
  const Graph g2 = parse_graph_spec(g2_spec);

  Spectrum spectrum;
  std::string provenance;
  if (!fastpath.empty()) {
    const Fastpath which = fastpath_from_string(fastpath);
    // The route fixes the matrix family; keep the oracle on the same matrix.
    kind = which == Fastpath::LaplacianAnyCopy ? MatrixKind::Laplacian
           : (which == Fastpath::RegularPairSignless ||
              which == Fastpath::CompleteBipartiteSignless)
               ? MatrixKind::SignlessLaplacian
               : MatrixKind::Adjacency;
    spectrum = nc_spectrum_fastpath(which, g1, g2, opts.cluster_tol);
    provenance = "fastpath-" + fastpath;
  } else {
    FactoredCharPoly fac = nc_spectrum(kind, g1, g2, opts.cluster_tol);
    spectrum = std::move(fac.spectrum);
    provenance = fac.provenance;
  }

  std::string body;
  if (opts.format == "json") {
    json entries = json::array();
    for (const auto& e : spectrum.entries)
      entries.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
    body = json{{"kind", to_string(kind)},
                {"provenance", provenance},
                {"spectrum", std::move(entries)}}
               .dump(2) +
           "\n";
  } else {
    body = spectrum_to_csv(spectrum);
  }
  if (!verify) {
    emit(body, opts.out);
    return 0;
  }
  const Graph product = neighbourhood_corona(g1, g2);
  const Spectrum oracle =
      eigensolve_sym(matrix_of(product, kind).cast<double>()).spectrum(opts.cluster_tol);
  const VerificationRecord rec = verify_spectra(to_string(kind), g1.vertex_count(),
                                                g2.vertex_count(), spectrum, oracle, opts.tol);
  emit(body, opts.out);
  std::cout << verification_to_json(rec).dump() << "\n";
  return rec.pass ? 0 : 1;
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
  const size_t colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (kind == "file") return load_graph(rest);
  if (kind == "builtin") return parse_builtin(rest);
  if (kind == "union") {
    const size_t plus = rest.find('+');
    if (plus == std::string::npos)
      throw std::invalid_argument("union spec needs two parts: union:a+b");
    return disjoint_union(parse_graph_spec(rest.substr(0, plus)),
                          parse_graph_spec(rest.substr(plus + 1)));
  }
  return build_named(kind, rest.empty() ? std::vector<int>{} : parse_int_list(rest));
}

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"neighbourhood/edge corona spectra, cospectral certificates, expander families"};
  app.require_subcommand(1);
  // Long-form help only: --h is a graph argument of the cospectral command.
  app.set_help_flag("--help", "print help");
  app.fallthrough();  // global options may follow the subcommand
  auto add_sub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->set_help_flag("--help", "print help");
    sub->fallthrough();
    return sub;
  };

  SharedOpts opts;
  app.add_option("--tol", opts.tol, "verification tolerance")->capture_default_str();
  app.add_option("--cluster-tol", opts.cluster_tol, "eigenvalue clustering tolerance")
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "random battery seed")->capture_default_str();

  // ---- spectra nc | ec ----
  auto* spectra = add_sub(&app, "spectra", "corona spectra, closed form vs oracle");
  std::string kind_str = "A", g1_spec, g2_spec;
  bool verify = false;
  int battery = 0;

  auto* nc = add_sub(spectra, "nc", "neighbourhood corona");
  std::string fastpath;
  nc->add_option("--kind", kind_str, "matrix kind A|L|Q")->capture_default_str();
  nc->add_option("--g1", g1_spec, "base graph");
  nc->add_option("--g2", g2_spec, "copy graph");
  nc->add_flag("--verify", verify, "eigensolve the explicit product and compare");
  nc->add_option("--battery", battery, "run N seeded random pairs plus structured cases");
  nc->add_option("--fastpath", fastpath,
                 "explicit route instead of the factorization: regular-a|kpq-a|regular-q|kpq-q|l");
  nc->add_option("--out", opts.out, "output file (default stdout)");
  nc->add_option("--format", opts.format, "csv|json")->capture_default_str();

  auto* ec = add_sub(spectra, "ec", "edge corona (Laplacian spectrum)");
  ec->add_option("--g1", g1_spec, "base graph");
  ec->add_option("--g2", g2_spec, "copy graph");
  ec->add_flag("--verify", verify, "eigensolve the explicit product and compare");
  ec->add_option("--out", opts.out, "output file (default stdout)");

  // ---- coronal ----
  auto* coronal_cmd = add_sub(&app, "coronal", "exact coronal of a graph matrix");
  std::string coronal_graph, coronal_matrix = "A", coronal_shape, coronal_params;
  coronal_cmd->add_option("--g", coronal_graph, "graph spec");
  coronal_cmd->add_option("--matrix", coronal_matrix, "A|L|Q")->capture_default_str();
  coronal_cmd->add_option("--shape", coronal_shape,
                          "closed form instead: constant-row-sum|kpq-A|kpq-Q");
  coronal_cmd->add_option("--params", coronal_params, "closed-form parameters, comma separated");
  coronal_cmd->add_option("--out", opts.out, "output file (default stdout)");

  // ---- cospectral ----
  auto* cosp = add_sub(&app, "cospectral", "build and certify a cospectral pair");
  std::string mode_str = "A-left", g_spec, gprime_spec, h_spec;
  cosp->add_option("--mode", mode_str, "A-left|A-right|Q")->capture_default_str();
  cosp->add_option("--g", g_spec, "first seed graph")->required();
  cosp->add_option("--gprime", gprime_spec, "second seed graph")->required();
  cosp->add_option("--h", h_spec, "shared graph")->required();
  cosp->add_option("--out", opts.out, "certificate file (default stdout)");

  // ---- expander ----
  auto* expander = add_sub(&app, "expander", "scalar functions and expander constructions");

  auto* scalars = add_sub(expander, "scalars", "evaluate f, g, or delta");
  std::string which = "f";
  int sc_n = 1, sc_k = 1;
  double sc_x = 0;
  scalars->add_option("--which", which, "f|g|delta")->capture_default_str();
  scalars->add_option("--n", sc_n, "copy-graph order")->required();
  scalars->add_option("--k", sc_k, "base regularity")->required();
  scalars->add_option("--x", sc_x, "argument (x, or eps for delta)")->required();

  auto* family = add_sub(expander, "sl2-family", "16-regular family over SL2(Z_m)");
  std::string m_range = "3..5";
  std::optional<double> family_eps;
  double family_eps_value = 0;
  std::string report_path;
  family->add_option("--m", m_range, "modulus range lo..hi")->capture_default_str();
  auto* eps_opt = family->add_option("--eps", family_eps_value, "expansion constant (default: measured)");
  family->add_option("--report", report_path, "family report file (default stdout)");

  auto* c33 = add_sub(expander, "construct33", "regularize a corona with bundles and matchings");
  std::string c33_g, c33_h, c33_u, c33_w;
  c33->add_option("--g", c33_g, "base graph")->required();
  c33->add_option("--h", c33_h, "copy graph")->required();
  c33->add_option("--u", c33_u, "bundle pattern (k-regular)")->required();
  c33->add_option("--w", c33_w, "matching pattern ((k-t)-regular)")->required();
  c33->add_option("--out", opts.out, "graph file (default stdout)");

  auto* c35 = add_sub(expander, "construct35", "group-table regularized corona over SL2(Z_m)");
  int c35_m = 3, c35_cycle = 3;
  std::string c35_group_out;
  c35->add_option("--m", c35_m, "modulus")->capture_default_str();
  c35->add_option("--cycle", c35_cycle, "copy cycle length")->capture_default_str();
  c35->add_option("--out", opts.out, "graph file (default stdout)");
  c35->add_option("--group-out", c35_group_out, "also export the group element table");

  // ---- bounds ----
  auto* bounds_cmd = add_sub(&app, "bounds", "partition bounds for a corona");
  std::string b_g1, b_g2;
  bool with_oracle = false;
  bounds_cmd->add_option("--g1", b_g1, "base graph")->required();
  bounds_cmd->add_option("--g2", b_g2, "copy graph")->required();
  bounds_cmd->add_flag("--oracle", with_oracle, "run the exhaustive partition oracle");
  bounds_cmd->add_option("--out", opts.out, "report file (default stdout)");

  // ---- oracle ----
  auto* oracle_cmd = add_sub(&app, "oracle", "eigensolve a graph directly");
  std::string o_g, o_kind = "A";
  bool o_charpoly = false, o_partition = false, o_dot = false;
  oracle_cmd->add_option("--g", o_g, "graph spec")->required();
  oracle_cmd->add_option("--kind", o_kind, "A|L|Q")->capture_default_str();
  oracle_cmd->add_flag("--charpoly", o_charpoly, "also emit the exact characteristic polynomial");
  oracle_cmd->add_flag("--partition", o_partition, "also run the partition oracle (n <= 20)");
  oracle_cmd->add_flag("--dot", o_dot, "emit the graph in DOT format instead");
  oracle_cmd->add_option("--out", opts.out, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    if (opts.tol <= 0 || opts.cluster_tol <= 0)
      throw std::invalid_argument("tolerances must be positive");
    if (nc->parsed()) {
      if (battery == 0 && (g1_spec.empty() || g2_spec.empty()))
        throw std::invalid_argument("spectra nc needs --g1 and --g2 (or --battery)");
      return spectra_nc(opts, matrix_kind_from_string(kind_str), g1_spec, g2_spec, verify,
                        battery, fastpath);
    }
    if (ec->parsed()) {
      if (g1_spec.empty() || g2_spec.empty())
        throw std::invalid_argument("spectra ec needs --g1 and --g2");
      const Graph g1 = parse_graph_spec(g1_spec);
      const Graph g2 = parse_graph_spec(g2_spec);
      const Spectrum s = edge_corona_l_spectrum(g1, g2, opts.cluster_tol);
      emit(spectrum_to_csv(s), opts.out);
      if (!verify) return 0;
      const VerificationRecord rec = verify_ec_spectrum(g1, g2, opts.tol, opts.cluster_tol);
      std::cout << verification_to_json(rec).dump() << "\n";
      return rec.pass ? 0 : 1;
    }
    if (coronal_cmd->parsed()) {
      RationalFunction cor;
      if (!coronal_shape.empty()) {
        std::vector<long> params;
        for (int v : parse_int_list(coronal_params)) params.push_back(v);
        cor = coronal_closed_form(coronal_shape, params);
      } else if (!coronal_graph.empty()) {
        cor = coronal_exact(
            matrix_of(parse_graph_spec(coronal_graph), matrix_kind_from_string(coronal_matrix)));
      } else {
        throw std::invalid_argument("coronal needs --g or --shape");
      }
      json j{{"unreduced", rational_to_json(cor)}, {"reduced", rational_to_json(cor.reduce())}};
      emit(j.dump(2) + "\n", opts.out);
      return 0;
    }
    if (cosp->parsed()) {
      const CospectralCertificate cert =
          generate_cospectral_pair(cospectral_mode_from_string(mode_str),
                                   parse_graph_spec(g_spec), parse_graph_spec(gprime_spec),
                                   parse_graph_spec(h_spec));
      emit(certificate_to_json(cert).dump(2) + "\n", opts.out);
      return cert.equal ? 0 : 1;
    }
    if (scalars->parsed()) {
      double value = 0;
      if (which == "f") value = expander_f(sc_n, sc_k, sc_x);
      else if (which == "g") value = expander_g(sc_n, sc_k, sc_x);
      else if (which == "delta") value = expander_delta(sc_n, sc_k, sc_x);
      else throw std::invalid_argument("scalar must be f, g, or delta");
      std::cout << format_double(value) << "\n";
      return 0;
    }
    if (family->parsed()) {
      const size_t dots = m_range.find("..");
      const int lo = std::stoi(m_range.substr(0, dots));
      const int hi = dots == std::string::npos ? lo : std::stoi(m_range.substr(dots + 2));
      if (eps_opt->count() > 0) family_eps = family_eps_value;
      const Sl2FamilyResult result = sl2_family(lo, hi, family_eps);
      emit(sl2_family_to_json(result).dump(2) + "\n", report_path);
      return result.pass ? 0 : 1;
    }
    if (c33->parsed()) {
      const Graph out = regularized_corona(parse_graph_spec(c33_g), parse_graph_spec(c33_h),
                                           parse_graph_spec(c33_u), parse_graph_spec(c33_w));
      emit(graph_to_json(out).dump(2) + "\n", opts.out);
      return 0;
    }
    if (c35->parsed()) {
      const CayleySpec base = sl2_cayley(c35_m);
      const Graph out = cayley_regularized_corona(base, cyclic_cayley(c35_cycle), base.gens0);
      if (!c35_group_out.empty())
        write_text_file(c35_group_out, cayley_spec_to_json(base).dump(2) + "\n");
      emit(graph_to_json(out).dump(2) + "\n", opts.out);
      return 0;
    }
    if (bounds_cmd->parsed()) {
      const BoundsReport rep =
          corona_bounds(parse_graph_spec(b_g1), parse_graph_spec(b_g2), with_oracle);
      emit(bounds_report_to_json(rep).dump(2) + "\n", opts.out);
      return rep.consistent ? 0 : 1;
    }
    if (oracle_cmd->parsed()) {
      const Graph g = parse_graph_spec(o_g);
      if (o_dot) {
        emit(graph_to_dot(g), opts.out);
        return 0;
      }
      const MatrixKind kind = matrix_kind_from_string(o_kind);
      std::string body =
          spectrum_to_csv(eigensolve_sym(matrix_of(g, kind).cast<double>()).spectrum(opts.cluster_tol));
      emit(body, opts.out);
      if (o_charpoly)
        std::cout << poly_to_json(char_poly_exact(matrix_of(g, kind))).dump() << "\n";
      if (o_partition) {
        const PartitionOracle part = brute_force_partition_oracle(g);
        const MoharCheck mohar = mohar_check(g);
        std::cout << json{{"bisection_width", part.bisection_width},
                          {"vertex_expansion", part.vertex_expansion.value()},
                          {"isoperimetric", part.isoperimetric.value()},
                          {"mohar_applicable", mohar.applicable},
                          {"mohar_holds", mohar.holds}}
                         .dump()
                  << "\n";
      }
      return 0;
    }
    throw std::invalid_argument("no subcommand given");
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
}

}  // namespace corona
