#include "deza/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deza/analysis.hpp"
#include "deza/constructions.hpp"
#include "deza/cyclotomic.hpp"
#include "deza/enumeration.hpp"
#include "deza/error.hpp"
#include "deza/finite_field.hpp"
#include "deza/graph_io.hpp"
#include "deza/serialization.hpp"
#include "deza/spectra.hpp"

namespace deza {

namespace {

struct GraphInput {
  std::string graph6;
  std::string edges;  // path to an edge-list file
};

void add_graph_options(CLI::App* cmd, GraphInput& input) {
  auto* g6 = cmd->add_option("--graph6", input.graph6, "graph6 string");
  auto* el = cmd->add_option("--edges", input.edges, "edge-list file (\"n m\" then m lines \"u v\")");
  g6->excludes(el);
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Standard input holds either raw graph6 or a JSON object with a "graph6" key,
// as printed by `construct` and `switch`.
Graph read_graph(const GraphInput& input, std::istream& in) {
  if (!input.graph6.empty()) return from_graph6(input.graph6);
  if (!input.edges.empty()) {
    std::ifstream file(input.edges);
    if (!file) throw DomainError("unreadable-input", "cannot open " + input.edges);
    return read_edge_list(file);
  }
  const std::string text = trim(std::string(std::istreambuf_iterator<char>(in), {}));
  if (text.empty()) throw DomainError("missing-input", "no graph given on the command line or standard input");
  if (text.front() == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw DomainError("malformed-input", std::string("standard input is not valid JSON: ") + e.what());
    }
    if (!j.contains("graph6") || !j["graph6"].is_string())
      throw DomainError("malformed-input", "JSON input has no \"graph6\" string");
    return from_graph6(j["graph6"].get<std::string>());
  }
  return from_graph6(text.substr(0, text.find_first_of("\r\n")));
}

Json graph_json(const Graph& g) {
  return Json{{"n", g.order()}, {"m", g.size()}, {"graph6", to_graph6(g)}};
}

const std::map<std::string, Family>& simple_families() {
  static const std::map<std::string, Family> families{
      {"paley", Family::Paley},
      {"lattice", Family::Lattice},
      {"triangular", Family::Triangular},
      {"lattice-c", Family::LatticeComplement},
      {"triangular-c", Family::TriangularComplement},
      {"hypercube-c", Family::HypercubeComplement},
      {"2ce", Family::TwoCliqueExtension},
      {"kx-ym", Family::CompleteTimesMatchings},
      {"lex", Family::ConferenceTimesCoclique},
  };
  return families;
}

Graph construct(const std::string& family, const std::vector<long long>& params, const std::string& involution) {
  if (family == "quasi-lattice" || family == "quasi-triangular") {
    if (params.size() != 1 || params[0] < 3)
      throw DomainError("invalid-parameter", family + " takes one parameter n");
    const auto n = static_cast<std::size_t>(params[0]);
    if (family == "quasi-triangular") return quasi_triangular(n);
    if (involution == "diagonal") return quasi_lattice(n, InvolutionKind::MainDiagonal);
    if (involution == "point") return quasi_lattice(n, InvolutionKind::PointReflection);
    throw DomainError("unknown-involution", "quasi-lattice involution must be diagonal or point");
  }
  const auto it = simple_families().find(family);
  if (it == simple_families().end()) throw DomainError("unknown-family", "unknown family \"" + family + "\"");
  return build(FamilySpec{it->second, params});
}

Json analyze_json(const Graph& g, bool details) {
  const DezaReport report = classify(g);
  Json j = report;
  if (!details) return j;
  if (report.kind == GraphKind::Deza) {
    const auto crit = complement_is_deza(g, report);
    j["complement_is_deza"] = crit.complement_is_deza;
    j["situations"] = crit.situations;
  }
  if (report.has_two_values()) {
    Json designs = Json::array();
    for (const auto& d : is_divisible_design(g, report))
      designs.push_back({{"classes", d.classes}, {"class_size", d.class_size},
                         {"lambda1", d.lambda1}, {"lambda2", d.lambda2}});
    j["divisible_design"] = std::move(designs);
  }
  return j;
}

Json spectrum_json(const Graph& g, bool with_children) {
  const Spectrum s = spectrum(g);
  Json j{{"n", g.order()}, {"spectrum", s}};
  if (with_children) {
    const DezaReport report = classify(g);
    if (!report.has_two_values())
      throw DomainError("not-deza", "children spectra need exactly two common-neighbour values");
    const auto [sa, sb] = children_spectra(report, s);
    j["child_a"] = sa;
    j["child_b"] = sb;
  }
  return j;
}

Json scheme_json(std::uint64_t q) {
  const PrimePower pp = prime_power(q);
  if (!pp) throw DomainError("not-prime-power", std::to_string(q) + " is not a prime power");
  const FiniteField field = make_field(pp.p, pp.h);
  const SchemeData data = scheme(field);
  Json j = data;
  j["lm_solutions"] = all_lm_solutions(q).size();
  j["predicates"] = {{"prime_and_q_minus_3_square", one_class_strict_predicate(q)},
                     {"prime_and_q_minus_12_square", two_class_strict_predicate(q)}};
  j["gamma1"] = classify(gamma(field, 1));
  j["gamma_bar3"] = classify(gamma_bar(field, 3));
  return j;
}

Json census_json(std::size_t n, bool strict_only, unsigned jobs, bool persist) {
  const auto census = enumerate_circulants(n, strict_only, jobs);
  Json j{{"n", n}, {"strict_only", strict_only}, {"classes", census.size()}, {"records", census}};
  if (persist) {
    const PinStatus status = pin_census(census, n, strict_only);
    j["pin"] = status == PinStatus::Written ? "written" : "matched";
    j["path"] = census_path(n, strict_only).string();
  }
  return j;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deza graph toolkit", "deza-tool"};
  app.require_subcommand(1);

  GraphInput analyze_in;
  bool details = false;
  auto* analyze = app.add_subcommand("analyze", "Classify a graph");
  add_graph_options(analyze, analyze_in);
  analyze->add_flag("--details", details, "Add the complement criterion and divisible-design partitions");

  std::string family, involution_name = "diagonal";
  std::vector<long long> params;
  bool raw = false;
  auto* construct_cmd = app.add_subcommand("construct", "Build a named graph");
  construct_cmd->add_option("family", family, "Family name")->required();
  construct_cmd->add_option("params", params, "Integer parameters");
  construct_cmd->add_option("--involution", involution_name, "quasi-lattice involution: diagonal or point");
  construct_cmd->add_flag("--raw", raw, "Print bare graph6 instead of JSON");

  GraphInput switch_in;
  std::string cycles;
  auto* switch_cmd = app.add_subcommand("switch", "Dual Seidel switching by an involution");
  add_graph_options(switch_cmd, switch_in);
  switch_cmd->add_option("--involution", cycles, "Cycle notation, e.g. \"(0 3)(1 2)\"")->required();

  GraphInput spectrum_in;
  bool with_children = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Adjacency spectrum");
  add_graph_options(spectrum_cmd, spectrum_in);
  spectrum_cmd->add_flag("--children", with_children, "Add the spectra of both children");

  std::uint64_t q = 0;
  auto* scheme_cmd = app.add_subcommand("scheme", "3-class cyclotomic scheme on GF(q)");
  scheme_cmd->add_option("--q", q, "Field order")->required();

  std::size_t n = 0;
  bool strict_only = false, no_persist = false;
  unsigned jobs = 1;
  auto* enumerate = app.add_subcommand("enumerate-circulants", "Census of Deza circulants on n vertices");
  enumerate->add_option("--n", n, "Order")->required();
  enumerate->add_flag("--strict-only", strict_only, "Keep strictly Deza graphs only");
  enumerate->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_flag("--no-persist", no_persist, "Skip writing or checking the stored census");

  std::uint64_t p = 0;
  unsigned verify_jobs = 1;
  auto* verify = app.add_subcommand("verify-2p", "Check strictly Deza circulants on 2p vertices");
  verify->add_option("--p", p, "Odd prime")->required();
  verify->add_option("--jobs", verify_jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, err, err);
    return 2;
  }

  try {
    Json result;
    if (*analyze) {
      result = analyze_json(read_graph(analyze_in, in), details);
    } else if (*construct_cmd) {
      const Graph g = construct(family, params, involution_name);
      if (raw) {
        out << to_graph6(g) << '\n';
        return 0;
      }
      result = graph_json(g);
      result["family"] = family;
      result["params"] = params;
    } else if (*switch_cmd) {
      const Graph g = read_graph(switch_in, in);
      result = graph_json(dual_seidel_switch(g, VertexPermutation::from_cycles(g.order(), cycles)));
    } else if (*spectrum_cmd) {
      result = spectrum_json(read_graph(spectrum_in, in), with_children);
    } else if (*scheme_cmd) {
      result = scheme_json(q);
    } else if (*enumerate) {
      result = census_json(n, strict_only, jobs, !no_persist);
    } else if (*verify) {
      const Verify2pResult v = verify_2p(p, verify_jobs);
      result = {{"p", v.p}, {"verified", v.verified}, {"classes", v.classes},
                {"params", v.params ? Json(*v.params) : Json(nullptr)}};
    }
    out << result.dump() << '\n';
    return 0;
  } catch (const DomainError& e) {
    out << Json{{"error", e.code()}, {"detail", e.what()}}.dump() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    out << Json{{"error", "io-error"}, {"detail", e.what()}}.dump() << '\n';
    return 1;
  }
}

}  // namespace deza
