// Command-line front end: instance generation, the gadget reduction, exact
// counting, the counting-identity check, probe-point certification, and
// regime scans. Exit codes: 0 pass/success, 1 verification failure,
// 2 usage error, 3 resource cap, 4 precision exhaustion, 5 parse error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperis/counting.hpp"
#include "hyperis/errors.hpp"
#include "hyperis/instances.hpp"
#include "hyperis/io.hpp"
#include "hyperis/recursion.hpp"
#include "hyperis/reduction.hpp"
#include "hyperis/spin.hpp"

namespace {

using json = nlohmann::ordered_json;

enum ExitCode {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceCap = 3,
  kPrecisionExhausted = 4,
  kParseError = 5,
};

// Shortest round-trip representation, locale-independent.
std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_optional(const std::optional<double>& v,
                            const char* missing = "-") {
  return v ? format_double(*v) : missing;
}

json json_optional(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string sigma_string(std::uint32_t bits, int n) {
  std::string s(n, '0');
  for (int v = 0; v < n; ++v) {
    if ((bits >> v) & 1) s[v] = '1';
  }
  return s;
}

void write_text_or_file(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw hyperis::ParseError("cannot open " + path + " for writing");
  out << content;
}

struct CommonFlags {
  std::string format = "text";
  unsigned precision_bits = 256;
  double tol = 1e-12;
  int max_vertices = hyperis::kDefaultCountCap;
  int threads = 1;
};

hyperis::SearchOptions search_options(const CommonFlags& flags) {
  hyperis::SearchOptions opts;
  opts.precision_bits = flags.precision_bits;
  opts.max_precision_bits = std::max(flags.precision_bits * 16, 4096u);
  opts.tol = flags.tol;
  return opts;
}

// ---------------------------------------------------------------------------
// gen

int run_gen(const std::string& family, int n, int degree, std::uint64_t seed,
            const std::string& output) {
  hyperis::Graph g;
  if (family == "cycle") {
    g = hyperis::gen_cycle(n);
  } else if (family == "complete") {
    g = hyperis::gen_complete(n);
  } else if (family == "random-regular") {
    g = hyperis::gen_random_regular(n, degree, seed);
  } else {
    throw hyperis::InvalidParameters("gen: unknown family " + family);
  }
  std::ostringstream out;
  hyperis::write_graph(out, g);
  write_text_or_file(output, out.str());
  return kOk;
}

// ---------------------------------------------------------------------------
// reduce

int run_reduce(const std::string& graph_path, int k, int b,
               const std::string& output, const std::string& map_path) {
  const hyperis::Graph g = hyperis::read_graph_file(graph_path);
  const hyperis::Gadget gadget = hyperis::build_gadget(g, {k, b});

  std::ostringstream out;
  hyperis::write_hypergraph(out, gadget.hypergraph);
  write_text_or_file(output, out.str());
  if (!map_path.empty()) {
    std::ostringstream map_out;
    hyperis::write_gadget_map(map_out, gadget.map);
    write_text_or_file(map_path, map_out.str());
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// count

int run_count(const std::string& hypergraph_path, const CommonFlags& flags) {
  const hyperis::Hypergraph h = hyperis::read_hypergraph_file(hypergraph_path);
  const mpz_class count = hyperis::count_independent_sets(h, flags.max_vertices);

  std::ostringstream out;
  if (flags.format == "json") {
    json j;
    j["command"] = "count";
    j["vertices"] = h.vertex_count();
    j["hyperedges"] = h.edge_count();
    j["max_degree"] = hyperis::max_degree(h);
    j["overlap"] = hyperis::overlap(h);
    j["independent_sets"] = count.get_str();
    j["max_vertices"] = flags.max_vertices;
    out << j.dump() << '\n';
  } else {
    out << "vertices=" << h.vertex_count() << " hyperedges=" << h.edge_count()
        << " max_degree=" << hyperis::max_degree(h)
        << " overlap=" << hyperis::overlap(h) << '\n'
        << "independent_sets=" << count.get_str() << '\n';
  }
  std::cout << out.str();
  return kOk;
}

// ---------------------------------------------------------------------------
// z

int run_z(const std::string& graph_path, int k, int b,
          const CommonFlags& flags) {
  const hyperis::Graph g = hyperis::read_graph_file(graph_path);
  const hyperis::SpinParams params = hyperis::paper_params(k, b);
  const mpq_class z =
      hyperis::partition_function(g, params, flags.max_vertices);

  std::ostringstream out;
  if (flags.format == "json") {
    json j;
    j["command"] = "z";
    j["k"] = k;
    j["b"] = b;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["beta"] = params.beta.get_str();
    j["gamma"] = params.gamma.get_str();
    j["lambda"] = params.lambda.get_str();
    j["partition_function"] = z.get_str();
    out << j.dump() << '\n';
  } else {
    out << "vertices=" << g.vertex_count() << " edges=" << g.edge_count()
        << " beta=" << params.beta.get_str()
        << " gamma=" << params.gamma.get_str()
        << " lambda=" << params.lambda.get_str() << '\n'
        << "Z=" << z.get_str() << '\n';
  }
  std::cout << out.str();
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const std::string& graph_path, int k, int b,
               const CommonFlags& flags, bool show_table) {
  const hyperis::Graph g = hyperis::read_graph_file(graph_path);
  hyperis::VerifyOptions options;
  options.max_vertices = flags.max_vertices;
  options.threads = flags.threads;
  const hyperis::IdentityReport report =
      hyperis::verify_identity(g, {k, b}, options);
  const hyperis::Gadget gadget = hyperis::build_gadget(g, {k, b});
  const char* route = report.route == hyperis::VerifyRoute::Enumeration
                          ? "enumeration"
                          : "per-class-count";

  std::ostringstream out;
  if (flags.format == "json") {
    json j;
    j["command"] = "verify";
    j["k"] = k;
    j["b"] = b;
    j["graph"] = {{"vertices", g.vertex_count()},
                  {"edges", g.edge_count()},
                  {"regular", report.regular}};
    if (report.regular) j["graph"]["degree"] = report.degree;
    j["gadget"] = {{"vertices", gadget.hypergraph.vertex_count()},
                   {"hyperedges", gadget.hypergraph.edge_count()},
                   {"max_degree", hyperis::max_degree(gadget.hypergraph)},
                   {"overlap", hyperis::overlap(gadget.hypergraph)},
                   {"uniform", hyperis::is_k_uniform(gadget.hypergraph, k)}};
    j["lhs"] = report.independent_sets.get_str();
    j["z"] = report.partition_value.get_str();
    j["rhs"] = report.scaled_partition.get_str();
    j["route"] = route;
    j["counts_match"] = report.counts_match;
    j["classes_match"] = report.classes_match;
    j["class_total_matches"] = report.class_total_matches;
    j["pass"] = report.pass;
    if (show_table && report.classes_materialized) {
      json rows = json::array();
      for (const auto& row : report.classes) {
        rows.push_back({{"sigma", sigma_string(row.sigma_bits, g.vertex_count())},
                        {"observed", row.observed.get_str()},
                        {"expected", row.expected.get_str()}});
      }
      j["classes"] = std::move(rows);
    }
    out << j.dump() << '\n';
  } else {
    out << "graph: vertices=" << g.vertex_count()
        << " edges=" << g.edge_count()
        << " regular=" << (report.regular ? "yes" : "no");
    if (report.regular) out << " degree=" << report.degree;
    out << '\n';
    if (!report.regular) {
      out << "note: input is not regular; counting identity still applies, "
             "regime claims do not\n";
    }
    out << "gadget: vertices=" << gadget.hypergraph.vertex_count()
        << " hyperedges=" << gadget.hypergraph.edge_count()
        << " max_degree=" << hyperis::max_degree(gadget.hypergraph)
        << " overlap=" << hyperis::overlap(gadget.hypergraph) << '\n';
    out << "lhs=" << report.independent_sets.get_str() << '\n';
    out << "rhs=" << report.scaled_partition.get_str()
        << " (Z=" << report.partition_value.get_str() << ", scale=2^"
        << g.edge_count() * (k - 2 * b) << ")\n";
    out << "classes: route=" << route
        << " total_matches=" << (report.class_total_matches ? "yes" : "no")
        << " all_match=" << (report.classes_match ? "yes" : "no") << '\n';
    if (show_table && report.classes_materialized) {
      for (const auto& row : report.classes) {
        out << "  sigma=" << sigma_string(row.sigma_bits, g.vertex_count())
            << " observed=" << row.observed.get_str()
            << " expected=" << row.expected.get_str() << '\n';
      }
    }
    out << (report.pass ? "PASS" : "FAIL") << '\n';
  }
  std::cout << out.str();
  return report.pass ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// lemma

int run_lemma(int k_max, const CommonFlags& flags) {
  if (k_max < 2) {
    throw hyperis::InvalidParameters("lemma: k-max must be at least 2");
  }
  const hyperis::SearchOptions opts = search_options(flags);

  struct Row {
    hyperis::ProbeReport probe;
    int k, b;
  };
  std::vector<Row> rows;
  bool all_pass = true;
  for (int k = 2; k <= k_max; ++k) {
    for (int b = 1; 2 * b <= k; ++b) {
      Row row{hyperis::certify_probe(k, b, opts), k, b};
      all_pass = all_pass && row.probe.pass;
      rows.push_back(row);
    }
  }

  std::ostringstream out;
  if (flags.format == "json") {
    json j;
    j["command"] = "lemma";
    j["k_max"] = k_max;
    json jrows = json::array();
    for (const auto& row : rows) {
      jrows.push_back({{"k", row.k},
                       {"b", row.b},
                       {"d", row.probe.depth},
                       {"probe", row.probe.probe},
                       {"two_step_gap", row.probe.two_step_value},
                       {"one_step_gap", row.probe.one_step_value},
                       {"pass", row.probe.pass},
                       {"precision_bits", row.probe.precision_bits}});
    }
    j["rows"] = std::move(jrows);
    j["all_pass"] = all_pass;
    out << j.dump() << '\n';
  } else if (flags.format == "csv") {
    out << "k,b,d,probe,two_step_gap,one_step_gap,pass,precision_bits\n";
    for (const auto& row : rows) {
      out << row.k << ',' << row.b << ',' << row.probe.depth << ','
          << row.probe.probe << ',' << format_double(row.probe.two_step_value)
          << ',' << format_double(row.probe.one_step_value) << ','
          << (row.probe.pass ? "true" : "false") << ','
          << row.probe.precision_bits << '\n';
    }
  } else {
    for (const auto& row : rows) {
      out << "k=" << row.k << " b=" << row.b << " d=" << row.probe.depth
          << " probe=" << row.probe.probe
          << " two_step_gap=" << format_double(row.probe.two_step_value)
          << " one_step_gap=" << format_double(row.probe.one_step_value)
          << (row.probe.pass ? " PASS" : " FAIL") << '\n';
    }
    out << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << '\n';
  }
  std::cout << out.str();
  return all_pass ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// scan

int run_scan(int k_min, int k_max, int b, long delta_min, long delta_max,
             const CommonFlags& flags) {
  const std::vector<hyperis::ScanRow> rows =
      hyperis::regime_scan(k_min, k_max, b, delta_min, delta_max,
                           search_options(flags));

  std::ostringstream out;
  if (flags.format == "json") {
    json j;
    j["command"] = "scan";
    json jrows = json::array();
    for (const auto& row : rows) {
      jrows.push_back({{"k", row.k},
                       {"b", row.b},
                       {"delta", row.delta},
                       {"d", row.d},
                       {"regime", hyperis::to_string(row.regime)},
                       {"q_minus", json_optional(row.q_minus)},
                       {"q_times", json_optional(row.q_times)},
                       {"q_plus", json_optional(row.q_plus)},
                       {"threshold_paper", row.threshold_paper},
                       {"threshold_hypertree", row.threshold_hypertree},
                       {"precision_bits", row.precision_bits}});
    }
    j["rows"] = std::move(jrows);
    out << j.dump() << '\n';
  } else if (flags.format == "csv") {
    out << "k,b,delta,d,regime,q_minus,q_times,q_plus,threshold_paper,"
           "threshold_hypertree,precision_bits\n";
    for (const auto& row : rows) {
      out << row.k << ',' << row.b << ',' << row.delta << ',' << row.d << ','
          << hyperis::to_string(row.regime) << ','
          << format_optional(row.q_minus, "") << ','
          << format_optional(row.q_times, "") << ','
          << format_optional(row.q_plus, "") << ',' << row.threshold_paper
          << ',' << format_double(row.threshold_hypertree) << ','
          << row.precision_bits << '\n';
    }
  } else {
    for (const auto& row : rows) {
      out << "k=" << row.k << " b=" << row.b << " delta=" << row.delta
          << " d=" << row.d << " regime=" << hyperis::to_string(row.regime)
          << " q_minus=" << format_optional(row.q_minus)
          << " q_times=" << format_optional(row.q_times)
          << " q_plus=" << format_optional(row.q_plus)
          << " threshold_paper=" << row.threshold_paper
          << " threshold_hypertree=" << format_double(row.threshold_hypertree)
          << " precision_bits=" << row.precision_bits << '\n';
    }
  }
  std::cout << out.str();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Gadget reduction from two-spin systems to hypergraph independent "
      "sets: exact counting, identity verification, and certified analysis "
      "of the tree recursion."};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph instance");
  std::string gen_family = "cycle";
  int gen_n = 3;
  int gen_degree = 3;
  std::uint64_t gen_seed = 0;
  std::string gen_output;
  gen->add_option("--family", gen_family,
                  "cycle, complete, or random-regular")
      ->check(CLI::IsMember({"cycle", "complete", "random-regular"}));
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--degree", gen_degree, "degree for random-regular");
  gen->add_option("--seed", gen_seed, "seed for random-regular");
  gen->add_option("--output,-o", gen_output, "output path (default stdout)");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Build the gadget hypergraph");
  std::string reduce_graph, reduce_output, reduce_map;
  int reduce_k = 0, reduce_b = 0;
  reduce->add_option("--graph", reduce_graph, "input graph file")->required();
  reduce->add_option("--k", reduce_k, "hyperedge size")->required();
  reduce->add_option("--b", reduce_b, "block size / overlap bound")->required();
  reduce->add_option("--output,-o", reduce_output,
                     "hypergraph output path (default stdout)");
  reduce->add_option("--map", reduce_map, "sidecar block/filler map path");

  // count
  auto* count = app.add_subcommand("count", "Count independent sets exactly");
  std::string count_hypergraph;
  CommonFlags count_flags;
  count->add_option("--hypergraph", count_hypergraph, "input hypergraph file")
      ->required();
  count->add_option("--max-vertices", count_flags.max_vertices,
                    "exhaustive-search cap");
  count->add_option("--format", count_flags.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // z
  auto* zcmd = app.add_subcommand(
      "z", "Exact partition function of the reduction's spin system");
  std::string z_graph;
  int z_k = 0, z_b = 0;
  CommonFlags z_flags;
  z_flags.max_vertices = hyperis::kDefaultPartitionCap;
  zcmd->add_option("--graph", z_graph, "input graph file")->required();
  zcmd->add_option("--k", z_k, "hyperedge size")->required();
  zcmd->add_option("--b", z_b, "block size")->required();
  zcmd->add_option("--max-vertices", z_flags.max_vertices,
                   "exhaustive-sum cap");
  zcmd->add_option("--format", z_flags.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Check the counting identity and all class sizes exactly");
  std::string verify_graph;
  int verify_k = 0, verify_b = 0;
  bool verify_table = false;
  CommonFlags verify_flags;
  verify->add_option("--graph", verify_graph, "input graph file")->required();
  verify->add_option("--k", verify_k, "hyperedge size")->required();
  verify->add_option("--b", verify_b, "block size")->required();
  verify->add_option("--max-vertices", verify_flags.max_vertices,
                     "gadget-size cap for counting");
  verify->add_option("--threads", verify_flags.threads,
                     "worker cap for per-class counts");
  verify->add_flag("--table", verify_table, "print the per-class table");
  verify->add_option("--format", verify_flags.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // lemma
  auto* lemma = app.add_subcommand(
      "lemma", "Certify the probe-point signs of the tree recursion for all "
               "k up to k-max");
  int lemma_k_max = 16;
  CommonFlags lemma_flags;
  lemma->add_option("--k-max", lemma_k_max, "largest hyperedge size");
  lemma->add_option("--precision-bits", lemma_flags.precision_bits,
                    "starting working precision");
  lemma->add_option("--format", lemma_flags.format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  // scan
  auto* scan = app.add_subcommand(
      "scan", "Classify uniqueness of the recursion over (k, delta) ranges");
  int scan_k_min = 2, scan_k_max = 2, scan_b = 1;
  long scan_delta_min = 0, scan_delta_max = -1, scan_delta = 0;
  CommonFlags scan_flags;
  scan->add_option("--k-min", scan_k_min, "smallest k");
  scan->add_option("--k-max", scan_k_max, "largest k");
  scan->add_option("--b", scan_b, "overlap bound");
  scan->add_option("--delta-min", scan_delta_min, "smallest degree bound");
  scan->add_option("--delta-max", scan_delta_max, "largest degree bound");
  auto* delta_opt =
      scan->add_option("--delta", scan_delta, "single degree bound shorthand");
  scan->add_option("--precision-bits", scan_flags.precision_bits,
                   "starting working precision");
  scan->add_option("--tol", scan_flags.tol, "root location tolerance");
  scan->add_option("--format", scan_flags.format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsageError;
  }

  try {
    if (gen->parsed()) {
      return run_gen(gen_family, gen_n, gen_degree, gen_seed, gen_output);
    }
    if (reduce->parsed()) {
      return run_reduce(reduce_graph, reduce_k, reduce_b, reduce_output,
                        reduce_map);
    }
    if (count->parsed()) return run_count(count_hypergraph, count_flags);
    if (zcmd->parsed()) return run_z(z_graph, z_k, z_b, z_flags);
    if (verify->parsed()) {
      return run_verify(verify_graph, verify_k, verify_b, verify_flags,
                        verify_table);
    }
    if (lemma->parsed()) return run_lemma(lemma_k_max, lemma_flags);
    if (scan->parsed()) {
      if (delta_opt->count() > 0) {
        scan_delta_min = scan_delta;
        scan_delta_max = scan_delta;
      }
      return run_scan(scan_k_min, scan_k_max, scan_b, scan_delta_min,
                      scan_delta_max, scan_flags);
    }
  } catch (const hyperis::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const hyperis::InvalidParameters& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kUsageError;
  } catch (const hyperis::InstanceTooLarge& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const hyperis::GenerationFailure& e) {
    std::cerr << "generation failure: " << e.what() << '\n';
    return kResourceCap;
  } catch (const hyperis::PrecisionExhausted& e) {
    std::cerr << "precision exhausted: " << e.what() << '\n';
    return kPrecisionExhausted;
  } catch (const hyperis::BracketFailure& e) {
    std::cerr << "bracket failure: " << e.what() << '\n';
    return kPrecisionExhausted;
  }
  return kUsageError;
}
