#include "cordial/cli.hpp"

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "cordial/constructions.hpp"
#include "cordial/equivalence.hpp"
#include "cordial/graph_expr.hpp"
#include "cordial/io.hpp"
#include "cordial/search.hpp"

namespace cordial {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

std::string g_command_echo;  // the invocation, echoed into run reports

std::string set_to_string(const std::vector<i64>& xs) {
  std::string out = "{";
  for (size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
  return out + "}";
}

// Default label set for a structure bound to a graph of the given order:
// {1..n}, except the Fibonacci star indexes the sequence from 0.
std::vector<i64> default_labels(const ArithmeticStructure& s, int order) {
  std::vector<i64> out;
  i64 lo = s.star.kind == StarOp::Kind::FibSum ? 0 : 1;
  for (i64 v = lo; v < lo + order; ++v) out.push_back(v);
  return out;
}

void print_report(const EdgeLabelReport& report, bool per_edge) {
  if (per_edge) {
    std::cout << "u\tv\tstar\tresidue\tlabel\treason\n";
    for (const auto& d : report.per_edge)
      std::cout << d.u << "\t" << d.v << "\t" << d.star_value << "\t" << d.residue << "\t"
                << d.label << "\t" << to_string(d.reason) << "\n";
  }
  std::cout << "e0 = " << report.e0 << ", e1 = " << report.e1
            << ", cordial = " << (report.cordial ? "yes" : "no") << "\n";
}

nlohmann::json run_report(const ArithmeticStructure& s, const Graph& g,
                          const EdgeLabelReport& report, double elapsed_ms) {
  return {{"command", g_command_echo},
          {"structure", to_string(s)},
          {"graph", {{"order", g.order}, {"size", g.size()}}},
          {"report", report_to_json(report)},
          {"elapsed_ms", elapsed_ms}};
}

struct VerifyArgs {
  std::string graph_expr, labels_path, structure, combined_path, out_path;
  bool quiet = false;
};

int cmd_verify(const VerifyArgs& a) {
  Graph g;
  Labeling f;
  std::string structure_text = a.structure;
  if (!a.combined_path.empty()) {
    nlohmann::json j = load_json_file(a.combined_path);
    g = graph_from_json(j);
    f = labeling_from_json(j);
    if (structure_text.empty()) structure_text = j.at("structure").get<std::string>();
  } else {
    g = graph_from_expr(a.graph_expr);
    f = load_labeling(a.labels_path);
  }
  if (structure_text.empty()) {
    std::cerr << "verify: no structure given\n";
    return kExitError;
  }
  ArithmeticStructure s = parse_structure(structure_text);
  s = with_labels(std::move(s), f.values);

  auto start = std::chrono::steady_clock::now();
  EdgeLabelReport report = verify(g, f, s);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  print_report(report, !a.quiet);
  if (!a.out_path.empty())
    write_json_file(a.out_path, run_report(s, g, report, ms));
  return report.cordial ? kExitOk : kExitNegative;
}

struct SearchArgs {
  std::string graph_expr, structure, out_path;
  bool count = false;
  bool no_prune = false;
  int limit = 12;
};

int cmd_search(const SearchArgs& a) {
  Graph g = graph_from_expr(a.graph_expr);
  ArithmeticStructure s = parse_structure(a.structure);
  s = with_labels(std::move(s), default_labels(s, g.order));
  SearchOptions options;
  options.limit = a.limit;
  options.prune = !a.no_prune;

  SearchOutcome outcome = a.count ? count_cordial_labelings(g, s, options)
                                  : find_cordial_labeling(g, s, options);
  nlohmann::json out = {{"command", g_command_echo},
                        {"structure", to_string(s)},
                        {"graph", {{"order", g.order}, {"size", g.size()}}},
                        {"nodes", outcome.nodes_explored},
                        {"exhausted", outcome.exhausted}};
  int code = kExitNegative;
  if (a.count) {
    std::cout << "cordial labelings: " << *outcome.count << "\n";
    out["count"] = *outcome.count;
    code = *outcome.count > 0 ? kExitOk : kExitNegative;
  } else if (outcome.found) {
    std::cout << "found cordial labeling:\n";
    for (size_t v = 0; v < outcome.found->values.size(); ++v)
      std::cout << "  " << v << " -> " << outcome.found->values[v] << "\n";
    EdgeLabelReport report = verify(g, *outcome.found, s);
    print_report(report, false);
    out["found"] = labeling_to_json(*outcome.found)["labels"];
    out["report"] = report_to_json(report);
    code = kExitOk;
  } else {
    std::cout << "no cordial labeling exists (search exhausted)\n";
    out["found"] = nullptr;
    code = kExitNegative;
  }
  if (!a.out_path.empty()) write_json_file(a.out_path, out);
  return code;
}

struct ZetaArgs {
  std::string structure;
  bool check = false;
};

int cmd_zeta(const ZetaArgs& a) {
  ArithmeticStructure s = parse_structure(a.structure);
  auto classes = residue_classes(s);
  std::cout << "structure: " << to_string(s) << "\n";
  std::cout << "phi(" << s.eta << ") = " << euler_phi(s.eta) << "\n";
  std::cout << "A0 = " << set_to_string(classes.a0) << "\n";
  std::cout << "A1 = " << set_to_string(classes.a1) << "\n";
  std::cout << "NC = " << set_to_string(classes.nc) << "\n";
  if (!a.check) return kExitOk;
  bool congruence = check_prop_congruence(s);
  bool balance = check_prop_balance(s);
  bool multiplicative = check_prop_multiplicative(s);
  std::cout << "congruence: " << (congruence ? "pass" : "fail") << "\n";
  std::cout << "balance: " << (balance ? "pass" : "fail") << "\n";
  std::cout << "multiplicative: " << (multiplicative ? "pass" : "fail") << "\n";
  return congruence && balance && multiplicative ? kExitOk : kExitNegative;
}

struct EquivArgs {
  i64 eta = 0;
  int m = 1;
  int variant = -1;
  std::string zeta1, zeta2, emit_psi;
  bool check = false;
};

int cmd_equiv(const EquivArgs& a) {
  std::vector<i64> labels;
  for (i64 v = 1; v <= a.eta * a.m + a.variant; ++v) labels.push_back(v);
  ArithmeticStructure s1 =
      make_structure(a.eta, parse_zeta_spec(a.zeta1), StarOp::product(), labels);
  ArithmeticStructure s2 =
      make_structure(a.eta, parse_zeta_spec(a.zeta2), StarOp::product(), labels);
  EquivalenceWitness w = build_psi(a.eta, a.m, a.variant, s1, s2);
  std::cout << "psi built on S = {1.." << labels.back() << "} (" << w.psi.size()
            << " entries)\n";
  if (!a.emit_psi.empty()) write_json_file(a.emit_psi, psi_to_json(w));
  if (a.check) {
    auto result = verify_equivalence(s1, s2, w);
    if (result.pass) {
      std::cout << "equivalence: pass\n";
    } else {
      std::cout << "equivalence: fail on pair (" << result.counterexample->first << ", "
                << result.counterexample->second << "): " << result.detail << "\n";
      return kExitNegative;
    }
  }
  return kExitOk;
}

struct ConstructArgs {
  std::string family, g_expr, h_expr, out_path;
  i64 p = 0;
  i64 eta = 0;
  int n = 0, m = 1, c = 1;
};

int cmd_construct(const ConstructArgs& a) {
  ConstructionResult result;
  if (a.family == "star-jacobi") {
    i64 eta = a.eta ? a.eta : a.p;
    result = label_star_jacobi(eta, a.m, a.c);
  } else if (a.family == "ladder") {
    result = label_ladder(a.p);
  } else if (a.family == "snake") {
    result = label_snake(a.n, a.p);
  } else if (a.family == "corona-path") {
    result = label_corona_path(graph_from_expr(a.g_expr), a.p);
  } else if (a.family == "tensor-complete") {
    result = label_tensor_complete(graph_from_expr(a.g_expr), a.p);
  } else if (a.family == "join-kayak") {
    result = label_join_kayak(a.p);
  } else if (a.family == "join-path-cycle") {
    result = label_join_path_cycle(a.p);
  } else if (a.family == "corona-k1") {
    result = label_corona_k1(graph_from_expr(a.g_expr), a.p);
  } else if (a.family == "corona-gh") {
    result = label_corona_gh(graph_from_expr(a.g_expr), graph_from_expr(a.h_expr), a.p, a.m);
  } else {
    std::cerr << "construct: unknown family '" << a.family << "'\n";
    return kExitError;
  }

  auto start = std::chrono::steady_clock::now();
  EdgeLabelReport report = verify(result.graph, result.labeling, result.structure);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  std::cout << "family: " << a.family << "\n";
  std::cout << "graph: order " << result.graph.order << ", size " << result.graph.size() << "\n";
  std::cout << "structure: " << to_string(result.structure) << "\n";
  if (result.predicted)
    std::cout << "predicted: e0 = " << result.predicted->first
              << ", e1 = " << result.predicted->second << "\n";
  print_report(report, false);

  if (!a.out_path.empty()) {
    nlohmann::json out = run_report(result.structure, result.graph, report, ms);
    out["family"] = a.family;
    out["provenance"] = result.provenance;
    out["graph"] = graph_to_json(result.graph);
    out["labels"] = labeling_to_json(result.labeling)["labels"];
    if (result.predicted)
      out["predicted"] = {{"e0", result.predicted->first}, {"e1", result.predicted->second}};
    write_json_file(a.out_path, out);
  }
  return report.cordial ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"arithmetic cordial labelings: construct, verify, search, transfer"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "verify a labeling against a structure");
  verify_cmd->add_option("--graph-expr", verify_args.graph_expr, "graph expression");
  verify_cmd->add_option("--labels", verify_args.labels_path, "labeling JSON file");
  verify_cmd->add_option("--structure", verify_args.structure, "structure spec string");
  verify_cmd->add_option("--in", verify_args.combined_path,
                         "combined JSON (graph + labels + structure), e.g. construct output");
  verify_cmd->add_option("--out", verify_args.out_path, "write the run report as JSON");
  verify_cmd->add_flag("--quiet", verify_args.quiet, "suppress the per-edge table");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "find or count cordial labelings");
  search_cmd->add_option("--graph-expr", search_args.graph_expr, "graph expression")->required();
  search_cmd->add_option("--structure", search_args.structure, "structure spec string")
      ->required();
  search_cmd->add_flag("--count", search_args.count, "count all cordial bijections");
  search_cmd->add_flag("--no-prune", search_args.no_prune, "disable branch pruning");
  search_cmd->add_option("--limit", search_args.limit, "maximum graph order for find");
  search_cmd->add_option("--out", search_args.out_path, "write the outcome as JSON");

  ZetaArgs zeta_args;
  auto* zeta_cmd = app.add_subcommand("zeta", "print residue classes of a structure");
  zeta_cmd->add_option("--structure", zeta_args.structure, "structure spec string")->required();
  zeta_cmd->add_flag("--table", "print the class table (always on)");
  zeta_cmd->add_flag("--check", zeta_args.check, "run the property checks");

  EquivArgs equiv_args;
  auto* equiv_cmd = app.add_subcommand("equiv", "build and check a structure equivalence");
  equiv_cmd->add_option("--eta", equiv_args.eta, "modulus")->required();
  equiv_cmd->add_option("--m", equiv_args.m, "number of blocks");
  equiv_cmd->add_option("--variant", equiv_args.variant, "-1 for S={1..em-1}, 0 for S={1..em}");
  equiv_cmd->add_option("--zeta1", equiv_args.zeta1, "first zeta spec")->required();
  equiv_cmd->add_option("--zeta2", equiv_args.zeta2, "second zeta spec")->required();
  equiv_cmd->add_option("--emit-psi", equiv_args.emit_psi, "write psi as JSON");
  equiv_cmd->add_flag("--check", equiv_args.check, "verify the witness exhaustively");

  ConstructArgs construct_args;
  auto* construct_cmd = app.add_subcommand("construct", "run a constructive labeler");
  construct_cmd->set_help_flag("--help", "print help");  // frees -h for the --h operand
  construct_cmd->add_option("--family", construct_args.family, "construction family")
      ->required();
  construct_cmd->add_option("--p", construct_args.p, "odd prime parameter");
  construct_cmd->add_option("--eta", construct_args.eta, "modulus (star-jacobi)");
  construct_cmd->add_option("--n", construct_args.n, "count parameter");
  construct_cmd->add_option("--m", construct_args.m, "block / size parameter");
  construct_cmd->add_option("--c", construct_args.c, "center multiplier (star-jacobi)");
  construct_cmd->add_option("--g", construct_args.g_expr, "graph expression for G");
  construct_cmd->add_option("--h", construct_args.h_expr, "graph expression for H");
  construct_cmd->add_option("--out", construct_args.out_path, "write graph+labels+report JSON");

  g_command_echo = "cordial";
  for (const auto& arg : args) g_command_echo += " " + arg;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(verify_args);
    if (search_cmd->parsed()) return cmd_search(search_args);
    if (zeta_cmd->parsed()) return cmd_zeta(zeta_args);
    if (equiv_cmd->parsed()) return cmd_equiv(equiv_args);
    if (construct_cmd->parsed()) return cmd_construct(construct_args);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  } catch (const LimitExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace cordial
