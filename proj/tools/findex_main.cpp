// Command-line front end: family generation, operation application, index
// and closed-form evaluation, the randomized identity suite, and the bundled
// two-route example table.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "findex/edge_list.hpp"
#include "findex/formulas.hpp"
#include "findex/generators.hpp"
#include "findex/graph.hpp"
#include "findex/operations.hpp"
#include "findex/paper_table.hpp"
#include "findex/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // verification failure or table mismatch
constexpr int kExitUsage = 2;    // usage or parse errors

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_document(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

findex::Graph load_graph(const std::string& path) {
  return findex::parse_edge_list(read_document(path));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot open output file: " + out_path);
  out << text;
}

std::vector<std::size_t> parse_index_list(const std::string& text, const char* what) {
  std::vector<std::size_t> values;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t consumed = 0;
      values.push_back(std::stoull(token, &consumed));
      if (consumed != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": bad index '" + token + "'");
    }
  }
  if (values.empty()) throw UsageError(std::string(what) + ": empty list");
  return values;
}

findex::GraphSummary parse_summary(const std::string& text) {
  std::stringstream in(text);
  std::string token;
  std::vector<std::int64_t> fields;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t consumed = 0;
      fields.push_back(std::stoll(token, &consumed));
      if (consumed != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw UsageError("--s: bad summary field '" + token + "'");
    }
  }
  if (fields.size() != 4) throw UsageError("--s expects n,m,m1,f");
  return findex::GraphSummary{fields[0], fields[1], fields[2], fields[3]};
}

struct GenArgs {
  std::string family;
  std::vector<std::int64_t> params;
  std::string out;
};

struct OpArgs {
  std::string name;
  std::vector<std::string> files;
  std::optional<std::size_t> root1, root2;
  std::string roots_list, subset_list;
  std::optional<std::int64_t> thorns;
  std::string out;
};

struct IndexArgs {
  std::string file = "-";
};

struct FormulaArgs {
  std::string identity;
  std::vector<std::string> rest;  // family name + parameters
  std::vector<std::string> summaries;
  std::vector<std::int64_t> f_values;
  std::optional<std::int64_t> copies, thorns, root_degree, d1, d2;
  std::optional<std::int64_t> u_size, du_sum, du2_sum;
};

struct VerifyArgs {
  std::int64_t trials = 200;
  std::size_t max_n = 8;
  std::uint64_t seed = 0;
  bool disconnected_ok = false;
};

int run_gen(const GenArgs& args) {
  const auto family = findex::family_from_name(args.family);
  if (!family) throw UsageError("unknown family: " + args.family);
  const findex::Graph g = findex::make_family({*family, args.params});
  emit(findex::write_edge_list(g), args.out);
  return kExitOk;
}

void require_files(const OpArgs& args, std::size_t count) {
  if (args.files.size() != count)
    throw UsageError("op " + args.name + ": expected " + std::to_string(count) +
                     " graph file(s), got " + std::to_string(args.files.size()));
}

findex::Graph apply_operation(const OpArgs& args) {
  using namespace findex;
  std::vector<Graph> graphs;
  for (const std::string& file : args.files) graphs.push_back(load_graph(file));
  if (graphs.empty()) throw UsageError("op " + args.name + ": needs at least one graph file");

  if (args.name == "union") return disjoint_union(graphs);
  if (args.name == "join") return join(graphs);
  if (args.name == "cartesian") return cartesian_product(graphs);
  if (args.name == "composition") {
    require_files(args, 2);
    return composition(graphs[0], graphs[1]);
  }
  if (args.name == "tensor") {
    require_files(args, 2);
    return tensor_product(graphs[0], graphs[1]);
  }
  if (args.name == "strong") {
    require_files(args, 2);
    return strong_product(graphs[0], graphs[1]);
  }
  if (args.name == "corona") {
    require_files(args, 2);
    return corona(graphs[0], graphs[1]);
  }
  if (args.name == "thorn") {
    require_files(args, 1);
    if (!args.thorns) throw UsageError("op thorn: needs --thorns");
    return t_thorn(graphs[0], *args.thorns);
  }
  if (args.name == "hierarchical") {
    require_files(args, 2);
    if (args.subset_list.empty()) throw UsageError("op hierarchical: needs --subset");
    return hierarchical_product(graphs[0], graphs[1],
                                VertexSubset(parse_index_list(args.subset_list, "--subset")));
  }
  if (args.name == "cluster") {
    require_files(args, 2);
    if (!args.root2) throw UsageError("op cluster: needs --root2");
    return cluster_product(graphs[0], RootedGraph(graphs[1], *args.root2));
  }
  if (args.name == "disjunction") {
    require_files(args, 2);
    return disjunction(graphs[0], graphs[1]);
  }
  if (args.name == "symdiff") {
    require_files(args, 2);
    return symmetric_difference(graphs[0], graphs[1]);
  }
  if (args.name == "splice" || args.name == "link") {
    require_files(args, 2);
    if (!args.root1 || !args.root2)
      throw UsageError("op " + args.name + ": needs --root1 and --root2");
    const RootedGraph r1(graphs[0], *args.root1), r2(graphs[1], *args.root2);
    return args.name == "splice" ? splice(r1, r2) : link(r1, r2);
  }
  if (args.name == "bridge") {
    if (args.roots_list.empty()) throw UsageError("op bridge: needs --roots");
    const auto roots = parse_index_list(args.roots_list, "--roots");
    if (roots.size() != graphs.size())
      throw UsageError("op bridge: --roots must list one root per graph file");
    std::vector<RootedGraph> blocks;
    for (std::size_t i = 0; i < graphs.size(); ++i) blocks.emplace_back(graphs[i], roots[i]);
    return bridge(blocks);
  }
  if (args.name == "bottleneck") {
    require_files(args, 1);
    return corona(complete(2), graphs[0]);
  }
  throw UsageError("unknown operation: " + args.name);
}

int run_index(const IndexArgs& args) {
  const findex::Graph g = load_graph(args.file);
  std::cout << "F=" << findex::f_index(g) << " M1=" << findex::first_zagreb(g)
            << " M2=" << findex::second_zagreb(g) << '\n';
  return kExitOk;
}

int run_formula(const FormulaArgs& args) {
  using namespace findex;
  std::vector<GraphSummary> summaries;
  for (const std::string& text : args.summaries) summaries.push_back(parse_summary(text));
  std::vector<CheckedInt> fs;
  for (std::int64_t v : args.f_values) fs.push_back(CheckedInt(v));

  const auto need_summaries = [&](std::size_t count) {
    if (summaries.size() != count)
      throw UsageError("formula " + args.identity + ": expected " + std::to_string(count) +
                       " --s summaries, got " + std::to_string(summaries.size()));
  };
  const auto need_fs = [&](std::size_t count) {
    if (fs.size() != count)
      throw UsageError("formula " + args.identity + ": expected " + std::to_string(count) +
                       " --f values, got " + std::to_string(fs.size()));
  };
  if (args.identity != "family" && !args.rest.empty())
    throw UsageError("formula " + args.identity + ": unexpected trailing arguments");

  CheckedInt value = 0;
  if (args.identity == "union") {
    if (fs.empty()) throw UsageError("formula union: needs --f values");
    value = f_union(fs);
  } else if (args.identity == "join") {
    if (summaries.empty()) throw UsageError("formula join: needs --s summaries");
    value = f_join(summaries);
  } else if (args.identity == "join-copies") {
    need_summaries(1);
    if (!args.copies) throw UsageError("formula join-copies: needs --copies");
    value = f_join_copies(summaries[0], *args.copies);
  } else if (args.identity == "suspension") {
    need_summaries(1);
    value = f_suspension(summaries[0]);
  } else if (args.identity == "m1-cartesian") {
    if (summaries.empty()) throw UsageError("formula m1-cartesian: needs --s summaries");
    value = m1_cartesian(summaries);
  } else if (args.identity == "cartesian") {
    if (summaries.empty()) throw UsageError("formula cartesian: needs --s summaries");
    value = f_cartesian(summaries);
  } else if (args.identity == "composition") {
    need_summaries(2);
    value = f_composition(summaries[0], summaries[1]);
  } else if (args.identity == "tensor") {
    need_fs(2);
    value = f_tensor(fs[0], fs[1]);
  } else if (args.identity == "strong") {
    need_summaries(2);
    value = f_strong(summaries[0], summaries[1]);
  } else if (args.identity == "corona") {
    need_summaries(2);
    value = f_corona(summaries[0], summaries[1]);
  } else if (args.identity == "thorn") {
    need_summaries(1);
    if (!args.thorns) throw UsageError("formula thorn: needs --thorns");
    value = f_thorn(summaries[0], *args.thorns);
  } else if (args.identity == "hierarchical") {
    need_summaries(1);
    need_fs(1);
    if (!args.u_size || !args.du_sum || !args.du2_sum)
      throw UsageError("formula hierarchical: needs --u-size, --du-sum and --du2-sum");
    value = f_hierarchical(summaries[0], fs[0],
                           HierarchicalExtras{*args.u_size, *args.du_sum, *args.du2_sum});
  } else if (args.identity == "cluster") {
    need_summaries(2);
    if (!args.root_degree) throw UsageError("formula cluster: needs --root-degree");
    value = f_cluster(summaries[0], summaries[1], *args.root_degree);
  } else if (args.identity == "disjunction") {
    need_summaries(2);
    value = f_disjunction(summaries[0], summaries[1]);
  } else if (args.identity == "symdiff") {
    need_summaries(2);
    value = f_symmetric_difference(summaries[0], summaries[1]);
  } else if (args.identity == "splice" || args.identity == "link") {
    need_fs(2);
    if (!args.d1 || !args.d2)
      throw UsageError("formula " + args.identity + ": needs --d1 and --d2");
    const RootDegreePair roots{*args.d1, *args.d2};
    value = args.identity == "splice" ? f_splice(fs[0], fs[1], roots)
                                      : f_link(fs[0], fs[1], roots);
  } else if (args.identity == "family") {
    if (args.rest.empty()) throw UsageError("formula family: needs a family name");
    const auto family = findex::family_from_name(args.rest[0]);
    if (!family) throw UsageError("unknown family: " + args.rest[0]);
    std::vector<std::int64_t> params;
    for (std::size_t i = 1; i < args.rest.size(); ++i) {
      try {
        std::size_t consumed = 0;
        params.push_back(std::stoll(args.rest[i], &consumed));
        if (consumed != args.rest[i].size()) throw std::invalid_argument(args.rest[i]);
      } catch (const std::exception&) {
        throw UsageError("formula family: bad parameter '" + args.rest[i] + "'");
      }
    }
    value = f_family({*family, params});
  } else {
    throw UsageError("unknown identity: " + args.identity);
  }

  std::cout << value << '\n';
  return kExitOk;
}

int run_verify(const VerifyArgs& args) {
  findex::TrialConfig config;
  config.trials_per_identity = args.trials;
  config.max_vertices = args.max_n;
  config.seed = args.seed;
  config.connected_only = !args.disconnected_ok;
  if (config.trials_per_identity < 0) throw UsageError("verify: --trials must be >= 0");
  if (config.max_vertices < 1) throw UsageError("verify: --max-n must be >= 1");

  bool all_ok = true;
  for (const findex::VerificationReport& report : findex::run_suite(config)) {
    std::cout << findex::report_line(report) << '\n';
    all_ok = all_ok && report.failures == 0;
  }
  return all_ok ? kExitOk : kExitFailure;
}

int run_table(const std::string& which) {
  if (which != "paper-examples") throw UsageError("table: unknown table '" + which + "'");
  bool all_match = true;
  std::cout << "family,params,formula,direct,match\n";
  for (const findex::PaperTableRow& row : findex::paper_example_rows()) {
    std::cout << row.family << ',' << row.params << ',' << row.formula << ',' << row.direct
              << ',' << (row.match() ? "yes" : "no") << '\n';
    all_match = all_match && row.match();
  }
  return all_match ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree-based topological indices of graph operations"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a named family as an edge list");
  gen->add_option("family", gen_args.family, "family name")->required();
  gen->add_option("params", gen_args.params, "integer parameters");
  gen->add_option("-o,--output", gen_args.out, "output file (default stdout)");

  OpArgs op_args;
  CLI::App* op = app.add_subcommand("op", "apply a graph operation to edge-list files");
  op->add_option("name", op_args.name, "operation name")->required();
  op->add_option("files", op_args.files, "edge-list files ('-' for stdin)");
  op->add_option("--root1", op_args.root1, "root vertex of the first operand");
  op->add_option("--root2", op_args.root2, "root vertex of the second operand");
  op->add_option("--roots", op_args.roots_list, "comma-separated roots, one per operand");
  op->add_option("--subset", op_args.subset_list, "comma-separated second-operand vertices");
  op->add_option("--thorns", op_args.thorns, "pendant vertices per vertex");
  op->add_option("-o,--output", op_args.out, "output file (default stdout)");

  IndexArgs index_args;
  CLI::App* index = app.add_subcommand("index", "print F, M1 and M2 of a graph");
  index->add_option("file", index_args.file, "edge-list file ('-' for stdin)");

  FormulaArgs formula_args;
  CLI::App* formula = app.add_subcommand("formula", "evaluate a closed form on summaries");
  formula->add_option("identity", formula_args.identity, "identity name")->required();
  formula->add_option("args", formula_args.rest, "family name and parameters");
  formula->add_option("--s", formula_args.summaries, "operand summary n,m,m1,f");
  formula->add_option("--f", formula_args.f_values, "operand F-index");
  formula->add_option("--copies", formula_args.copies, "number of joined copies");
  formula->add_option("--thorns", formula_args.thorns, "pendant vertices per vertex");
  formula->add_option("--root-degree", formula_args.root_degree, "degree of the root vertex");
  formula->add_option("--d1", formula_args.d1, "degree of the first root");
  formula->add_option("--d2", formula_args.d2, "degree of the second root");
  formula->add_option("--u-size", formula_args.u_size, "subset size");
  formula->add_option("--du-sum", formula_args.du_sum, "sum of subset degrees");
  formula->add_option("--du2-sum", formula_args.du2_sum, "sum of squared subset degrees");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run the randomized identity suite");
  verify->add_option("--trials", verify_args.trials, "trials per identity");
  verify->add_option("--max-n", verify_args.max_n, "largest operand vertex count");
  verify->add_option("--seed", verify_args.seed, "suite seed");
  verify->add_flag("--disconnected-ok", verify_args.disconnected_ok,
                   "sample operands without the connectivity filter");

  std::string table_which;
  CLI::App* table = app.add_subcommand("table", "print a bundled two-route value table");
  table->add_option("which", table_which, "table name (paper-examples)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (op->parsed()) {
      const findex::Graph result = apply_operation(op_args);
      emit(findex::write_edge_list(result), op_args.out);
      return kExitOk;
    }
    if (index->parsed()) return run_index(index_args);
    if (formula->parsed()) return run_formula(formula_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (table->parsed()) return run_table(table_which);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const findex::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
