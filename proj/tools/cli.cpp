#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "sixflow/analysis.hpp"
#include "sixflow/convert.hpp"
#include "sixflow/generators.hpp"
#include "sixflow/io.hpp"
#include "sixflow/reduce.hpp"
#include "sixflow/sweep.hpp"

namespace sixflow::cli {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int check(const std::string& path, std::ostream& out) {
  const SignedGraph g = parse_sgf(read_file(path));
  const auto cyclic = cyclic_edge_connectivity(g);
  out << "vertices " << g.vertex_count() << '\n'
      << "edges " << g.edge_count() << '\n'
      << "negative " << g.negative_edges().size() << '\n'
      << "cubic " << yes_no(g.is_cubic()) << '\n'
      << "loops " << yes_no(g.has_loop()) << '\n'
      << "balanced-components " << balanced_component_count(g) << '\n'
      << "flow-admissible " << yes_no(is_flow_admissible(g)) << '\n'
      << "cyclic-edge-connectivity " << (cyclic ? std::to_string(*cyclic) : std::string("none")) << '\n';
  return kExitOk;
}

int flow(const std::string& path, const std::string& output, std::ostream& out, std::ostream& err) {
  const SignedGraph g = parse_sgf(read_file(path));
  try {
    const PipelineResult result = six_flow_pipeline(g);
    if (!verify_flow(g, result.flow.orientation, result.flow.values, 6)) {
      err << "error: InvariantBreach: pipeline returned an unverified flow\n";
      return static_cast<int>(ErrorCode::InvariantBreach);
    }
    const std::string text = serialize_flw(result.flow);
    if (output.empty()) {
      out << text;
    } else {
      write_file(output, text);
    }
    err << "flow verified: " << g.edge_count() << " edges, " << result.switched.size() << " switches, "
        << result.stats.contractions << " contractions, " << result.stats.flips << " flips, "
        << result.stats.matched << " matched\n";
    return kExitOk;
  } catch (const FlowError& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return static_cast<int>(e.code());
  }
}

int verify(const std::string& sgf, const std::string& flw, int k, std::ostream& out) {
  const SignedGraph g = parse_sgf(read_file(sgf));
  const IntegerFlow f = parse_flw(read_file(flw), g);
  const bool ok = verify_flow(g, f.orientation, f.values, k);
  out << (ok ? "valid" : "invalid") << ' ' << k << "-flow\n";
  return ok ? kExitOk : kExitFailure;
}

int reduce(const std::string& path, const std::string& output, std::ostream& out, std::ostream& err) {
  const SignedGraph g = parse_sgf(read_file(path));
  if (!is_flow_admissible(g)) {
    err << "error: NotFlowAdmissible: graph is not flow-admissible\n";
    return static_cast<int>(ErrorCode::NotFlowAdmissible);
  }
  const Reduction r = reduce_to_cubic(g);
  const std::string sgf = serialize_sgf(r.graph);
  const std::string recipe = serialize_recipe(r.recipe);
  if (output.empty()) {
    out << sgf;
    err << recipe;
  } else {
    write_file(output, sgf);
    write_file(output + ".recipe", recipe);
  }
  return kExitOk;
}

int gen(std::size_t n, double neg_prob, std::uint64_t seed, const std::string& output, std::ostream& out) {
  const std::string text = serialize_sgf(generate_random_cubic_signed(n, neg_prob, seed));
  if (output.empty()) {
    out << text;
  } else {
    write_file(output, text);
  }
  return kExitOk;
}

int sweep(const std::string& path, const SweepOptions& options, std::ostream& out, std::ostream& err) {
  const SignedGraph g = parse_sgf(read_file(path));
  if (!options.max_negative && options.samples == 0) {
    err << "error: sweep needs --max-neg and/or --samples\n";
    return kExitFailure;
  }
  const SweepReport report = run_sweep(g, options);
  out << format_sweep_report(report);
  return report.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nowhere-zero 6-flows on cubic signed graphs"};
  app.require_subcommand(1);

  std::string input, second, output;
  int k = 6;
  std::size_t n = 0;
  double neg_prob = 0.0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_neg;
  std::size_t samples = 0;

  auto* check_cmd = app.add_subcommand("check", "Print structural properties of a graph");
  check_cmd->add_option("sgf", input, "Signed graph file")->required();

  auto* flow_cmd = app.add_subcommand("flow", "Compute a verified nowhere-zero 6-flow");
  flow_cmd->add_option("sgf", input, "Signed graph file")->required();
  flow_cmd->add_option("-o,--output", output, "Output .flw file (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Check a flow file against a graph");
  verify_cmd->add_option("sgf", input, "Signed graph file")->required();
  verify_cmd->add_option("flw", second, "Flow file")->required();
  verify_cmd->add_option("-k", k, "Flow bound: values must satisfy 0 < |f| < k")->check(CLI::Range(2, 1 << 30));

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a flow-admissible graph to a cubic one");
  reduce_cmd->add_option("sgf", input, "Signed graph file")->required();
  reduce_cmd->add_option("-o,--output", output, "Output .sgf file; the recipe goes to <output>.recipe");

  auto* gen_cmd = app.add_subcommand("gen", "Sample a random simple cubic signed graph");
  gen_cmd->add_option("--n", n, "Vertex count (even, >= 4)")->required();
  gen_cmd->add_option("--neg-prob", neg_prob, "Probability that an edge is negative")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("-o,--output", output, "Output .sgf file (default: stdout)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Run the pipeline over many signatures of a graph");
  sweep_cmd->add_option("sgf", input, "Signed graph file")->required();
  sweep_cmd->add_option("--max-neg", max_neg, "Enumerate all signatures with at most K negative edges");
  sweep_cmd->add_option("--samples", samples, "Number of uniformly sampled signatures");
  sweep_cmd->add_option("--seed", seed, "Seed for sampled signatures");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*check_cmd) return check(input, out);
    if (*flow_cmd) return flow(input, output, out, err);
    if (*verify_cmd) return verify(input, second, k, out);
    if (*reduce_cmd) return reduce(input, output, out, err);
    if (*gen_cmd) return gen(n, neg_prob, seed, output, out);
    if (*sweep_cmd) return sweep(input, SweepOptions{max_neg, samples, seed}, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace sixflow::cli
