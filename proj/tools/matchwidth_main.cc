// Command line front end: porosity, width, convert, grid, verify and
// experiment subcommands. Exit codes: 0 pass, 1 violation, 2 usage or
// malformed input, 3 resource cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchwidth/decomposition.h"
#include "matchwidth/direction.h"
#include "matchwidth/error.h"
#include "matchwidth/experiments.h"
#include "matchwidth/grids.h"
#include "matchwidth/io.h"
#include "matchwidth/matching.h"
#include "matchwidth/porosity.h"
#include "matchwidth/transforms.h"
#include "matchwidth/width_solver.h"

namespace mw = matchwidth;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

int exit_code_for(mw::ErrorCode code) {
  switch (code) {
    case mw::ErrorCode::kCapExceeded:
      return kExitCap;
    case mw::ErrorCode::kParse:
    case mw::ErrorCode::kSchema:
    case mw::ErrorCode::kUnknownExperiment:
    case mw::ErrorCode::kInvalidInput:
    case mw::ErrorCode::kOddComponent:
      return kExitUsage;
    default:
      return kExitViolation;
  }
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

mw::Graph load_graph(const std::string& path) {
  std::vector<std::string> warnings;
  mw::Graph g = mw::parse_graph(mw::read_file(path), &warnings);
  print_warnings(warnings);
  return g;
}

mw::Digraph load_digraph(const std::string& path) {
  std::vector<std::string> warnings;
  mw::Digraph d = mw::parse_digraph(mw::read_file(path), &warnings);
  print_warnings(warnings);
  return d;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw mw::Error(mw::ErrorCode::kInvalidInput, "cannot write " + path);
  out << text;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> shore_indices(const mw::VertexNames& names, const std::string& list) {
  std::vector<int> shore;
  for (const auto& name : split_list(list)) {
    int v = names.index_of(name);
    if (v < 0) throw mw::Error(mw::ErrorCode::kInvalidShore, "unknown vertex '" + name + "'");
    shore.push_back(v);
  }
  return shore;
}

std::string kind_of_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    if (j.contains("kind") && j["kind"].is_string()) return j["kind"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw mw::Error(mw::ErrorCode::kSchema, e.what());
  }
  throw mw::Error(mw::ErrorCode::kSchema, "missing \"kind\"");
}

// ------------------------------------------------------------- porosity

struct PorosityArgs {
  std::string file;
  std::string kind = "cycle";
  std::string shore;
};

int run_porosity(const PorosityArgs& args) {
  if (args.kind == "cycle") {
    mw::Digraph d = load_digraph(args.file);
    auto result = mw::cycle_porosity(d, shore_indices(d.names(), args.shore));
    std::cout << "porosity " << result.value << "\n";
    for (const auto& cycle : result.witness) {
      std::cout << "cycle";
      for (int v : cycle) std::cout << " " << d.name(v);
      std::cout << "\n";
    }
  } else {
    mw::Graph g = load_graph(args.file);
    auto result = mw::matching_porosity(g, shore_indices(g.names(), args.shore));
    std::cout << "porosity " << result.value << "\n";
    std::cout << mw::serialize_matching(g, result.witness);
  }
  return kExitPass;
}

// ---------------------------------------------------------------- width

struct WidthArgs {
  std::string file;
  std::string kind = "cycle";
  std::string matching;
  bool heuristic = false;
  int cap = 0;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out;
  std::string dot;
};

int run_width(const WidthArgs& args) {
  mw::SolverOptions options;
  options.cap = args.cap;
  options.jobs = args.jobs;
  mw::SolveResult result;
  mw::VertexNames names;
  if (args.kind == "cycle") {
    mw::Digraph d = load_digraph(args.file);
    names = d.names();
    result = args.heuristic ? mw::heuristic_width(d) : mw::exact_cyclewidth(d, options);
  } else {
    mw::Graph g = load_graph(args.file);
    names = g.names();
    if (args.kind == "pmw") {
      result = args.heuristic ? mw::heuristic_width(g) : mw::exact_pmw(g, options);
    } else {
      if (args.matching.empty()) throw mw::Error(mw::ErrorCode::kInvalidInput, "--kind mpmw needs --matching");
      mw::Matching m = mw::parse_matching(g, mw::read_file(args.matching));
      result = args.heuristic ? mw::heuristic_mpmw(g, m) : mw::exact_mpmw(g, m, options);
    }
  }
  std::cout << (result.mode == mw::SolveMode::kExact ? "exact" : "heuristic") << " width " << result.width << "\n";
  std::cerr << "trees " << result.stats.complete_trees << ", nodes " << result.stats.partial_trees << ", prunes "
            << result.stats.prunes << "\n";
  if (!args.out.empty()) write_output(args.out, mw::serialize_decomposition(result.decomposition, names));
  if (!args.dot.empty()) write_output(args.dot, mw::to_dot(result.decomposition, names));
  return kExitPass;
}

// -------------------------------------------------------------- convert

struct ConvertArgs {
  std::string from;
  std::string to;
  std::string graph;
  std::string matching;
  std::string input;
  std::string out;
};

int run_convert(const ConvertArgs& args) {
  std::string text = mw::read_file(args.input);
  if (args.from == "dtd") {
    if (args.to != "cycle") throw mw::Error(mw::ErrorCode::kInvalidInput, "dtd converts only to cycle");
    mw::Digraph d = load_digraph(args.graph);
    auto dtd = std::get<mw::DirTreeDecomposition>(mw::parse_decomposition(text, d.names()));
    auto report = mw::validate_dtd(d, dtd);
    if (!report.valid) {
      std::cerr << report.summary(d);
      return kExitViolation;
    }
    auto cd = mw::dtd_to_cycle_decomposition(d, mw::cubify(d, mw::to_leaf_dtd(d, dtd)));
    std::cerr << "dtd width " << report.width << ", cycle width " << mw::decomposition_width(d, cd).width << "\n";
    write_output(args.out, mw::serialize_decomposition(cd, d.names()));
    return kExitPass;
  }
  if (args.matching.empty()) throw mw::Error(mw::ErrorCode::kInvalidInput, "--matching is required");
  mw::Graph g = load_graph(args.graph);
  mw::Matching m = mw::parse_matching(g, mw::read_file(args.matching));
  mw::MDirection dir = mw::m_direction(g, m);
  if (args.from == "pmd") {
    auto pd = std::get<mw::CubicDecomposition>(mw::parse_decomposition(text, g.names()));
    mw::validate_cubic(pd, g.num_vertices());
    auto conformal = mw::pmd_to_conformal_pmd(g, m, pd);
    if (args.to == "conformal") {
      std::cerr << "width " << mw::decomposition_width(g, pd).width << " -> "
                << mw::decomposition_width(g, conformal).width << "\n";
      write_output(args.out, mw::serialize_decomposition(conformal, g.names()));
    } else if (args.to == "cycle") {
      auto cd = mw::conformal_pmd_to_cycle_decomp(g, m, conformal);
      std::cerr << "cycle width " << mw::decomposition_width(dir.digraph, cd).width << "\n";
      write_output(args.out, mw::serialize_decomposition(cd, dir.digraph.names()));
    } else {
      throw mw::Error(mw::ErrorCode::kInvalidInput, "pmd converts to conformal or cycle");
    }
    return kExitPass;
  }
  if (args.from == "cycle") {
    if (args.to != "pmd") throw mw::Error(mw::ErrorCode::kInvalidInput, "cycle converts only to pmd");
    auto cd = std::get<mw::CubicDecomposition>(mw::parse_decomposition(text, dir.digraph.names()));
    mw::validate_cubic(cd, dir.digraph.num_vertices());
    auto pd = mw::cycle_decomp_to_conformal_pmd(g, m, cd);
    std::cerr << "matching width " << mw::decomposition_width(g, pd).width << "\n";
    write_output(args.out, mw::serialize_decomposition(pd, g.names()));
    return kExitPass;
  }
  throw mw::Error(mw::ErrorCode::kInvalidInput, "unknown source kind '" + args.from + "'");
}

// ----------------------------------------------------------------- grid

struct GridArgs {
  std::string type;
  int k = 3;
  std::string format = "edges";
  std::string out;
  std::string matching_out;
};

int run_grid(const GridArgs& args) {
  std::vector<std::string> warnings;
  std::string text;
  if (args.type == "cylindrical") {
    mw::Digraph d = mw::cylindrical_grid(args.k, &warnings);
    std::cerr << "cylindrical grid k=" << args.k << ": " << d.num_vertices() << " vertices, " << d.num_arcs()
              << " arcs\n";
    text = args.format == "dot" ? mw::to_dot(d) : mw::serialize_digraph(d);
  } else if (args.type == "retracted") {
    auto grid = mw::retracted_grid_construction(args.k);
    std::cerr << "retracted grid k=" << args.k << ": " << grid.digraph.num_vertices() << " vertices, "
              << grid.digraph.num_arcs() << " arcs, alignment " << grid.alignment << ", offsets "
              << grid.outer_offset << "/" << grid.inner_offset << "\n";
    for (const auto& [tail, head] : grid.outer) std::cerr << "contracted outer " << tail << " -> " << head << "\n";
    for (const auto& [tail, head] : grid.inner) std::cerr << "contracted inner " << tail << " -> " << head << "\n";
    text = args.format == "dot" ? mw::to_dot(grid.digraph) : mw::serialize_digraph(grid.digraph);
  } else if (args.type == "matching") {
    auto grid = mw::bipartite_matching_grid(args.k);
    std::cerr << "bipartite matching grid k=" << args.k << ": " << grid.graph.num_vertices() << " vertices, "
              << grid.graph.num_edges() << " edges\n";
    text = args.format == "dot" ? mw::to_dot(grid.graph, &grid.matching) : mw::serialize_graph(grid.graph);
    if (!args.matching_out.empty()) write_output(args.matching_out, mw::serialize_matching(grid.graph, grid.matching));
  } else {
    throw mw::Error(mw::ErrorCode::kInvalidInput, "unknown grid '" + args.type + "'");
  }
  print_warnings(warnings);
  write_output(args.out, text);
  return kExitPass;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
  std::string graph;
  std::string decomposition;
  std::string matching;
  int expect_width = -1;
};

int run_verify(const VerifyArgs& args) {
  std::string text = mw::read_file(args.decomposition);
  std::string kind = kind_of_json(text);
  int width = -1;
  bool valid = true;
  if (kind == "dtd") {
    mw::Digraph d = load_digraph(args.graph);
    auto dtd = std::get<mw::DirTreeDecomposition>(mw::parse_decomposition(text, d.names()));
    auto report = mw::validate_dtd(d, dtd);
    std::cout << report.summary(d);
    valid = report.valid;
    width = report.width;
  } else {
    try {
      if (kind == "cycle") {
        mw::Digraph d = load_digraph(args.graph);
        auto cd = std::get<mw::CubicDecomposition>(mw::parse_decomposition(text, d.names()));
        mw::validate_cubic(cd, d.num_vertices());
        width = mw::decomposition_width(d, cd).width;
      } else {
        mw::Graph g = load_graph(args.graph);
        auto cd = std::get<mw::CubicDecomposition>(mw::parse_decomposition(text, g.names()));
        mw::validate_cubic(cd, g.num_vertices());
        width = mw::decomposition_width(g, cd).width;
        if (!args.matching.empty()) {
          mw::Matching m = mw::parse_matching(g, mw::read_file(args.matching));
          bool conformal = mw::is_m_conformal_decomposition(g, m, cd);
          std::cout << "m-conformal " << (conformal ? "yes" : "no") << "\n";
          valid = conformal;
        }
      }
    } catch (const mw::Error& e) {
      if (e.code() != mw::ErrorCode::kInvalidDecomposition && e.code() != mw::ErrorCode::kLeafMapMismatch) throw;
      std::cout << e.what() << "\n";
      valid = false;
    }
    if (width >= 0) std::cout << "width " << width << "\n";
  }
  if (args.expect_width >= 0 && width != args.expect_width) {
    std::cout << "expected width " << args.expect_width << "\n";
    valid = false;
  }
  std::cout << (valid ? "valid" : "invalid") << "\n";
  return valid ? kExitPass : kExitViolation;
}

// ----------------------------------------------------------- experiment

struct ExperimentArgs {
  std::string name;
  mw::ExperimentParams params;
  std::string csv;
};

int run_experiment_command(const ExperimentArgs& args) {
  auto report = mw::run_experiment(args.name, args.params);
  std::ostream& summary = args.csv.empty() ? std::cerr : std::cout;
  write_output(args.csv, report.csv());
  for (const auto& note : report.notes) summary << "note: " << note << "\n";
  summary << report.summary() << "\n";
  return report.passed() ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching and cycle width toolkit"};
  app.require_subcommand(1);

  PorosityArgs porosity;
  auto* porosity_cmd = app.add_subcommand("porosity", "Porosity of one cut");
  porosity_cmd->add_option("file", porosity.file, "Edge list (digraph for cycle, graph for matching)")->required();
  porosity_cmd->add_option("--kind", porosity.kind)->check(CLI::IsMember({"cycle", "matching"}));
  porosity_cmd->add_option("--shore", porosity.shore, "Comma separated vertex names")->required();

  WidthArgs width;
  auto* width_cmd = app.add_subcommand("width", "Exact or heuristic width");
  width_cmd->add_option("file", width.file)->required();
  width_cmd->add_option("--kind", width.kind)->check(CLI::IsMember({"cycle", "pmw", "mpmw"}));
  width_cmd->add_option("--matching", width.matching, "Perfect matching file (mpmw)");
  auto* exact_flag = width_cmd->add_flag("--exact", "Exact search (default)");
  auto* heuristic_flag = width_cmd->add_flag("--heuristic", width.heuristic);
  exact_flag->excludes(heuristic_flag);
  width_cmd->add_option("--cap", width.cap, "Vertex cap for exact search");
  width_cmd->add_option("--seed", width.seed, "Accepted for uniformity; the solvers are deterministic");
  width_cmd->add_option("--jobs", width.jobs)->check(CLI::PositiveNumber);
  width_cmd->add_option("--out", width.out, "Write the decomposition as JSON");
  width_cmd->add_option("--dot", width.dot, "Write the decomposition tree as DOT");

  ConvertArgs convert;
  auto* convert_cmd = app.add_subcommand("convert", "Transform decompositions");
  convert_cmd->add_option("--from", convert.from)->required()->check(CLI::IsMember({"dtd", "pmd", "cycle"}));
  convert_cmd->add_option("--to", convert.to)->required()->check(CLI::IsMember({"cycle", "conformal", "pmd"}));
  convert_cmd->add_option("--graph", convert.graph, "Digraph (dtd) or graph (pmd, cycle)")->required();
  convert_cmd->add_option("--matching", convert.matching);
  convert_cmd->add_option("input", convert.input, "Decomposition JSON")->required();
  convert_cmd->add_option("--out", convert.out);

  GridArgs grid;
  auto* grid_cmd = app.add_subcommand("grid", "Generate grids");
  grid_cmd->add_option("type", grid.type)->required()->check(CLI::IsMember({"cylindrical", "retracted", "matching"}));
  grid_cmd->add_option("--k", grid.k)->required();
  grid_cmd->add_option("--format", grid.format)->check(CLI::IsMember({"edges", "dot"}));
  grid_cmd->add_option("--out", grid.out);
  grid_cmd->add_option("--matching-out", grid.matching_out, "Perfect matching of the matching grid");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Validate a decomposition against a graph");
  verify_cmd->add_option("graph", verify.graph)->required();
  verify_cmd->add_option("decomposition", verify.decomposition)->required();
  verify_cmd->add_option("--matching", verify.matching, "Also check M-conformality");
  verify_cmd->add_option("--expect-width", verify.expect_width);

  ExperimentArgs experiment;
  auto* experiment_cmd = app.add_subcommand("experiment", "Run a property sweep");
  experiment_cmd->add_option("name", experiment.name)->required();
  experiment_cmd->add_option("--seed", experiment.params.seed);
  experiment_cmd->add_option("--n", experiment.params.n);
  experiment_cmd->add_option("--max-n", experiment.params.max_n);
  experiment_cmd->add_option("--samples", experiment.params.samples);
  experiment_cmd->add_option("--k", experiment.params.k);
  experiment_cmd->add_option("--jobs", experiment.params.jobs)->check(CLI::PositiveNumber);
  experiment_cmd->add_option("--csv", experiment.csv, "Write rows to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*porosity_cmd) return run_porosity(porosity);
    if (*width_cmd) return run_width(width);
    if (*convert_cmd) return run_convert(convert);
    if (*grid_cmd) return run_grid(grid);
    if (*verify_cmd) return run_verify(verify);
    if (*experiment_cmd) return run_experiment_command(experiment);
  } catch (const mw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::bad_variant_access&) {
    std::cerr << "error: decomposition kind does not fit this command\n";
    return kExitUsage;
  }
  return kExitUsage;
}
