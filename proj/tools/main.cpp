#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "edgepoly/report.hpp"

namespace {

using namespace edgepoly;

constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;
constexpr int kExitNoInput = 66;

struct CommonArgs {
  std::string input_path;
  std::string gen;
  int max_cycle_len = 0;
  long long search_budget = 100'000'000;
  long long cycle_budget = 1'000'000;
  bool all = false;
  std::string criterion;
  bool all_orientations = false;
  std::string json_path;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("input", args.input_path,
                  "edge-list file (one 'u v' pair per line, # comments)");
  cmd->add_option("--gen", args.gen,
                  "built-in generator: k6 | complete:m | two-odd-cycles:l1,l2");
  cmd->add_option("--max-cycle-len", args.max_cycle_len,
                  "bound on enumerated cycle length (default: all)");
  cmd->add_option("--search-budget", args.search_budget,
                  "node budget for criteria/W searches");
  cmd->add_option("--cycle-budget", args.cycle_budget,
                  "cap on enumerated odd cycles");
  cmd->add_flag("--all-orientations", args.all_orientations,
                "use every walk-orientation inequality in the W decision");
  cmd->add_option("--json", args.json_path, "write the JSON report here");
}

Graph load_graph(const CommonArgs& args) {
  if (!args.gen.empty()) {
    std::string name = args.gen;
    std::string params;
    if (auto colon = name.find(':'); colon != std::string::npos) {
      params = name.substr(colon + 1);
      name = name.substr(0, colon);
    }
    if (name == "k6") return Graph::complete(6);
    if (name == "complete") return Graph::complete(std::stoi(params));
    if (name == "two-odd-cycles") {
      auto comma = params.find(',');
      if (comma == std::string::npos)
        throw CLI::ValidationError("--gen two-odd-cycles needs l1,l2");
      return Graph::two_odd_cycles_bridged(std::stoi(params.substr(0, comma)),
                                           std::stoi(params.substr(comma + 1)));
    }
    throw CLI::ValidationError("unknown generator '" + name + "'");
  }
  if (args.input_path.empty())
    throw CLI::ValidationError("need an input file or --gen");
  std::ifstream in(args.input_path);
  if (!in) {
    throw std::ios_base::failure("cannot open '" + args.input_path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return Graph::parse_edge_list(text.str());
}

AnalyzeOptions to_options(const CommonArgs& args) {
  AnalyzeOptions opts;
  opts.enumeration.max_length = args.max_cycle_len;
  opts.enumeration.budget = args.cycle_budget;
  opts.search_budget = args.search_budget;
  opts.run_all_criteria = args.all;
  opts.all_orientations = args.all_orientations;
  if (!args.criterion.empty()) {
    if (args.criterion == "cor_2_2")
      opts.only_criterion = Criterion::Cor22;
    else if (args.criterion == "thm_2_1")
      opts.only_criterion = Criterion::Thm21;
    else if (args.criterion == "cor_2_4")
      opts.only_criterion = Criterion::Cor24;
    else if (args.criterion == "thm_2_3")
      opts.only_criterion = Criterion::Thm23;
    else
      throw CLI::ValidationError("unknown criterion '" + args.criterion + "'");
  }
  return opts;
}

int emit(const AnalysisReport& rep, const CommonArgs& args) {
  std::cout << render_text(rep);
  if (!args.json_path.empty()) {
    std::ofstream out(args.json_path);
    if (!out) {
      std::cerr << "error: cannot write '" << args.json_path << "'\n";
      return kExitNoInput;
    }
    out << to_json_string(rep) << "\n";
  }
  return exit_code(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decides whether the edge polytope of a connected simple graph has a "
      "regular unimodular triangulation, via bridge-selection criteria and "
      "the exact rational open-cone condition."};
  app.require_subcommand(1);

  CommonArgs cargs;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "classification and pair census only");
  add_common(classify_cmd, cargs);
  CLI::App* criteria_cmd = app.add_subcommand(
      "criteria", "run the sufficient criteria over bridge selections");
  add_common(criteria_cmd, cargs);
  criteria_cmd->add_flag("--all", cargs.all,
                         "run every criterion, not just to the first pass");
  criteria_cmd->add_option("--criterion", cargs.criterion,
                           "run only: cor_2_2 | thm_2_1 | cor_2_4 | thm_2_3");
  CLI::App* decide_cmd = app.add_subcommand(
      "decide", "full decision: classify, criteria, exact W condition");
  add_common(decide_cmd, cargs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    Graph g = load_graph(cargs);
    AnalyzeOptions opts = to_options(cargs);
    AnalysisReport rep;
    if (classify_cmd->parsed())
      rep = cmd_classify(g, opts);
    else if (criteria_cmd->parsed())
      rep = cmd_criteria(g, opts);
    else
      rep = cmd_decide(g, opts);
    return emit(rep, cargs);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error (line " << e.line << "): " << e.what() << "\n";
    return kExitBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
