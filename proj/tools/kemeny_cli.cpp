#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kemeny/core.hpp"
#include "kemeny/dp.hpp"
#include "kemeny/instances.hpp"
#include "kemeny/oracle.hpp"
#include "kemeny/reduce.hpp"
#include "kemeny/searchtree.hpp"

namespace {

using nlohmann::ordered_json;

struct SolveArgs {
  std::string algorithm;
  int set_size = 4;
  bool reduce = false;
  std::optional<long long> max_k;
  bool stats = false;
  bool json = false;
  std::string file;
};

struct FileArgs {
  bool json = false;
  std::string file;
};

struct GenArgs {
  kemeny::GenParams params;
  std::string out_path;
};

kemeny::Election load_election(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return kemeny::parse_election(buffer.str());
}

kemeny::Algorithm algorithm_from_name(const std::string& name) {
  if (name == "pairs") return kemeny::Algorithm::pairs;
  if (name == "triples") return kemeny::Algorithm::triples;
  if (name == "sets") return kemeny::Algorithm::sets;
  if (name == "dp") return kemeny::Algorithm::dp;
  return kemeny::Algorithm::brute;
}

// Decision call at the given budget; solve_optimal when unbounded.
std::optional<kemeny::SolveResult> run_solver(const kemeny::Election& e,
                                              kemeny::Algorithm alg, int set_size,
                                              std::optional<kemeny::Score> budget) {
  if (!budget) return kemeny::solve_optimal(e, alg, set_size);
  if (*budget < 0) return std::nullopt;
  switch (alg) {
    case kemeny::Algorithm::pairs:
    case kemeny::Algorithm::triples:
    case kemeny::Algorithm::sets: {
      kemeny::SearchConfig cfg;
      cfg.algorithm = alg;
      cfg.set_size = set_size;
      cfg.budget = budget;
      if (alg == kemeny::Algorithm::pairs) return kemeny::solve_pairs(e, cfg);
      if (alg == kemeny::Algorithm::triples) return kemeny::solve_triples(e, cfg);
      return kemeny::solve_sets(e, cfg);
    }
    default: {
      kemeny::SolveResult best = kemeny::solve_optimal(e, alg, set_size);
      if (best.score > *budget) return std::nullopt;
      return best;
    }
  }
}

int cmd_solve(const SolveArgs& args) {
  kemeny::Election election = load_election(args.file);
  kemeny::Algorithm alg = algorithm_from_name(args.algorithm);

  std::vector<std::string> names;
  kemeny::Score offset = 0;
  std::optional<kemeny::SolveResult> result;

  if (args.reduce) {
    kemeny::ReductionTrace trace = kemeny::condorcet_reduce(election);
    offset = trace.total_offset;
    std::optional<kemeny::Score> budget;
    if (args.max_k) budget = *args.max_k - offset;
    result = run_solver(trace.residual, alg, args.set_size, budget);
    if (result) {
      kemeny::Vote full = kemeny::recompose(trace, result->consensus);
      for (int p = 0; p < full.size(); ++p)
        names.push_back(election.name(full.at(p)));
    }
  } else {
    std::optional<kemeny::Score> budget;
    if (args.max_k) budget = *args.max_k;
    result = run_solver(election, alg, args.set_size, budget);
    if (result)
      for (int p = 0; p < result->consensus.size(); ++p)
        names.push_back(election.name(result->consensus.at(p)));
  }

  if (!result) {
    std::cout << "no\n";
    return 1;
  }

  const kemeny::Score total = offset + result->score;
  if (args.json) {
    ordered_json out;
    out["score"] = total;
    out["consensus"] = names;
    out["algorithm"] = std::string(kemeny::algorithm_name(alg));
    if (args.stats) {
      out["nodes"] = result->stats.nodes;
      out["depth"] = result->stats.max_depth;
    }
    if (args.reduce) out["offset"] = offset;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "score: " << total << "\n";
    std::cout << "consensus: ";
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) std::cout << " > ";
      std::cout << names[i];
    }
    std::cout << "\n";
    if (args.reduce) std::cout << "offset: " << offset << "\n";
    if (args.stats)
      std::cout << "nodes=" << result->stats.nodes
                << " depth=" << result->stats.max_depth << "\n";
  }
  return 0;
}

int cmd_analyze(const FileArgs& args) {
  kemeny::Election election = load_election(args.file);
  kemeny::PropertyReport r = kemeny::analyze(election);
  const std::string dirty_pct = kemeny::percent_string(r.dirty_pairs, r.total_pairs);
  const std::string maj_dirty_pct =
      kemeny::percent_string(r.majority_dirty, r.total_pairs);
  const std::string maj_nondirty_pct =
      kemeny::percent_string(r.majority_nondirty, r.total_pairs);
  const std::string avg_kt = kemeny::fixed2(r.kt_sum, r.vote_pairs);

  if (args.json) {
    ordered_json out;
    out["votes"] = r.votes;
    out["candidates"] = r.candidates;
    out["total_pairs"] = r.total_pairs;
    out["dirty_pairs"] = r.dirty_pairs;
    out["dirty_pairs_pct"] = dirty_pct;
    out["majority_dirty"] = r.majority_dirty;
    out["majority_dirty_pct"] = maj_dirty_pct;
    out["majority_nondirty"] = r.majority_nondirty;
    out["majority_nondirty_pct"] = maj_nondirty_pct;
    out["min_score"] = r.min_score;
    out["max_score"] = r.max_score;
    out["max_range"] = r.max_range;
    out["avg_kt"] = avg_kt;
    out["reduced_candidates"] = r.reduced_candidates;
    std::cout << out.dump() << "\n";
    return 0;
  }

  const std::vector<std::pair<std::string, std::string>> columns = {
      {"votes", std::to_string(r.votes)},
      {"candidates", std::to_string(r.candidates)},
      {"dirty", std::to_string(r.dirty_pairs)},
      {"dirty%", dirty_pct},
      {"maj_dirty", std::to_string(r.majority_dirty)},
      {"maj_dirty%", maj_dirty_pct},
      {"maj_nondirty", std::to_string(r.majority_nondirty)},
      {"maj_nondirty%", maj_nondirty_pct},
      {"min_score", std::to_string(r.min_score)},
      {"max_score", std::to_string(r.max_score)},
      {"max_range", std::to_string(r.max_range)},
      {"avg_kt", avg_kt},
      {"reduced", std::to_string(r.reduced_candidates)}};
  std::string header, values;
  for (const auto& [name, value] : columns) {
    const std::size_t width = std::max(name.size(), value.size());
    if (!header.empty()) {
      header += "  ";
      values += "  ";
    }
    header += std::string(width - name.size(), ' ') + name;
    values += std::string(width - value.size(), ' ') + value;
  }
  std::cout << header << "\n" << values << "\n";
  return 0;
}

int cmd_gen(const GenArgs& args) {
  kemeny::Election election = kemeny::generate(args.params);
  const std::string text = kemeny::serialize_election(election);
  if (args.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(args.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + args.out_path);
  out << text;
  return 0;
}

int cmd_reduce(const FileArgs& args) {
  kemeny::Election election = load_election(args.file);
  kemeny::ReductionTrace trace = kemeny::condorcet_reduce(election);

  if (args.json) {
    ordered_json removed = ordered_json::array();
    for (const kemeny::Removal& r : trace.removed)
      removed.push_back({{"name", r.name},
                         {"placement",
                          r.placement == kemeny::Placement::front ? "front" : "back"},
                         {"offset", r.offset}});
    ordered_json residual = ordered_json::array();
    for (const kemeny::Vote& v : trace.residual.votes()) {
      ordered_json vote = ordered_json::array();
      for (int p = 0; p < v.size(); ++p)
        vote.push_back(trace.residual.name(v.at(p)));
      residual.push_back(vote);
    }
    ordered_json out;
    out["removed"] = removed;
    out["total_offset"] = trace.total_offset;
    out["residual"] = residual;
    std::cout << out.dump() << "\n";
    return 0;
  }

  if (trace.removed.empty()) {
    std::cout << "removed: none\n";
  } else {
    for (const kemeny::Removal& r : trace.removed)
      std::cout << "removed: " << r.name << " "
                << (r.placement == kemeny::Placement::front ? "front" : "back")
                << " offset=" << r.offset << "\n";
  }
  std::cout << "total_offset: " << trace.total_offset << "\n";
  if (trace.residual.num_candidates() == 0) {
    std::cout << "residual: empty\n";
  } else {
    std::cout << "residual:\n" << kemeny::serialize_election(trace.residual);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Kemeny consensus solvers, preprocessing, and instance tools"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Compute a Kemeny consensus");
  solve->add_option("--alg", solve_args.algorithm, "Solver algorithm")
      ->required()
      ->check(CLI::IsMember({"pairs", "triples", "sets", "dp", "brute"}));
  solve->add_option("--set-size", solve_args.set_size,
                    "Branching set size for --alg sets")
      ->check(CLI::Range(3, 20));
  solve->add_flag("--reduce", solve_args.reduce,
                  "Apply the Condorcet reduction before solving");
  solve->add_option("--max-k", solve_args.max_k,
                    "Decision mode: find a consensus of score at most K")
      ->check(CLI::NonNegativeNumber);
  solve->add_flag("--stats", solve_args.stats, "Report node statistics");
  solve->add_flag("--json", solve_args.json, "JSON output");
  solve->add_option("FILE", solve_args.file, "Election file")->required();

  FileArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "Report instance properties");
  analyze->add_flag("--json", analyze_args.json, "JSON output");
  analyze->add_option("FILE", analyze_args.file, "Election file")->required();

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random election");
  gen->add_option("-m", gen_args.params.candidates, "Number of candidates")
      ->required();
  gen->add_option("-n", gen_args.params.votes, "Number of votes")->required();
  gen->add_option("-w", gen_args.params.swaps_mean, "Expected swaps per vote")
      ->required();
  gen->add_option("-d", gen_args.params.swap_distance,
                  "Maximum reference-position distance of a swap")
      ->required();
  gen->add_option("--seed", gen_args.params.seed, "Random seed")->required();
  gen->add_option("-o", gen_args.out_path, "Output file (default stdout)");

  FileArgs reduce_args;
  CLI::App* reduce = app.add_subcommand("reduce", "Apply the Condorcet reduction");
  reduce->add_flag("--json", reduce_args.json, "JSON output");
  reduce->add_option("FILE", reduce_args.file, "Election file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args);
    if (analyze->parsed()) return cmd_analyze(analyze_args);
    if (gen->parsed()) return cmd_gen(gen_args);
    return cmd_reduce(reduce_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
