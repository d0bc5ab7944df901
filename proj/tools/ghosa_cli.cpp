// ghosa: command line front end for experiments, exact oracles and instance
// checks.
//
//   ghosa run --problem qap --instance qaplib/had14.dat --runs 10 --out results
//   ghosa oracle --problem tsp --instance small.tsp
//   ghosa parse-check --instance data/ulysses16.tsp

#include <cstdio>
#include <iostream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ghosa/error.hpp"
#include "ghosa/harness.hpp"
#include "ghosa/ingest.hpp"
#include "ghosa/oracles.hpp"

namespace {

using ghosa::Error;
using ghosa::ErrorCode;
namespace harness = ghosa::harness;
namespace ingest = ghosa::ingest;

enum Exit { kOk = 0, kConfig = 1, kInstance = 2, kRuntime = 3 };

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::InvalidConfig:
    case ErrorCode::EmptyInput:
    case ErrorCode::TooLarge:
      return kConfig;
    default:
      return kInstance;
  }
}

struct RunOptions {
  std::string problem = "benchmark";
  std::string instance;
  std::string algo = "ghosa";
  std::size_t iters = 25000;
  std::size_t pop = 50;
  std::size_t runs = 10;
  std::uint64_t seed = 1;
  double replace_frac = 0.10;
  std::string threshold_policy = "random";
  std::string metric_override;
  std::string out;
  std::string format = "csv";
  std::size_t workers = 1;
  std::size_t dim = 0;
  std::string config;
  bool no_traces = false;
};

// "f6", "6" or "f1:30" (id and dimension).
void parse_function(const std::string& text, harness::ProblemSpec& spec) {
  std::string s = text;
  if (!s.empty() && (s[0] == 'f' || s[0] == 'F')) s.erase(0, 1);
  const auto colon = s.find(':');
  try {
    std::size_t used = 0;
    spec.function_id = std::stoi(s.substr(0, colon), &used);
    if (used != s.substr(0, colon).size()) throw std::invalid_argument(text);
    if (colon != std::string::npos) spec.dim = std::stoul(s.substr(colon + 1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidConfig, "benchmark instance must look like f6 or f1:30, got " + text);
  }
}

harness::ExperimentConfig build_config(const RunOptions& o, const CLI::App& app) {
  harness::ExperimentConfig cfg;
  if (!o.config.empty()) {
    const std::string text = ingest::read_file(o.config);
    // Accept both a bare config and a full report with an embedded one.
    const auto pos = text.find("\"config\"");
    cfg = pos == std::string::npos ? harness::config_from_json(text)
                                   : harness::replay_config(text);
  }
  auto given = [&](const char* name) { return app.count(name) > 0 || o.config.empty(); };

  if (given("--problem")) {
    const auto type = harness::problem_type_from_string(o.problem);
    if (!type) throw Error(ErrorCode::InvalidConfig, "unknown problem " + o.problem);
    cfg.problem.type = *type;
  }
  if (given("--instance")) {
    if (cfg.problem.type == harness::ProblemType::Benchmark) {
      if (!o.instance.empty()) parse_function(o.instance, cfg.problem);
    } else {
      cfg.problem.instance = o.instance;
    }
  }
  if (app.count("--dim")) cfg.problem.dim = o.dim;
  if (given("--algo")) {
    const auto algo = harness::algo_from_string(o.algo);
    if (!algo) throw Error(ErrorCode::InvalidConfig, "unknown algorithm " + o.algo);
    cfg.algorithm = *algo;
  }
  if (given("--iters")) cfg.iterations = o.iters;
  if (given("--pop")) cfg.population = o.pop;
  if (given("--runs")) cfg.runs = o.runs;
  if (given("--seed")) cfg.seed_base = o.seed;
  if (given("--replace-frac")) {
    if (!(o.replace_frac >= 0.0 && o.replace_frac < 1.0)) {
      throw Error(ErrorCode::InvalidConfig, "--replace-frac must lie in [0,1)");
    }
    cfg.replace_percent = 100.0 * o.replace_frac;
  }
  if (given("--threshold-policy")) {
    const auto pol = ghosa::problems::threshold_policy_from_string(o.threshold_policy);
    if (!pol) throw Error(ErrorCode::InvalidConfig, "unknown threshold policy " + o.threshold_policy);
    cfg.problem.threshold_policy = *pol;
  }
  if (app.count("--metric-override")) {
    const auto m = ghosa::problems::tsp_metric_from_string(o.metric_override);
    if (!m) throw Error(ErrorCode::InvalidConfig, "unknown metric " + o.metric_override);
    cfg.problem.metric_override = *m;
  }
  if (given("--workers")) cfg.workers = o.workers;
  cfg.output.clear();  // reports are written below so write failures map to exit 3
  cfg.validate();
  return cfg;
}

int cmd_run(const RunOptions& o, const CLI::App& app) {
  harness::ExperimentConfig cfg;
  try {
    cfg = build_config(o, app);
  } catch (const Error& e) {
    std::cerr << "ghosa: " << e.what() << "\n";
    return e.code() == ErrorCode::IoFailure ? kInstance : kConfig;
  }
  const auto format = harness::report_format_from_string(o.format);
  if (!format) {
    std::cerr << "ghosa: --format must be csv or json\n";
    return kConfig;
  }

  harness::ExperimentResult result;
  try {
    result = harness::run_experiment(cfg);
  } catch (const harness::RunError& e) {
    std::cerr << "ghosa: " << e.what() << "\n";
    return kRuntime;
  } catch (const Error& e) {
    std::cerr << "ghosa: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "ghosa: " << e.what() << "\n";
    return kRuntime;
  }

  for (const auto& w : result.warnings) std::cerr << "ghosa: warning: " << w << "\n";
  std::cout << harness::report_csv(result);
  if (!o.out.empty()) {
    try {
      const auto files = harness::export_report(result, o.out, *format, !o.no_traces);
      std::cerr << "ghosa: wrote " << files.report.string() << " and " << files.traces.size()
                << " trace files\n";
    } catch (const std::exception& e) {
      std::cerr << "ghosa: " << e.what() << "\n";
      return kRuntime;
    }
  }
  return kOk;
}

struct OracleOptions {
  std::string problem;
  std::string instance;
  std::string metric_override;
  std::string cache;
};

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += fmt::format("{}{}", i ? " " : "", v[i]);
  return out;
}

int cmd_oracle(const OracleOptions& o, const CLI::App& app) {
  const auto type = harness::problem_type_from_string(o.problem);
  if (!type || *type == harness::ProblemType::Benchmark) {
    std::cerr << "ghosa: oracle needs --problem tsp, qap, knapsack or road\n";
    return kConfig;
  }
  std::optional<ghosa::problems::TspMetric> metric;
  if (app.count("--metric-override")) {
    metric = ghosa::problems::tsp_metric_from_string(o.metric_override);
    if (!metric) {
      std::cerr << "ghosa: unknown metric " << o.metric_override << "\n";
      return kConfig;
    }
  }
  try {
    std::string path = o.instance;
    std::size_t pick = 1;
    if (const auto hash = path.rfind('#'); hash != std::string::npos) {
      pick = std::stoul(path.substr(hash + 1));
      path.resize(hash);
    }
    const auto format = *type == harness::ProblemType::Tsp        ? ingest::InstanceFormat::Tsplib
                        : *type == harness::ProblemType::Qap      ? ingest::InstanceFormat::Qaplib
                        : *type == harness::ProblemType::Knapsack ? ingest::InstanceFormat::OrlibMknap
                                                                  : ingest::InstanceFormat::Roadnet;
    auto rec = ingest::load_instance(harness::resolve_instance_path(path), format);
    ghosa::oracles::OracleCache cache(o.cache);

    ghosa::oracles::OracleResult res;
    std::uint64_t key = 0;
    if (auto* tsp = std::get_if<ghosa::problems::TspInstance>(&rec.payload)) {
      key = ghosa::oracles::instance_key(*tsp, metric);
      res = ghosa::oracles::brute_force_tsp(*tsp, metric);
    } else if (auto* qap = std::get_if<ghosa::problems::QapInstance>(&rec.payload)) {
      key = ghosa::oracles::instance_key(*qap);
      res = ghosa::oracles::brute_force_qap(*qap);
    } else if (auto* list = std::get_if<std::vector<ghosa::problems::KnapsackInstance>>(&rec.payload)) {
      if (pick < 1 || pick > list->size()) {
        std::cerr << "ghosa: instance selector #" << pick << " out of range\n";
        return kConfig;
      }
      key = ghosa::oracles::instance_key((*list)[pick - 1]);
      res = ghosa::oracles::exact_knapsack((*list)[pick - 1]);
    } else {
      const auto& net = std::get<ghosa::problems::RoadNetwork>(rec.payload);
      key = ghosa::oracles::instance_key(net);
      res = ghosa::oracles::exact_shortest_paths(net);
    }
    if (auto hit = cache.lookup(key); hit && *hit != res.optimum) {
      std::cerr << fmt::format("ghosa: cache entry {} disagrees ({} vs {})\n",
                               ingest::checksum_hex(key), *hit, res.optimum);
      return kRuntime;
    }
    cache.store(key, res.optimum);
    cache.save();
    std::cout << fmt::format("optimum {}\noptimizer {}\nexplored {}\nkey {}\n", res.optimum,
                             join(res.optimizer), res.nodes_explored, ingest::checksum_hex(key));
  } catch (const Error& e) {
    std::cerr << "ghosa: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "ghosa: " << e.what() << "\n";
    return kConfig;
  }
  return kOk;
}

struct ParseCheckOptions {
  std::string problem;
  std::string instance;
};

int cmd_parse_check(const ParseCheckOptions& o) {
  std::optional<ingest::InstanceFormat> format;
  if (!o.problem.empty()) {
    const auto type = harness::problem_type_from_string(o.problem);
    if (!type || *type == harness::ProblemType::Benchmark) {
      std::cerr << "ghosa: parse-check needs --problem tsp, qap, knapsack or road\n";
      return kConfig;
    }
    format = *type == harness::ProblemType::Tsp        ? ingest::InstanceFormat::Tsplib
             : *type == harness::ProblemType::Qap      ? ingest::InstanceFormat::Qaplib
             : *type == harness::ProblemType::Knapsack ? ingest::InstanceFormat::OrlibMknap
                                                       : ingest::InstanceFormat::Roadnet;
  }
  try {
    const auto path = harness::resolve_instance_path(o.instance);
    if (!format) format = ingest::guess_format(path);
    if (!format) {
      std::cerr << "ghosa: cannot infer the format of " << path.string() << "; pass --problem\n";
      return kConfig;
    }
    const auto rec = ingest::load_instance(path, format);
    for (const auto& w : rec.warnings) std::cerr << "ghosa: warning: " << w << "\n";
    std::cout << fmt::format("path {}\nformat {}\nchecksum {}\n", path.string(),
                             ingest::to_string(rec.format), ingest::checksum_hex(rec.checksum));
    std::visit(
        [](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, ghosa::problems::TspInstance>) {
            std::cout << fmt::format("name {}\ndimension {}\nmetric {}\n", p.name, p.n,
                                     ghosa::problems::to_string(p.metric));
          } else if constexpr (std::is_same_v<T, ghosa::problems::QapInstance>) {
            std::cout << fmt::format("dimension {}\n", p.n);
          } else if constexpr (std::is_same_v<T, std::vector<ghosa::problems::KnapsackInstance>>) {
            std::cout << fmt::format("problems {}\n", p.size());
            for (std::size_t i = 0; i < p.size(); ++i) {
              std::cout << fmt::format("#{} m {} n {} optimum {}\n", i + 1, p[i].m, p[i].n,
                                       p[i].best_known ? fmt::format("{}", *p[i].best_known) : "-");
            }
          } else {
            std::cout << fmt::format("nodes {}\nedges {}\nresources {}\n", p.node_count(),
                                     p.edges.size(), p.resource_caps.size());
          }
        },
        rec.payload);
  } catch (const Error& e) {
    std::cerr << "ghosa: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Green Heron Swarm Optimization toolkit"};
  app.require_subcommand(1);
  app.footer(fmt::format("Relative instance paths are also looked up under ${}.",
                         harness::kDataDirEnv));

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "run repeated seeded optimizations and report statistics");
  run_cmd->add_option("--problem", run.problem, "tsp | qap | knapsack | road | benchmark")
      ->capture_default_str();
  run_cmd->add_option("--instance", run.instance, "instance file, or f<id>[:dim] for benchmarks");
  run_cmd->add_option("--algo", run.algo, "ghosa | ga | pso")->capture_default_str();
  run_cmd->add_option("--iters", run.iters, "iterations per run")->capture_default_str();
  run_cmd->add_option("--pop", run.pop, "population size")->capture_default_str();
  run_cmd->add_option("--runs", run.runs, "independent runs")->capture_default_str();
  run_cmd->add_option("--seed", run.seed, "seed of the first run")->capture_default_str();
  run_cmd->add_option("--replace-frac", run.replace_frac,
                      "fraction of worst agents re-randomized each iteration")
      ->capture_default_str();
  run_cmd->add_option("--threshold-policy", run.threshold_policy, "knapsack: random | sweep")
      ->capture_default_str();
  run_cmd->add_option("--metric-override", run.metric_override,
                      "TSP distance: EUC_2D | ATT | GEO | EUCLIDEAN");
  run_cmd->add_option("--out", run.out, "report directory");
  run_cmd->add_option("--format", run.format, "csv | json")->capture_default_str();
  run_cmd->add_option("--workers", run.workers, "parallel runs")->capture_default_str();
  run_cmd->add_option("--dim", run.dim, "dimension of a variable-dimension benchmark");
  run_cmd->add_option("--config", run.config, "JSON config or report to start from");
  run_cmd->add_flag("--no-traces", run.no_traces, "skip per-iteration trace files");

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "solve a small instance exactly");
  oracle_cmd->add_option("--problem", oracle.problem, "tsp | qap | knapsack | road")->required();
  oracle_cmd->add_option("--instance", oracle.instance, "instance file")->required();
  oracle_cmd->add_option("--metric-override", oracle.metric_override, "TSP distance override");
  oracle_cmd->add_option("--cache", oracle.cache, "checksum/optimum cache file");

  ParseCheckOptions check;
  auto* check_cmd = app.add_subcommand("parse-check", "parse an instance file and summarize it");
  check_cmd->add_option("--problem", check.problem, "format hint: tsp | qap | knapsack | road");
  check_cmd->add_option("--instance", check.instance, "instance file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  if (*run_cmd) return cmd_run(run, *run_cmd);
  if (*oracle_cmd) return cmd_oracle(oracle, *oracle_cmd);
  return cmd_parse_check(check);
}
