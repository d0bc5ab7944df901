#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghosa/baselines.hpp"
#include "ghosa/engine.hpp"
#include "ghosa/error.hpp"
#include "ghosa/lbniv.hpp"
#include "ghosa/problems/knapsack.hpp"
#include "ghosa/problems/tsp.hpp"

namespace ghosa::harness {

// Dataset root consulted for relative instance paths.
inline constexpr const char* kDataDirEnv = "GHOSA_DATA_DIR";

enum class ProblemType { Tsp, Qap, Knapsack, Road, Benchmark };
enum class AlgoKind { Ghosa, GA, PSO };
enum class ReportFormat { Csv, Json };

std::string_view to_string(ProblemType type);
std::string_view to_string(AlgoKind algo);
std::string_view to_string(ReportFormat format);
std::optional<ProblemType> problem_type_from_string(std::string_view name);
std::optional<AlgoKind> algo_from_string(std::string_view name);
std::optional<ReportFormat> report_format_from_string(std::string_view name);

struct ProblemSpec {
  ProblemType type = ProblemType::Benchmark;
  // Instance file; OR-Library files holding several problems take a "#k"
  // suffix (1-based). Unused for benchmarks.
  std::string instance;
  int function_id = 1;
  std::optional<std::size_t> dim;  // variable-dimension benchmarks only
  std::optional<problems::TspMetric> metric_override;
  problems::ThresholdPolicy threshold_policy = problems::ThresholdPolicy::Random;
};

struct ExperimentConfig {
  ProblemSpec problem;
  AlgoKind algorithm = AlgoKind::Ghosa;
  std::size_t runs = 10;
  std::size_t iterations = 25000;
  std::size_t population = 50;
  double replace_percent = 10.0;
  OperatorConfig ops;
  double lbniv_k = 2.0;
  double lbniv_bias = 0.001;
  double lbniv_eps0 = 0.2;
  baselines::BaselineConfig baseline;  // population/iterations taken from above
  std::uint64_t seed_base = 1;
  std::size_t workers = 1;
  std::string output;  // report directory; empty writes nothing

  // Throws InvalidConfig.
  void validate() const;
};

std::string config_to_json(const ExperimentConfig& cfg);
// Throws InvalidConfig on malformed or incomplete JSON.
ExperimentConfig config_from_json(std::string_view json);

struct RunStats {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation, 0 for one run
  double best = 0.0;
  double worst = 0.0;
  std::optional<double> error;  // percent, or absolute when best_known == 0
};

// Throws EmptyInput. `sense` decides whether best is the minimum or maximum.
RunStats aggregate_stats(const std::vector<double>& per_run_bests,
                         std::optional<double> best_known, Sense sense = Sense::Minimize);

struct RunRecord {
  std::size_t run = 0;
  std::uint64_t seed = 0;
  double best = 0.0;                  // in the problem's own orientation
  std::optional<double> raw_length;   // TSP: unrounded Euclidean tour length
  std::vector<double> solution;       // events of the best sequence, or x
  ConvergenceTrace trace;             // problem orientation
};

struct ExperimentResult {
  ExperimentConfig config;
  std::string name;
  std::size_t dim = 0;
  Sense sense = Sense::Minimize;
  std::optional<double> best_known;
  std::vector<RunRecord> runs;
  RunStats stats;
  // TSP coordinate instances: statistics of the unrounded Euclidean lengths,
  // compared against the tabulated value of that name.
  std::optional<RunStats> raw_stats;
  std::optional<double> raw_best_known;
  std::vector<std::string> warnings;
};

// A failure inside one run; run() is 0-based.
class RunError : public Error {
 public:
  RunError(ErrorCode code, std::size_t run, const std::string& what)
      : Error(code, "run " + std::to_string(run) + ": " + what), run_(run) {}
  std::size_t run() const noexcept { return run_; }

 private:
  std::size_t run_;
};

// Tabulated best-known objective for a named TSP/QAP/knapsack instance.
std::optional<double> tabulated_optimum(std::string_view name);

// Resolves a possibly relative path against $GHOSA_DATA_DIR.
std::filesystem::path resolve_instance_path(const std::string& path);

// Loads the instance, performs runs seed_base .. seed_base+runs-1 on up to
// `workers` threads and aggregates. Parser and problem errors propagate with
// their code; errors inside a run arrive as RunError.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

struct ReportFiles {
  std::filesystem::path report;
  std::vector<std::filesystem::path> traces;
};

// CSV: header name,dim,optimum,mean,sd,best,worst,error and one row per series.
// JSON: config, seeds, per-run bests and statistics. One trace file per run
// and series, one value per line. Throws IoFailure.
ReportFiles export_report(const ExperimentResult& result, const std::filesystem::path& dir,
                          ReportFormat format, bool write_traces = true);

std::string report_csv(const ExperimentResult& result);
std::string report_json(const ExperimentResult& result);

// Road traces: total, travel and waiting, each raw, cumulative and average
// cumulative. Other problems: the total series only.
std::vector<std::pair<std::string, std::vector<double>>> trace_series(const ConvergenceTrace& t);

// The configuration embedded in a JSON report. Throws InvalidConfig.
ExperimentConfig replay_config(std::string_view report_json_text);

// Re-runs the configuration embedded in a JSON report.
ExperimentResult replay(std::string_view report_json_text);

}  // namespace ghosa::harness
