#include "ghosa/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "ghosa/continuous.hpp"
#include "ghosa/ingest.hpp"
#include "ghosa/problems/benchmarks.hpp"
#include "ghosa/problems/qap.hpp"
#include "ghosa/problems/road.hpp"

namespace ghosa::harness {

using nlohmann::json;

std::string_view to_string(ProblemType type) {
  switch (type) {
    case ProblemType::Tsp: return "tsp";
    case ProblemType::Qap: return "qap";
    case ProblemType::Knapsack: return "knapsack";
    case ProblemType::Road: return "road";
    case ProblemType::Benchmark: return "benchmark";
  }
  return "?";
}

std::string_view to_string(AlgoKind algo) {
  switch (algo) {
    case AlgoKind::Ghosa: return "ghosa";
    case AlgoKind::GA: return "ga";
    case AlgoKind::PSO: return "pso";
  }
  return "?";
}

std::string_view to_string(ReportFormat format) {
  return format == ReportFormat::Csv ? "csv" : "json";
}

std::optional<ProblemType> problem_type_from_string(std::string_view name) {
  for (auto t : {ProblemType::Tsp, ProblemType::Qap, ProblemType::Knapsack, ProblemType::Road,
                 ProblemType::Benchmark}) {
    if (name == to_string(t)) return t;
  }
  return std::nullopt;
}

std::optional<AlgoKind> algo_from_string(std::string_view name) {
  for (auto a : {AlgoKind::Ghosa, AlgoKind::GA, AlgoKind::PSO}) {
    if (name == to_string(a)) return a;
  }
  return std::nullopt;
}

std::optional<ReportFormat> report_format_from_string(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  return std::nullopt;
}

void ExperimentConfig::validate() const {
  if (runs == 0) throw Error(ErrorCode::InvalidConfig, "runs must be >= 1");
  if (workers == 0) throw Error(ErrorCode::InvalidConfig, "workers must be >= 1");
  EngineConfig engine{ops, population, replace_percent, iterations, seed_base};
  engine.validate();
  lbniv::LbnivParams params{lbniv_k, lbniv_bias, lbniv_eps0, {}};
  params.validate();
  if (algorithm != AlgoKind::Ghosa) {
    if (problem.type != ProblemType::Benchmark) {
      throw Error(ErrorCode::InvalidConfig, "GA and PSO run on benchmark functions only");
    }
    auto b = baseline;
    b.population = population;
    b.iterations = iterations;
    b.algorithm = algorithm == AlgoKind::GA ? baselines::Algorithm::GA : baselines::Algorithm::PSO;
    b.validate();
  }
  if (problem.type == ProblemType::Benchmark) {
    if (problem.function_id < 1 || problem.function_id > problems::kBenchmarkCount) {
      throw Error(ErrorCode::InvalidConfig,
                  fmt::format("benchmark id must lie in 1..{}", problems::kBenchmarkCount));
    }
  } else if (problem.instance.empty()) {
    throw Error(ErrorCode::InvalidConfig, "an instance path is required");
  }
  if (problem.metric_override && problem.type != ProblemType::Tsp) {
    throw Error(ErrorCode::InvalidConfig, "metric override applies to TSP only");
  }
}

// ---- JSON -----------------------------------------------------------------

namespace {

json config_json(const ExperimentConfig& c) {
  json p = {{"type", to_string(c.problem.type)},
            {"instance", c.problem.instance},
            {"function_id", c.problem.function_id},
            {"threshold_policy", problems::to_string(c.problem.threshold_policy)}};
  p["dim"] = c.problem.dim ? json(*c.problem.dim) : json(nullptr);
  p["metric_override"] =
      c.problem.metric_override ? json(problems::to_string(*c.problem.metric_override)) : json(nullptr);
  json ops = {{"p_miss", c.ops.p_miss},
              {"p_catch", c.ops.p_catch},
              {"p_false", c.ops.p_false},
              {"local_window_frac", c.ops.local_window_frac},
              {"full_scan_limit", c.ops.full_scan_limit},
              {"attract_probability", c.ops.attract_probability},
              {"secondary_method", c.ops.secondary_method == SecondaryMethod::NodeLinkage
                                       ? "node_linkage"
                                       : "segment_count"},
              {"accept_equal", c.ops.accept_equal}};
  const auto& b = c.baseline;
  json base = {{"tournament_size", b.tournament_size},
               {"crossover_rate", b.crossover_rate},
               {"mutation_scale", b.mutation_scale},
               {"blend_alpha", b.blend_alpha},
               {"elitism", b.elitism},
               {"inertia", b.inertia},
               {"cognitive", b.cognitive},
               {"social", b.social},
               {"velocity_clamp", b.velocity_clamp}};
  base["mutation_rate"] = b.mutation_rate ? json(*b.mutation_rate) : json(nullptr);
  return {{"problem", p},
          {"algorithm", to_string(c.algorithm)},
          {"runs", c.runs},
          {"iterations", c.iterations},
          {"population", c.population},
          {"replace_percent", c.replace_percent},
          {"operators", ops},
          {"lbniv", {{"k", c.lbniv_k}, {"bias", c.lbniv_bias}, {"eps0", c.lbniv_eps0}}},
          {"baseline", base},
          {"seed_base", c.seed_base},
          {"workers", c.workers},
          {"output", c.output}};
}

template <class T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

ExperimentConfig config_of(const json& j) {
  ExperimentConfig c;
  const json& p = j.at("problem");
  const auto type = problem_type_from_string(p.at("type").get<std::string>());
  if (!type) throw Error(ErrorCode::InvalidConfig, "unknown problem type");
  c.problem.type = *type;
  read(p, "instance", c.problem.instance);
  read(p, "function_id", c.problem.function_id);
  if (p.contains("dim") && !p["dim"].is_null()) c.problem.dim = p["dim"].get<std::size_t>();
  if (p.contains("metric_override") && !p["metric_override"].is_null()) {
    c.problem.metric_override =
        problems::tsp_metric_from_string(p["metric_override"].get<std::string>());
    if (!c.problem.metric_override) throw Error(ErrorCode::InvalidConfig, "unknown metric");
  }
  if (p.contains("threshold_policy")) {
    const auto pol = problems::threshold_policy_from_string(p["threshold_policy"].get<std::string>());
    if (!pol) throw Error(ErrorCode::InvalidConfig, "unknown threshold policy");
    c.problem.threshold_policy = *pol;
  }
  if (j.contains("algorithm")) {
    const auto a = algo_from_string(j["algorithm"].get<std::string>());
    if (!a) throw Error(ErrorCode::InvalidConfig, "unknown algorithm");
    c.algorithm = *a;
  }
  read(j, "runs", c.runs);
  read(j, "iterations", c.iterations);
  read(j, "population", c.population);
  read(j, "replace_percent", c.replace_percent);
  read(j, "seed_base", c.seed_base);
  read(j, "workers", c.workers);
  read(j, "output", c.output);
  if (j.contains("operators")) {
    const json& o = j["operators"];
    read(o, "p_miss", c.ops.p_miss);
    read(o, "p_catch", c.ops.p_catch);
    read(o, "p_false", c.ops.p_false);
    read(o, "local_window_frac", c.ops.local_window_frac);
    read(o, "full_scan_limit", c.ops.full_scan_limit);
    read(o, "attract_probability", c.ops.attract_probability);
    read(o, "accept_equal", c.ops.accept_equal);
    if (o.contains("secondary_method")) {
      const auto m = o["secondary_method"].get<std::string>();
      if (m == "node_linkage") {
        c.ops.secondary_method = SecondaryMethod::NodeLinkage;
      } else if (m == "segment_count") {
        c.ops.secondary_method = SecondaryMethod::SegmentCount;
      } else {
        throw Error(ErrorCode::InvalidConfig, "unknown secondary method " + m);
      }
    }
  }
  if (j.contains("lbniv")) {
    read(j["lbniv"], "k", c.lbniv_k);
    read(j["lbniv"], "bias", c.lbniv_bias);
    read(j["lbniv"], "eps0", c.lbniv_eps0);
  }
  if (j.contains("baseline")) {
    const json& b = j["baseline"];
    read(b, "tournament_size", c.baseline.tournament_size);
    read(b, "crossover_rate", c.baseline.crossover_rate);
    read(b, "mutation_scale", c.baseline.mutation_scale);
    read(b, "blend_alpha", c.baseline.blend_alpha);
    read(b, "elitism", c.baseline.elitism);
    read(b, "inertia", c.baseline.inertia);
    read(b, "cognitive", c.baseline.cognitive);
    read(b, "social", c.baseline.social);
    read(b, "velocity_clamp", c.baseline.velocity_clamp);
    if (b.contains("mutation_rate") && !b["mutation_rate"].is_null()) {
      c.baseline.mutation_rate = b["mutation_rate"].get<double>();
    }
  }
  return c;
}

}  // namespace

std::string config_to_json(const ExperimentConfig& cfg) { return config_json(cfg).dump(2); }

ExperimentConfig config_from_json(std::string_view text) {
  try {
    return config_of(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, std::string("config JSON: ") + e.what());
  }
}

// ---- statistics -------------------------------------------------------------

RunStats aggregate_stats(const std::vector<double>& v, std::optional<double> best_known,
                         Sense sense) {
  if (v.empty()) throw Error(ErrorCode::EmptyInput, "no run results to aggregate");
  RunStats s;
  s.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  if (v.size() > 1) {
    double ss = 0.0;
    for (double x : v) ss += (x - s.mean) * (x - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(v.size() - 1));
  }
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  s.best = sense == Sense::Minimize ? *lo : *hi;
  s.worst = sense == Sense::Minimize ? *hi : *lo;
  // Rounding can push the mean a hair outside [min, max].
  s.mean = std::clamp(s.mean, *lo, *hi);
  if (best_known) {
    const double diff = std::abs(s.mean - *best_known);
    s.error = *best_known != 0.0 ? 100.0 * diff / std::abs(*best_known) : diff;
  }
  return s;
}

// ---- experiment ------------------------------------------------------------

std::optional<double> tabulated_optimum(std::string_view name) {
  // Best-known values as published with the original experiments. The TSP
  // entries are plain Euclidean lengths over the raw file coordinates.
  static const std::unordered_map<std::string, double> table = {
      {"ulysses16", 74.11},   {"att48", 3.3524e4},   {"st70", 678.5975},  {"pr76", 1.0816e5},
      {"gr96", 512.3094},     {"gr120", 1.6665e3},   {"gr202", 549.9981}, {"tsp225", 3919},
      {"a280", 2.5868e3},     {"chr15a", 9552},      {"bur26a", 5426670}, {"chr12a", 9552},
      {"chr18a", 11098},      {"chr20a", 2192},      {"chr22a", 6156},    {"chr25a", 3796},
      {"els19", 17212548},    {"esc16a", 68},        {"esc32e", 2},       {"had14", 2724},
      {"nug24", 3488},        {"nug27", 5234},       {"esc16b", 292},     {"nug16a", 1610},
      {"nug20", 2570},        {"weish01", 4554},     {"weish07", 5567},   {"weish10", 6339},
      {"weish15", 7486},      {"weing8", 624319},    {"weing1", 141278},  {"flei", 2139},
      {"hp1", 3418},          {"pb6", 776},          {"pet2", 87061},     {"pet3", 4015},
      {"pet4", 6120},         {"pet5", 12400},       {"pet6", 10618},     {"pet7", 16537},
  };
  std::string key(name);
  if (const auto dot = key.find('.'); dot != std::string::npos) key.resize(dot);
  for (auto& ch : key) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  const auto it = table.find(key);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::filesystem::path resolve_instance_path(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute() || std::filesystem::exists(p)) return p;
  if (const char* root = std::getenv(kDataDirEnv); root && *root) {
    const auto candidate = std::filesystem::path(root) / p;
    if (std::filesystem::exists(candidate)) return candidate;
  }
  return p;
}

namespace {

struct LoadedProblem {
  std::string name;
  std::size_t dim = 0;
  Sense sense = Sense::Minimize;
  std::optional<double> best_known;
  std::optional<double> raw_best_known;
  std::unique_ptr<DiscreteProblem> discrete;
  std::unique_ptr<problems::BenchmarkProblem> continuous;
  // TSP coordinate instances: source of the raw Euclidean length.
  std::optional<problems::TspInstance> tsp;
  std::vector<std::string> warnings;
};

LoadedProblem load_problem(const ProblemSpec& spec) {
  LoadedProblem out;
  if (spec.type == ProblemType::Benchmark) {
    auto fn = problems::benchmark_function(spec.function_id, spec.dim);
    out.name = fn.name;
    out.dim = fn.dim;
    out.best_known = fn.optimum;
    out.continuous = std::make_unique<problems::BenchmarkProblem>(std::move(fn));
    return out;
  }

  std::string path = spec.instance;
  std::size_t pick = 1;
  if (const auto hash = path.rfind('#'); hash != std::string::npos && spec.type == ProblemType::Knapsack) {
    try {
      pick = std::stoul(path.substr(hash + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidConfig, "bad instance selector in " + path);
    }
    path.resize(hash);
  }
  const auto resolved = resolve_instance_path(path);
  using ingest::InstanceFormat;
  const InstanceFormat format = spec.type == ProblemType::Tsp        ? InstanceFormat::Tsplib
                                : spec.type == ProblemType::Qap      ? InstanceFormat::Qaplib
                                : spec.type == ProblemType::Knapsack ? InstanceFormat::OrlibMknap
                                                                     : InstanceFormat::Roadnet;
  auto rec = ingest::load_instance(resolved, format);
  out.warnings = rec.warnings;
  const std::string stem = resolved.stem().string();

  switch (spec.type) {
    case ProblemType::Tsp: {
      auto inst = std::get<problems::TspInstance>(std::move(rec.payload));
      out.name = stem;
      out.dim = inst.n;
      out.best_known = inst.best_known;
      if (!inst.coords.empty()) {
        out.raw_best_known = tabulated_optimum(stem);
        out.tsp = inst;
      } else if (!out.best_known) {
        out.best_known = tabulated_optimum(stem);
      }
      out.discrete = std::make_unique<problems::TspProblem>(std::move(inst), spec.metric_override);
      break;
    }
    case ProblemType::Qap: {
      auto inst = std::get<problems::QapInstance>(std::move(rec.payload));
      out.name = stem;
      out.dim = inst.n;
      out.best_known = tabulated_optimum(stem);
      out.discrete = std::make_unique<problems::QapProblem>(std::move(inst));
      break;
    }
    case ProblemType::Knapsack: {
      auto list = std::get<std::vector<problems::KnapsackInstance>>(std::move(rec.payload));
      if (pick < 1 || pick > list.size()) {
        throw Error(ErrorCode::InvalidConfig,
                    fmt::format("{} holds {} problems, #{} requested", path, list.size(), pick));
      }
      auto inst = std::move(list[pick - 1]);
      out.name = list.size() == 1 ? stem : fmt::format("{}-{}", stem, pick);
      out.dim = inst.n;
      out.sense = Sense::Maximize;
      out.best_known = inst.best_known ? inst.best_known : tabulated_optimum(stem);
      out.discrete = std::make_unique<problems::KnapsackProblem>(std::move(inst), spec.threshold_policy);
      break;
    }
    case ProblemType::Road: {
      auto net = std::get<problems::RoadNetwork>(std::move(rec.payload));
      out.name = stem;
      out.dim = net.node_count();
      out.discrete = std::make_unique<problems::RoadProblem>(std::move(net));
      break;
    }
    case ProblemType::Benchmark: break;
  }
  return out;
}

std::vector<double> reported(const DiscreteProblem& p, const std::vector<double>& v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [&](double f) { return p.reported(f); });
  return out;
}

RunRecord one_run(const ExperimentConfig& cfg, const LoadedProblem& lp, std::size_t run) {
  RunRecord rec;
  rec.run = run;
  rec.seed = cfg.seed_base + run;
  if (lp.discrete) {
    EngineConfig ec{cfg.ops, cfg.population, cfg.replace_percent, cfg.iterations, rec.seed};
    auto res = optimize(*lp.discrete, ec);
    rec.best = lp.discrete->reported(res.best.fitness);
    rec.solution.assign(res.best.sequence.events.begin(), res.best.sequence.events.end());
    rec.trace.total = reported(*lp.discrete, res.trace.total);
    rec.trace.travel = std::move(res.trace.travel);
    rec.trace.waiting = std::move(res.trace.waiting);
    if (lp.tsp) {
      rec.raw_length =
          problems::tsp_tour_length(*lp.tsp, res.best.sequence, problems::TspMetric::Euclidean);
    }
    return rec;
  }
  if (cfg.algorithm == AlgoKind::Ghosa) {
    ContinuousConfig cc;
    cc.ops = cfg.ops;
    cc.lbniv = {cfg.lbniv_k, cfg.lbniv_bias, cfg.lbniv_eps0, {}};
    cc.population = cfg.population;
    cc.replace_percent = cfg.replace_percent;
    cc.iterations = cfg.iterations;
    cc.seed = rec.seed;
    auto res = optimize_continuous(*lp.continuous, cc);
    rec.best = res.best;
    rec.solution = std::move(res.best_x);
    rec.trace = std::move(res.trace);
    return rec;
  }
  auto b = cfg.baseline;
  b.population = cfg.population;
  b.iterations = cfg.iterations;
  b.algorithm = cfg.algorithm == AlgoKind::GA ? baselines::Algorithm::GA : baselines::Algorithm::PSO;
  auto res = baselines::run_baseline(*lp.continuous, b, rec.seed);
  rec.best = res.best;
  rec.solution = std::move(res.best_x);
  rec.trace = std::move(res.trace);
  return rec;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const LoadedProblem lp = load_problem(cfg.problem);

  ExperimentResult out;
  out.config = cfg;
  out.name = lp.name;
  out.dim = lp.dim;
  out.sense = lp.sense;
  out.best_known = lp.best_known;
  out.raw_best_known = lp.raw_best_known;
  out.warnings = lp.warnings;
  out.runs.resize(cfg.runs);

  std::vector<std::exception_ptr> failures(cfg.runs);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t r = next++; r < cfg.runs; r = next++) {
      try {
        out.runs[r] = one_run(cfg, lp, r);
      } catch (...) {
        failures[r] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(cfg.workers, cfg.runs);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (std::size_t r = 0; r < cfg.runs; ++r) {
    if (!failures[r]) continue;
    try {
      std::rethrow_exception(failures[r]);
    } catch (const Error& e) {
      throw RunError(e.code(), r, e.what());
    } catch (const std::exception& e) {
      throw RunError(ErrorCode::InvalidConfig, r, e.what());
    }
  }

  std::vector<double> bests;
  for (const auto& r : out.runs) bests.push_back(r.best);
  out.stats = aggregate_stats(bests, out.best_known, out.sense);
  if (lp.tsp) {
    std::vector<double> raw;
    for (const auto& r : out.runs) raw.push_back(*r.raw_length);
    out.raw_stats = aggregate_stats(raw, out.raw_best_known, Sense::Minimize);
  }
  if (!cfg.output.empty()) export_report(out, cfg.output, ReportFormat::Json);
  return out;
}

// ---- reports ----------------------------------------------------------------

namespace {

std::string csv_number(std::optional<double> v) { return v ? fmt::format("{}", *v) : ""; }

std::string csv_row(const std::string& name, std::size_t dim, std::optional<double> optimum,
                    const RunStats& s) {
  return fmt::format("{},{},{},{},{},{},{},{}\n", name, dim, csv_number(optimum), s.mean, s.sd,
                     s.best, s.worst, csv_number(s.error));
}

json stats_json(const RunStats& s) {
  json j = {{"mean", s.mean}, {"sd", s.sd}, {"best", s.best}, {"worst", s.worst}};
  j["error"] = s.error ? json(*s.error) : json(nullptr);
  return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path.string());
  out << text;
  out.close();
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path.string());
}

std::vector<double> cumulative(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  std::partial_sum(v.begin(), v.end(), out.begin());
  return out;
}

std::vector<double> average_cumulative(const std::vector<double>& v) {
  auto out = cumulative(v);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] /= static_cast<double>(i + 1);
  return out;
}

}  // namespace

std::vector<std::pair<std::string, std::vector<double>>> trace_series(const ConvergenceTrace& t) {
  std::vector<std::pair<std::string, std::vector<double>>> out;
  if (t.total.empty()) return out;
  out.emplace_back("total", t.total);
  if (t.travel.empty() && t.waiting.empty()) return out;
  out.emplace_back("travel", t.travel);
  out.emplace_back("waiting", t.waiting);
  const std::pair<const char*, const std::vector<double>*> raw[] = {
      {"total", &t.total}, {"travel", &t.travel}, {"waiting", &t.waiting}};
  for (const auto& [key, v] : raw) {
    out.emplace_back(std::string("cumulative_") + key, cumulative(*v));
    out.emplace_back(std::string("average_cumulative_") + key, average_cumulative(*v));
  }
  return out;
}

std::string report_csv(const ExperimentResult& r) {
  std::string out = "name,dim,optimum,mean,sd,best,worst,error\n";
  out += csv_row(r.name, r.dim, r.best_known, r.stats);
  if (r.raw_stats) out += csv_row(r.name + ":euclidean", r.dim, r.raw_best_known, *r.raw_stats);
  return out;
}

std::string report_json(const ExperimentResult& r) {
  json runs = json::array();
  for (const auto& run : r.runs) {
    json j = {{"run", run.run}, {"seed", run.seed}, {"best", run.best}, {"solution", run.solution}};
    if (run.raw_length) j["raw_euclidean"] = *run.raw_length;
    runs.push_back(std::move(j));
  }
  json j = {{"name", r.name},
            {"dim", r.dim},
            {"sense", r.sense == Sense::Minimize ? "minimize" : "maximize"},
            {"config", config_json(r.config)},
            {"stats", stats_json(r.stats)},
            {"runs", runs}};
  j["optimum"] = r.best_known ? json(*r.best_known) : json(nullptr);
  if (r.raw_stats) {
    j["euclidean"] = {{"stats", stats_json(*r.raw_stats)}};
    j["euclidean"]["optimum"] = r.raw_best_known ? json(*r.raw_best_known) : json(nullptr);
  }
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

ReportFiles export_report(const ExperimentResult& r, const std::filesystem::path& dir,
                          ReportFormat format, bool write_traces) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoFailure, "cannot create " + dir.string() + ": " + ec.message());
  ReportFiles files;
  files.report = dir / (r.name + (format == ReportFormat::Csv ? ".csv" : ".json"));
  write_text(files.report, format == ReportFormat::Csv ? report_csv(r) : report_json(r));
  if (!write_traces) return files;
  for (const auto& run : r.runs) {
    for (const auto& [series, values] : trace_series(run.trace)) {
      std::string text;
      text.reserve(values.size() * 12);
      for (double v : values) fmt::format_to(std::back_inserter(text), "{}\n", v);
      auto path = dir / fmt::format("{}_run{}_{}.txt", r.name, run.run, series);
      write_text(path, text);
      files.traces.push_back(std::move(path));
    }
  }
  return files;
}

ExperimentConfig replay_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, std::string("report JSON: ") + e.what());
  }
  if (!j.contains("config")) throw Error(ErrorCode::InvalidConfig, "report has no embedded config");
  auto cfg = config_from_json(j["config"].dump());
  cfg.output.clear();
  return cfg;
}

ExperimentResult replay(std::string_view text) { return run_experiment(replay_config(text)); }

}  // namespace ghosa::harness
