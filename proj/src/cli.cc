// Copyright 2026 The scp-cro Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scp/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "scp/bench.h"
#include "scp/bks.h"
#include "scp/cro_engine.h"
#include "scp/error.h"
#include "scp/genetic.h"
#include "scp/instance.h"
#include "scp/orlib_io.h"

namespace scp {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string path;
  std::string format = "row";
  std::string algo = "hcro";
  int trials = 1;
  std::uint64_t seed = 1;
  std::int64_t fe_limit = 0;
  std::optional<Cost> bks;
  std::string name;
  bool no_gap = false;
  std::string out;
  std::string redundancy_removal = "off";
  bool count_initial_fe = true;
  int threads = 1;
  Params cro;
  GaParams ga;

  // gen
  Index rows = 0;
  Index cols = 0;
  double density = 0.0;
  Cost cost_lo = 1;
  Cost cost_hi = 100;
  std::string output;
};

void AddInstanceOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Input layout")
      ->check(CLI::IsMember({"row", "column", "native"}))
      ->capture_default_str();
}

void AddAlgorithmOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--algo", o.algo, "Algorithm")
      ->check(CLI::IsMember({"hcro", "hcro-ir", "hcro-nr", "hga", "greedy"}))
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "Seed (first seed for batches)")
      ->capture_default_str();
  cmd->add_option("--fe-limit", o.fe_limit,
                  "Objective evaluations per run; 0 means 1000 per column")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--redundancy-removal", o.redundancy_removal,
                  "Make the final best cover prime")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  cmd->add_option("--count-initial-fe", o.count_initial_fe,
                  "Charge initial population evaluations to the budget")
      ->capture_default_str();
  cmd->add_option("--pop-size", o.cro.pop_size, "Population size")
      ->capture_default_str();
  cmd->add_option("--init-ke", o.cro.init_ke)->capture_default_str();
  cmd->add_option("--init-buffer", o.cro.init_buffer)->capture_default_str();
  cmd->add_option("--collision-rate", o.cro.collision_rate)
      ->capture_default_str();
  cmd->add_option("--ke-loss-rate", o.cro.ke_loss_rate)->capture_default_str();
  cmd->add_option("--dec-threshold", o.cro.dec_threshold)
      ->capture_default_str();
  cmd->add_option("--syn-threshold", o.cro.syn_threshold)
      ->capture_default_str();
  cmd->add_option("--crossover-rate", o.ga.crossover_rate)
      ->capture_default_str();
  cmd->add_option("--mutation-rate", o.ga.mutation_rate)
      ->capture_default_str();
}

void AddBatchOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--trials", o.trials, "Independent runs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--no-gap", o.no_gap, "Report without a best known value");
  cmd->add_option("--threads", o.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void Finalize(Options& o) {
  o.cro.fe_limit = o.fe_limit;
  o.cro.count_initial_evaluations = o.count_initial_fe;
  o.cro.remove_redundancy = o.redundancy_removal == "on";
  o.ga.pop_size = o.cro.pop_size;
  o.ga.fe_limit = o.fe_limit;
  o.ga.remove_redundancy = o.cro.remove_redundancy;
  o.cro.Validate();
  o.ga.Validate();
}

TrialConfig MakeConfig(const Options& o, std::string name) {
  TrialConfig config;
  config.instance_name = std::move(name);
  config.algorithm = ParseAlgorithm(o.algo);
  config.trials = o.trials;
  config.base_seed = o.seed;
  config.cro = o.cro;
  config.ga = o.ga;
  config.bks = o.bks;
  config.want_gap = !o.no_gap;
  config.threads = o.threads;
  return config;
}

std::string InstanceName(const Options& o, const fs::path& path) {
  return CanonicalInstanceName(o.name.empty() ? path.filename().string()
                                              : o.name);
}

std::vector<Index> OneBased(const Cover& cover) {
  std::vector<Index> cols;
  for (Index col : cover.columns) cols.push_back(col + 1);
  return cols;
}

int Solve(Options& o, std::ostream& out) {
  Finalize(o);
  const Instance inst = ReadInstanceFile(o.path, ParseFileFormat(o.format));
  const RunResult r =
      RunAlgorithm(inst, ParseAlgorithm(o.algo), o.cro, o.ga, o.seed);
  if (o.out == "json") {
    nlohmann::ordered_json json;
    json["instance"] = InstanceName(o, o.path);
    json["algorithm"] = o.algo;
    json["seed"] = o.seed;
    json["cost"] = r.best_cost;
    json["fe_used"] = r.fe_used;
    json["cover"] = OneBased(r.best_cover);
    out << json.dump(2) << "\n";
    return kExitOk;
  }
  out << "cost " << r.best_cost << "\n";
  out << "columns " << r.best_cover.columns.size() << "\n";
  out << "cover";
  for (Index col : OneBased(r.best_cover)) out << ' ' << col;
  out << "\n";
  out << "evaluations " << r.fe_used << "\n";
  return kExitOk;
}

void Emit(const std::vector<TrialStats>& rows, const std::string& mode,
          std::ostream& out) {
  if (mode == "json") {
    nlohmann::ordered_json json = nlohmann::ordered_json::array();
    for (const TrialStats& s : rows) json.push_back(ToJson(s));
    out << (rows.size() == 1 ? json[0] : json).dump(2) << "\n";
  } else if (mode == "csv") {
    out << CsvHeader() << "\n";
    for (const TrialStats& s : rows) out << ToCsvRow(s) << "\n";
  } else {
    out << FormatTable(rows);
  }
}

int Bench(Options& o, std::ostream& out) {
  Finalize(o);
  const Instance inst = ReadInstanceFile(o.path, ParseFileFormat(o.format));
  const TrialStats stats =
      RunTrials(inst, MakeConfig(o, InstanceName(o, o.path)));
  Emit({stats}, o.out.empty() ? "json" : o.out, out);
  return kExitOk;
}

int Suite(Options& o, std::ostream& out, std::ostream& err) {
  Finalize(o);
  if (!fs::is_directory(o.path)) {
    throw Error(ErrorCode::kIoError, "not a directory: " + o.path);
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(o.path)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<TrialStats> rows;
  for (const fs::path& file : files) {
    const Instance inst = ReadInstanceFile(file, ParseFileFormat(o.format));
    Options per_file = o;
    per_file.name.clear();
    err << "running " << file.filename().string() << "\n";
    rows.push_back(
        RunTrials(inst, MakeConfig(per_file, InstanceName(per_file, file))));
  }
  Emit(rows, o.out.empty() ? "text" : o.out, out);
  return kExitOk;
}

int Oracle(Options& o, std::ostream& out) {
  const Instance inst = ReadInstanceFile(o.path, ParseFileFormat(o.format));
  const Optimum opt = BruteForceOptimum(inst);
  out << "optimum " << opt.cost << "\n";
  out << "cover";
  for (Index col : OneBased(opt.cover)) out << ' ' << col;
  out << "\n";
  return kExitOk;
}

int Gen(Options& o, std::ostream& out) {
  RandomInstanceSpec spec;
  spec.num_rows = o.rows;
  spec.num_cols = o.cols;
  spec.density = o.density;
  spec.cost_lo = o.cost_lo;
  spec.cost_hi = o.cost_hi;
  spec.seed = o.seed;
  const Instance inst = GenerateRandom(spec);
  if (o.output.empty()) {
    out << WriteNative(inst);
  } else {
    WriteInstanceFile(o.output, inst);
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Set covering by chemical reaction optimization", "scp-cro"};
  app.require_subcommand(1);
  Options o;

  CLI::App* solve = app.add_subcommand("solve", "Run one algorithm once");
  solve->add_option("file", o.path, "Instance file")->required();
  AddInstanceOptions(solve, o);
  AddAlgorithmOptions(solve, o);
  solve->add_option("--name", o.name, "Instance name for the report");
  solve->add_option("--out", o.out, "Report format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* bench = app.add_subcommand("bench", "Seeded batch on one file");
  bench->add_option("file", o.path, "Instance file")->required();
  AddInstanceOptions(bench, o);
  AddAlgorithmOptions(bench, o);
  AddBatchOptions(bench, o);
  bench->add_option("--bks", o.bks, "Best known value");
  bench->add_option("--name", o.name, "Instance name for the BKS lookup");
  bench->add_option("--out", o.out, "Report format (default json)")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  CLI::App* suite = app.add_subcommand("suite", "Batch over a directory");
  suite->add_option("dir", o.path, "Directory of instance files")->required();
  AddInstanceOptions(suite, o);
  AddAlgorithmOptions(suite, o);
  AddBatchOptions(suite, o);
  suite->add_option("--out", o.out, "Report format (default text)")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  CLI::App* oracle = app.add_subcommand("oracle", "Exact optimum, n <= 25");
  oracle->add_option("file", o.path, "Instance file")->required();
  AddInstanceOptions(oracle, o);

  CLI::App* gen = app.add_subcommand("gen", "Random instance, native format");
  gen->add_option("--rows", o.rows)->required()->check(CLI::PositiveNumber);
  gen->add_option("--cols", o.cols)->required()->check(CLI::PositiveNumber);
  gen->add_option("--density", o.density)->required();
  gen->add_option("--cost-lo", o.cost_lo)->capture_default_str();
  gen->add_option("--cost-hi", o.cost_hi)->capture_default_str();
  gen->add_option("--seed", o.seed)->capture_default_str();
  gen->add_option("-o,--output", o.output, "Write here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return Solve(o, out);
    if (*bench) return Bench(o, out);
    if (*suite) return Suite(o, out, err);
    if (*oracle) return Oracle(o, out);
    if (*gen) return Gen(o, out);
  } catch (const Error& e) {
    err << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::kInvalidArgument ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}

}  // namespace scp
