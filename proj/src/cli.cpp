// Copyright 2026 The dqbreak Authors
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

#include "dqbreak/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "dqbreak/dqdimacs.hpp"
#include "dqbreak/error.hpp"
#include "dqbreak/generators.hpp"
#include "dqbreak/oracle.hpp"
#include "dqbreak/pipeline.hpp"

namespace dqbreak::cli {
namespace {

namespace fs = std::filesystem;

class Timer {
 public:
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string JoinOrbits(const std::vector<std::vector<int>>& orbits) {
  std::ostringstream s;
  for (const auto& orbit : orbits) {
    s << '{';
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      if (i > 0) s << ' ';
      s << orbit[i];
    }
    s << '}';
  }
  return s.str();
}

std::string VerdictText(const EligibilityVerdict& v) {
  if (v.eligible) return "eligible";
  std::ostringstream s;
  s << ConditionName(*v.violated);
  if (v.witness) s << '(' << v.witness->first << ',' << v.witness->second << ')';
  return s.str();
}

SourceFormat OutputFormat(const Dqbf& dqbf) {
  return IsLinearizable(dqbf.prefix) ? SourceFormat::kQdimacs
                                     : SourceFormat::kDqdimacs;
}

struct DetectArgs {
  std::string file;
  bool list = false;
  bool verbose = false;
  std::size_t node_limit = AutomOptions{}.node_limit;
};

int DoDetect(const DetectArgs& a, std::ostream& out) {
  Timer t;
  const ParseResult parsed = ParseFile(a.file);
  const double parse_s = t.Seconds();
  AutomOptions options;
  options.node_limit = a.node_limit;
  const Detection d = Detect(parsed.dqbf, options);
  out << "vars=" << parsed.dqbf.var_count() << '\n';
  out << "clauses=" << parsed.dqbf.matrix.size() << '\n';
  out << "generators=" << d.generators.size() << '\n';
  out << "eligible=" << d.eligible.size() << '\n';
  out << "gens=" << d.eligible.size() << '/' << d.generators.size() << '\n';
  out << "order=" << FormatOrder(d.group.order) << '\n';
  out << "orbits=" << JoinOrbits(d.literal_orbits) << '\n';
  if (a.list) {
    for (std::size_t i = 0; i < d.generators.size(); ++i) {
      out << "generator=" << d.generators[i].ToString() << ' '
          << VerdictText(d.verdicts[i]) << '\n';
    }
  }
  if (a.verbose) {
    out << "time_parse=" << parse_s << '\n';
    out << "time_detect=" << t.Seconds() - parse_s << '\n';
    out << "search_nodes=" << d.group.nodes << '\n';
  }
  return kExitOk;
}

struct BreakArgs {
  std::string file;
  std::string output;
  std::optional<std::size_t> max_generators;
  bool verbose = false;
};

int DoBreak(const BreakArgs& a, std::ostream& out) {
  Timer t;
  const ParseResult parsed = ParseFile(a.file);
  const BreakOutcome b = BreakSymmetries(parsed.dqbf, a.max_generators);
  WriteFile(a.output, b.broken, OutputFormat(b.broken));
  out << "generators=" << b.detection.generators.size() << '\n';
  out << "eligible=" << b.detection.eligible.size() << '\n';
  out << "used=" << b.artifact.used_generators.size() << '\n';
  out << "added_vars=" << b.artifact.fresh_vars.size() << '\n';
  out << "added_clauses=" << b.artifact.clauses.size() << '\n';
  out << "vars=" << b.broken.var_count() << '\n';
  out << "clauses=" << b.broken.matrix.size() << '\n';
  if (a.verbose) out << "time_total=" << t.Seconds() << '\n';
  return kExitOk;
}

struct SolveArgs {
  std::string file;
  bool enumerate_only = false;
  std::uint64_t max_interpretations = OracleBudget{}.max_interpretations;
  bool verbose = false;
};

int DoSolve(const SolveArgs& a, std::ostream& out) {
  Timer t;
  const ParseResult parsed = ParseFile(a.file);
  OracleBudget budget;
  budget.max_interpretations = a.max_interpretations;
  const TruthResult r = a.enumerate_only ? BruteTruth(parsed.dqbf, budget)
                                         : DecideTruth(parsed.dqbf, budget);
  out << "result=" << (r.value ? "true" : "false") << '\n';
  if (a.verbose) out << "time_total=" << t.Seconds() << '\n';
  return r.value ? kExitTrue : kExitFalse;
}

struct StatsArgs {
  std::string dir;
  std::size_t jobs = 0;
  std::size_t node_limit = AutomOptions{}.node_limit;
};

int DoStats(const StatsArgs& a, std::ostream& out) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  struct Row {
    std::optional<BigInt> order;
    std::string error;
  };
  std::vector<Row> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        AutomOptions options;
        options.node_limit = a.node_limit;
        rows[i].order = Detect(ParseFile(files[i]).dqbf, options).group.order;
      } catch (const Error& e) {
        rows[i].error = e.what();
      }
    }
  };
  std::size_t jobs = a.jobs > 0 ? a.jobs : std::thread::hardware_concurrency();
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(files.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  const BigInt bounds[] = {1, 10, 100, 1000};
  std::size_t buckets[5] = {0, 0, 0, 0, 0};
  std::size_t errors = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    out << "file=" << files[i].filename().string();
    if (!rows[i].order) {
      out << " error=\"" << rows[i].error << "\"\n";
      ++errors;
      continue;
    }
    out << " order=" << FormatOrder(*rows[i].order) << '\n';
    std::size_t b = 0;
    while (b < 4 && *rows[i].order > bounds[b]) ++b;
    ++buckets[b];
  }
  out << "le_1e0=" << buckets[0] << '\n';
  out << "le_1e1=" << buckets[1] << '\n';
  out << "le_1e2=" << buckets[2] << '\n';
  out << "le_1e3=" << buckets[3] << '\n';
  out << "gt_1e3=" << buckets[4] << '\n';
  out << "errors=" << errors << '\n';
  return kExitOk;
}

struct GenArgs {
  std::string family;
  std::size_t n = 1;
  std::string output;
  RandomParams random;
  std::string format = "auto";
};

int DoGen(const GenArgs& a, std::ostream& out) {
  Dqbf dqbf;
  if (a.family == "kbkf") {
    dqbf = Kbkf(a.n);
  } else if (a.family == "parity") {
    dqbf = Parity(a.n);
  } else {
    dqbf = RandomDqbf(a.random);
  }
  SourceFormat format = OutputFormat(dqbf);
  if (a.format == "dqdimacs") format = SourceFormat::kDqdimacs;
  if (a.format == "qdimacs") format = SourceFormat::kQdimacs;
  WriteFile(a.output, dqbf, format);
  out << "vars=" << dqbf.var_count() << '\n';
  out << "clauses=" << dqbf.matrix.size() << '\n';
  return kExitOk;
}

int ExitCodeFor(const Error& e) {
  return e.code() == ErrorCode::kBudgetExceeded ? kExitBudget : kExitError;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Symmetry detection and breaking for DQBF", "dqbreak"};
  app.require_subcommand(1);

  DetectArgs detect;
  auto* detect_cmd = app.add_subcommand("detect", "Report the symmetry group");
  detect_cmd->add_option("file", detect.file, "QDIMACS or DQDIMACS input")
      ->required();
  detect_cmd->add_flag("--list", detect.list,
                       "Print every generator with its eligibility");
  detect_cmd->add_flag("--verbose", detect.verbose, "Print timings");
  detect_cmd->add_option("--node-limit", detect.node_limit,
                         "Search nodes before giving up");

  BreakArgs brk;
  auto* break_cmd = app.add_subcommand("break", "Add a symmetry breaker");
  break_cmd->add_option("file", brk.file, "Input formula")->required();
  break_cmd->add_option("-o,--output", brk.output, "Output file")->required();
  break_cmd->add_option("--max-generators", brk.max_generators,
                        "Use at most this many eligible generators");
  break_cmd->add_flag("--verbose", brk.verbose, "Print timings");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Decide truth by brute force");
  solve_cmd->add_option("file", solve.file, "Input formula")->required();
  solve_cmd->add_flag("--enumerate", solve.enumerate_only,
                      "Only enumerate interpretations");
  solve_cmd->add_option("--max-interpretations", solve.max_interpretations,
                        "Enumeration budget");
  solve_cmd->add_flag("--verbose", solve.verbose, "Print timings");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Group orders of a directory");
  stats_cmd->add_option("dir", stats.dir, "Directory of formulas")
      ->required()
      ->check(CLI::ExistingDirectory);
  stats_cmd->add_option("-j,--jobs", stats.jobs, "Worker threads");
  stats_cmd->add_option("--node-limit", stats.node_limit,
                        "Search nodes per file before giving up");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated formula");
  gen_cmd->add_option("family", gen.family, "kbkf, parity or random")
      ->required()
      ->check(CLI::IsMember({"kbkf", "parity", "random"}));
  gen_cmd->add_option("n", gen.n, "Family size N")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("-o,--output", gen.output, "Output file")->required();
  gen_cmd->add_option("--format", gen.format, "auto, qdimacs or dqdimacs")
      ->check(CLI::IsMember({"auto", "qdimacs", "dqdimacs"}));
  gen_cmd->add_option("--seed", gen.random.seed, "Random seed");
  gen_cmd->add_option("--universals", gen.random.universals)
      ->check(CLI::Range(0, 16));
  gen_cmd->add_option("--existentials", gen.random.existentials)
      ->check(CLI::Range(0, 16));
  gen_cmd->add_option("--max-dep", gen.random.max_dep);
  gen_cmd->add_option("--clauses", gen.random.clause_count);
  gen_cmd->add_option("--clause-len", gen.random.clause_len);
  gen_cmd->add_flag("--plant", gen.random.plant_symmetry,
                    "Plant a variable-swap symmetry");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*detect_cmd) return DoDetect(detect, out);
    if (*break_cmd) return DoBreak(brk, out);
    if (*solve_cmd) return DoSolve(solve, out);
    if (*stats_cmd) return DoStats(stats, out);
    if (*gen_cmd) return DoGen(gen, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace dqbreak::cli
