// Copyright 2026 The seqprod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// seqprod: run sequential-product property suites and scenarios.
//
//   seqprod list
//   seqprod check (--suite NAME | --all) [--dim D] [--trials N] [--seed S]
//                 [--tol T] [--format text|json] [--out PATH] [--parallel]
//   seqprod demo --scenario PATH [--format ...] [--out PATH]
//
// Exit status: 0 all suites pass, 1 some suite failed, 2 bad configuration or input.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "seqprod/error.hpp"
#include "seqprod/report.hpp"
#include "seqprod/scenario.hpp"
#include "seqprod/suites.hpp"

namespace {

constexpr int kExitConfig = 2;

struct CommonArgs {
  int dim = 0;
  int trials = 200;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::string format = "text";
  std::string out;
  bool parallel = false;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("SEQPROD_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used, 0);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw seqprod::Error(seqprod::ErrorKind::BadConfig,
                         std::string("SEQPROD_SEED is not an unsigned integer: ") + env);
  }
}

void add_run_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--dim", args.dim, "Hilbert space dimension (default: each suite's native range)")
      ->check(CLI::Range(2, 16));
  cmd->add_option("--trials", args.trials, "Random instances per case family")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", args.seed, "Base seed (default: $SEQPROD_SEED or 0)");
  cmd->add_option("--tol", args.tol, "Equality and PSD tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--format", args.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", args.out, "Write the report here instead of standard output");
  cmd->add_flag("--parallel", args.parallel, "Run suites on worker threads");
}

seqprod::TrialConfig make_config(const CommonArgs& args) {
  seqprod::TrialConfig cfg;
  if (args.dim != 0) cfg.dim = args.dim;
  cfg.trials = args.trials;
  cfg.seed = args.seed;
  if (args.tol > 0.0) {
    cfg.tol.eq_tol = args.tol;
    cfg.tol.psd_tol = args.tol;
  }
  cfg.validate();
  return cfg;
}

std::optional<std::string> out_path(const CommonArgs& args) {
  if (args.out.empty()) return std::nullopt;
  return args.out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequential product and commutator verifier"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string suite;
  bool all = false;
  std::string scenario_path;

  try {
    args.seed = default_seed();
  } catch (const seqprod::Error& e) {
    std::cerr << "seqprod: " << e.what() << "\n";
    return kExitConfig;
  }

  auto* list = app.add_subcommand("list", "List registered suites");

  auto* check = app.add_subcommand("check", "Run property suites");
  auto* suite_opt = check->add_option("--suite", suite, "Suite name (see 'list')");
  auto* all_opt = check->add_flag("--all", all, "Run every registered suite");
  suite_opt->excludes(all_opt);
  all_opt->excludes(suite_opt);
  add_run_options(check, args);

  auto* demo = app.add_subcommand("demo", "Run the checks listed in a scenario file");
  demo->add_option("--scenario", scenario_path, "Scenario file")->required();
  add_run_options(demo, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (list->parsed()) {
      for (const auto& info : seqprod::list_suites()) {
        std::cout << info.name << "\t" << info.paper_claim << "\n";
      }
      return 0;
    }

    const seqprod::ReportFormat format = seqprod::report_format_from_string(args.format);
    const seqprod::TrialConfig cfg = make_config(args);
    std::vector<seqprod::SuiteReport> reports;

    if (check->parsed()) {
      if (!all && suite.empty()) {
        std::cerr << "seqprod check: one of --suite or --all is required\n";
        return kExitConfig;
      }
      reports = all ? seqprod::run_all(cfg, args.parallel)
                    : std::vector<seqprod::SuiteReport>{seqprod::run_suite(suite, cfg)};
    } else if (demo->parsed()) {
      const seqprod::Scenario sc = seqprod::load_scenario(scenario_path, cfg.tol);
      reports = seqprod::run_scenario(sc, cfg);
    }

    seqprod::emit_report(reports, format, out_path(args));
    return seqprod::exit_code(reports);
  } catch (const seqprod::Error& e) {
    std::cerr << "seqprod: " << e.what() << "\n";
    return kExitConfig;
  }
}
