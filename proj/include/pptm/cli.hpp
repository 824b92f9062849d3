// Copyright 2026 The pptm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PPTM_CLI_HPP
#define PPTM_CLI_HPP

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pptm/block_ops.hpp"
#include "pptm/json_io.hpp"
#include "pptm/operator_classes.hpp"
#include "pptm/verify/runner.hpp"

namespace pptm::cli {

enum ExitCode : int { kPass = 0, kViolations = 1, kUsage = 2 };

inline constexpr const char* kSeedEnv = "PPT_MEANS_SEED";

struct CliConfig {
  std::string command;
  std::string id;
  Index n = 3;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  double atol = 1e-9;
  double rtol = 1e-9;
  std::optional<double> t;
  std::string input;
  std::string output;
  std::string format = "json";
  bool timing = false;
  unsigned threads = 1;
};

/// Seed used when --seed is absent: $PPT_MEANS_SEED if set, else 0.
inline std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnv);
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(env, &used, 10);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw InvalidInput(std::string(kSeedEnv) + " must be an unsigned integer, got '" + env + "'");
  }
}

namespace detail {

inline json_io::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open input file '" + path + "'");
  try {
    return json_io::Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("input file '" + path + "' is not valid JSON: " + e.what());
  }
}

inline std::string format_margin(const std::optional<double>& m) {
  if (!m) return "-";
  std::ostringstream s;
  s << std::scientific << std::setprecision(3) << *m;
  return s.str();
}

inline std::string reports_table(const std::vector<verify::CheckReport>& reports) {
  std::ostringstream s;
  s << std::left << std::setw(6) << "check" << std::setw(22) << "name" << std::right << std::setw(8) << "trials"
    << std::setw(12) << "worst" << std::setw(8) << "viol" << std::setw(8) << "skip" << "  result\n";
  for (const verify::CheckReport& r : reports) {
    const verify::CheckSpec* spec = verify::find_check(r.check_id);
    s << std::left << std::setw(6) << r.check_id << std::setw(22) << (spec ? spec->name : std::string("-"))
      << std::right << std::setw(8) << r.trials << std::setw(12) << format_margin(r.worst_margin) << std::setw(8)
      << r.violations.size() << std::setw(8) << r.skipped << "  " << (r.passed() ? "pass" : "FAIL") << "\n";
  }
  return s.str();
}

inline void emit(const CliConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw InvalidInput("cannot open output file '" + cfg.output + "'");
  file << text;
}

inline int emit_reports(const CliConfig& cfg, const std::vector<verify::CheckReport>& reports, bool single,
                        std::ostream& out) {
  std::string text;
  if (cfg.format == "table") {
    text = reports_table(reports);
  } else {
    json_io::Json j = single ? json_io::report_to_json(reports.front(), cfg.timing)
                             : json_io::reports_to_json(reports, cfg.timing);
    text = j.dump(2) + "\n";
  }
  emit(cfg, text, out);
  for (const verify::CheckReport& r : reports) {
    if (!r.passed()) return kViolations;
  }
  return kPass;
}

inline json_io::Json decompose_json(const Block2x2& block, double t) {
  json_io::Json j;
  PptCertificate ppt = is_ppt(block, kPreconditionTolerance);
  j["ppt"] = {{"holds", ppt.holds}, {"margin", ppt.margin}, {"transposed_margin", ppt.transposed_margin}};
  HermMatrix m = block.assemble();
  TwoTermDecomposition two = two_term_decompose(m);
  double scale = std::max(1.0, m.mat().norm());
  j["two_term"] = {{"U", json_io::matrix_to_json(two.u)},
                   {"V", json_io::matrix_to_json(two.v)},
                   {"residual", (two_term_reconstruct(m, two) - m.mat()).norm() / scale}};
  if (ppt.holds) {
    IsometryDecomposition iso = isometry_decompose(block, MeanParams(t));
    ComplexMatrix target = iso.compressed.assemble().mat();
    j["isometry"] = {{"t", t},
                     {"compressed", json_io::block_to_json(iso.compressed)},
                     {"U_tilde", json_io::matrix_to_json(iso.isometries.u_tilde)},
                     {"V_tilde", json_io::matrix_to_json(iso.isometries.v_tilde)},
                     {"residual", (isometry_reconstruct(iso.compressed, iso.isometries) - target).norm() /
                                      std::max(1.0, target.norm())}};
  } else {
    j["isometry"] = nullptr;
  }
  try {
    j["contraction"] = json_io::matrix_to_json(ando_contraction(block));
  } catch (const Error&) {
    j["contraction"] = nullptr;  // singular diagonal blocks
  }
  return j;
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name. Returns the exit
/// code: 0 all checks passed, 1 violations or failed controls, 2 usage or
/// input errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Checks of matrix inequalities for PPT blocks and (alpha, beta)-normal operators", "pptmeans"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed_flag;

  auto add_run_flags = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "matrix dimension (1..8)")->check(CLI::Range(1, 8));
    sub->add_option("--trials", cfg.trials, "random instances per check");
    sub->add_option("--seed", seed_flag, "64-bit seed (default $PPT_MEANS_SEED or 0)");
    sub->add_option("--atol", cfg.atol, "absolute tolerance")->check(CLI::NonNegativeNumber);
    sub->add_option("--rtol", cfg.rtol, "relative tolerance")->check(CLI::NonNegativeNumber);
    sub->add_option("--t", cfg.t, "evaluate a single weight t in [0, 1]")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--out", cfg.output, "write the report to this file");
    sub->add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_flag("--timing", cfg.timing, "include wall_ms in JSON reports");
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
  };

  CLI::App* check = app.add_subcommand("check", "run one check");
  check->add_option("--id", cfg.id, "check id, e.g. C7")->required();
  add_run_flags(check);
  CLI::App* check_all = app.add_subcommand("check-all", "run every check");
  add_run_flags(check_all);
  CLI::App* classify_cmd = app.add_subcommand("classify", "classify a matrix from a JSON file");
  classify_cmd->add_option("file", cfg.input, "matrix JSON")->required();
  classify_cmd->add_option("--atol", cfg.atol, "absolute tolerance")->check(CLI::NonNegativeNumber);
  classify_cmd->add_option("--rtol", cfg.rtol, "relative tolerance")->check(CLI::NonNegativeNumber);
  classify_cmd->add_option("--out", cfg.output, "write the result to this file");
  CLI::App* decompose = app.add_subcommand("decompose", "decompose a block matrix from a JSON file");
  decompose->add_option("file", cfg.input, "block JSON {\"A\", \"B\", \"X\"}")->required();
  decompose->add_option("--t", cfg.t, "mean weight in [0, 1] (default 0.5)")->check(CLI::Range(0.0, 1.0));
  decompose->add_option("--out", cfg.output, "write the result to this file");
  CLI::App* controls = app.add_subcommand("controls", "run the negative controls");
  controls->add_option("--seed", seed_flag, "64-bit seed (default $PPT_MEANS_SEED or 0)");
  controls->add_option("--out", cfg.output, "write the report to this file");
  controls->add_flag("--timing", cfg.timing, "include wall_ms in the JSON report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    cfg.seed = seed_flag ? *seed_flag : default_seed();
    if (*check || *check_all) {
      Tolerance tol(cfg.atol, cfg.rtol);
      verify::RunOptions opts;
      opts.fixed_t = cfg.t;
      opts.threads = cfg.threads;
      if (*check) {
        return detail::emit_reports(cfg, {verify::run_check(cfg.id, cfg.n, cfg.trials, cfg.seed, tol, opts)}, true, out);
      }
      return detail::emit_reports(cfg, verify::run_all(cfg.n, cfg.trials, cfg.seed, tol, opts), false, out);
    }
    if (*classify_cmd) {
      ComplexMatrix t = json_io::matrix_from_json(detail::read_json_file(cfg.input), "T");
      detail::emit(cfg, json_io::classification_to_json(classify(t, Tolerance(cfg.atol, cfg.rtol))).dump(2) + "\n", out);
      return kPass;
    }
    if (*decompose) {
      Block2x2 block = json_io::block_from_json(detail::read_json_file(cfg.input));
      detail::emit(cfg, detail::decompose_json(block, cfg.t.value_or(0.5)).dump(2) + "\n", out);
      return kPass;
    }
    // controls
    try {
      verify::CheckReport report = verify::negative_controls(cfg.seed);
      detail::emit(cfg, json_io::report_to_json(report, cfg.timing).dump(2) + "\n", out);
      return kPass;
    } catch (const SuiteSelfTestFailure& e) {
      err << "error: " << e.what() << "\n";
      return kViolations;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace pptm::cli

#endif  // PPTM_CLI_HPP
