// gomp: command-line front end for instance generation, recovery trials,
// RIC computation and the lemma verifiers.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gomp/gomp.hpp"

namespace {

int cmd_gen(gomp::Index K, gomp::Index N, bool noisy, bool flat, std::uint64_t seed,
            const std::string &out) {
  const gomp::Instance inst = gomp::gen_instance(K, N, seed, {noisy, flat});
  gomp::write_output(gomp::instance_to_json(inst), out);
  return 0;
}

int cmd_run(const gomp::TrialGrid &grid, const std::string &format, bool detail,
            const std::string &out) {
  const auto cells = gomp::run_trials(grid);
  gomp::emit_report(cells, format == "json" ? gomp::ReportFormat::Json : gomp::ReportFormat::Csv,
                    out, detail);
  gomp::Index errors = 0;
  for (const auto &c : cells) errors += c.errors;
  if (errors > 0) {
    std::cerr << "gomp run: " << errors << " trial(s) failed with errors\n";
    return 1;
  }
  return 0;
}

int cmd_ric(const std::string &path, gomp::Index order, std::uint64_t budget) {
  const auto j = nlohmann::json::parse(gomp::read_text_file(path));
  const gomp::SensingMatrix A(gomp::read_matrix_json(j));
  const gomp::RicEstimate est = gomp::exact_ric(A, order, budget);
  char value[64];
  std::snprintf(value, sizeof value, "%.17g", est.value);
  std::cout << "{\"order\": " << est.order << ", \"value\": " << value << ", \"kind\": \""
            << gomp::to_string(est.kind) << "\"}\n";
  return 0;
}

int cmd_verify(const std::string &lemma, gomp::Index count, std::uint64_t seed) {
  gomp::BatchResult r;
  if (lemma == "4")
    r = gomp::verify_lemma4_batch(count, seed);
  else if (lemma == "5")
    r = gomp::verify_stopping_batch(count, seed);
  else
    r = gomp::verify_selection_batch(count, seed);
  std::cout << "lemma " << lemma << ": passed " << r.passed << " failed " << r.failed;
  if (r.skipped) std::cout << " skipped " << r.skipped;
  std::cout << "\n";
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Generalized orthogonal matching pursuit experiments"};
  app.require_subcommand(1);

  gomp::Index gen_k = 1, gen_n = 1;
  bool gen_noisy = false, gen_flat = false;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto *gen = app.add_subcommand("gen", "Generate one D*U instance as JSON");
  gen->add_option("--k", gen_k, "Sparsity K")->required()->check(CLI::PositiveNumber);
  gen->add_option("--n-select", gen_n, "Indices per iteration N")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_flag("--noisy", gen_noisy, "Add noise at the SNR threshold plus margin");
  gen->add_flag("--flat-signal", gen_flat, "Use +-1 nonzeros instead of Gaussian");
  gen->add_option("--seed", gen_seed, "Seed")->required();
  gen->add_option("--out", gen_out, "Output path (default: stdout)");

  gomp::TrialGrid grid;
  std::string run_format = "csv", run_out;
  bool run_detail = false;
  auto *run = app.add_subcommand("run", "Run recovery trials over a (K, N) grid");
  run->add_option("--k-min", grid.k_min)->required()->check(CLI::PositiveNumber);
  run->add_option("--k-max", grid.k_max)->required()->check(CLI::PositiveNumber);
  run->add_option("--nsel-min", grid.nsel_min)->required()->check(CLI::PositiveNumber);
  run->add_option("--nsel-max", grid.nsel_max)->required()->check(CLI::PositiveNumber);
  run->add_option("--trials", grid.trials, "Trials per cell")->required()->check(
      CLI::NonNegativeNumber);
  run->add_flag("--noisy", grid.noisy);
  run->add_flag("--flat-signal", grid.flat_signal);
  run->add_option("--seed", grid.base_seed, "Base seed; trial t uses seed + t")->required();
  run->add_option("--format", run_format)->check(CLI::IsMember({"csv", "json"}));
  run->add_flag("--trial-detail", run_detail, "Include per-trial reports in JSON output");
  run->add_option("--out", run_out, "Output path (default: stdout)");

  std::string ric_path;
  gomp::Index ric_order = 1;
  std::uint64_t ric_budget = gomp::kDefaultRicBudget;
  auto *ric = app.add_subcommand("ric", "Exact restricted isometry constant by enumeration");
  ric->add_option("--matrix", ric_path, "JSON matrix (array of rows, or object with \"A\")")
      ->required()
      ->check(CLI::ExistingFile);
  ric->add_option("--order", ric_order)->required()->check(CLI::PositiveNumber);
  ric->add_option("--budget", ric_budget, "Maximum number of supports to enumerate");

  std::string verify_lemma;
  gomp::Index verify_count = 1000;
  std::uint64_t verify_seed = 0;
  auto *verify = app.add_subcommand("verify", "Check recovery lemmas on random instances");
  verify->add_option("--lemma", verify_lemma)
      ->required()
      ->check(CLI::IsMember({"4", "5", "selection"}));
  verify->add_option("--instances", verify_count)->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", verify_seed)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(gen_k, gen_n, gen_noisy, gen_flat, gen_seed, gen_out);
    if (*run) return cmd_run(grid, run_format, run_detail, run_out);
    if (*ric) return cmd_ric(ric_path, ric_order, ric_budget);
    if (*verify) return cmd_verify(verify_lemma, verify_count, verify_seed);
  } catch (const gomp::Error &e) {
    std::cerr << "gomp: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "gomp: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
