#ifndef GOMP_REPORT_HPP
#define GOMP_REPORT_HPP

// CSV and JSON rendering of trial results.
//
// CSV columns: K,N,noisy,trials,exact_rate,support_rate,mean_iterations,
// mean_final_residual; reals with 12 significant digits. JSON carries the
// same fields per cell (plus the error count and, optionally, per-trial
// detail) and prints reals in shortest round-trip form so that parsing the
// output gives back the in-memory results exactly.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gomp/error.hpp"
#include "gomp/trials.hpp"

namespace gomp {

enum class ReportFormat { Csv, Json };

inline constexpr const char *kCsvHeader =
    "K,N,noisy,trials,exact_rate,support_rate,mean_iterations,mean_final_residual";

inline std::string report_csv(const std::vector<CellResult> &cells) {
  auto num = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
  };
  std::string out = std::string(kCsvHeader) + "\n";
  for (const CellResult &c : cells) {
    out += std::to_string(c.K) + "," + std::to_string(c.N) + "," + (c.noisy ? "true" : "false") +
           "," + std::to_string(c.trials) + "," + num(c.exact_rate) + "," + num(c.support_rate) +
           "," + num(c.mean_iterations) + "," + num(c.mean_final_residual) + "\n";
  }
  return out;
}

inline nlohmann::json to_json(const TrialReport &r) {
  nlohmann::json j = {{"seed", r.seed},
                      {"exact_recovery", r.exact_recovery},
                      {"support_recovery", r.support_recovery},
                      {"iterations_used", r.iterations_used},
                      {"residual_final", r.residual_final}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

inline std::string report_json(const std::vector<CellResult> &cells, bool include_trials = false) {
  nlohmann::json out = nlohmann::json::object();
  out["cells"] = nlohmann::json::array();
  for (const CellResult &c : cells) {
    nlohmann::json j = {{"K", c.K},
                        {"N", c.N},
                        {"noisy", c.noisy},
                        {"trials", c.trials},
                        {"exact_rate", c.exact_rate},
                        {"support_rate", c.support_rate},
                        {"mean_iterations", c.mean_iterations},
                        {"mean_final_residual", c.mean_final_residual},
                        {"errors", c.errors}};
    if (include_trials) {
      j["trial_reports"] = nlohmann::json::array();
      for (const TrialReport &r : c.reports) j["trial_reports"].push_back(to_json(r));
    }
    out["cells"].push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

inline std::vector<CellResult> parse_report_json(const std::string &text) {
  try {
    const auto j = nlohmann::json::parse(text);
    std::vector<CellResult> cells;
    for (const auto &c : j.at("cells")) {
      CellResult cell;
      cell.K = c.at("K").get<Index>();
      cell.N = c.at("N").get<Index>();
      cell.noisy = c.at("noisy").get<bool>();
      cell.trials = c.at("trials").get<Index>();
      cell.exact_rate = c.at("exact_rate").get<double>();
      cell.support_rate = c.at("support_rate").get<double>();
      cell.mean_iterations = c.at("mean_iterations").get<double>();
      cell.mean_final_residual = c.at("mean_final_residual").get<double>();
      cell.errors = c.value("errors", Index{0});
      if (c.contains("trial_reports")) {
        for (const auto &r : c.at("trial_reports")) {
          TrialReport t;
          t.seed = r.at("seed").get<std::uint64_t>();
          t.exact_recovery = r.at("exact_recovery").get<bool>();
          t.support_recovery = r.at("support_recovery").get<bool>();
          t.iterations_used = r.at("iterations_used").get<Index>();
          t.residual_final = r.at("residual_final").get<double>();
          t.error = r.value("error", std::string());
          cell.reports.push_back(std::move(t));
        }
      }
      cells.push_back(std::move(cell));
    }
    return cells;
  } catch (const nlohmann::json::exception &e) {
    throw Error(Errc::ParseError, e.what());
  }
}

// Writes `text` to `destination`; "" or "-" means standard output.
inline void write_output(const std::string &text, const std::string &destination) {
  if (destination.empty() || destination == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot open " + destination + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error(Errc::IoError, "write to " + destination + " failed");
}

inline void emit_report(const std::vector<CellResult> &cells, ReportFormat format,
                        const std::string &destination, bool include_trials = false) {
  write_output(format == ReportFormat::Csv ? report_csv(cells) : report_json(cells, include_trials),
               destination);
}

}  // namespace gomp

#endif  // GOMP_REPORT_HPP
