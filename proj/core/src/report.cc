#include "mcdm/report.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace mcdm {
namespace {

double Round6(double x) { return std::round(x * 1e6) / 1e6 + 0.0; }

double Shown(double x) { return std::abs(x) < 5e-7 ? 0.0 : x; }

nlohmann::json ToJson(const RankingReport& report) {
  nlohmann::json j;
  j["method"] = ToString(report.method);
  if (report.consistency) {
    const auto& c = *report.consistency;
    j["consistency"] = {{"lambda_max", Round6(c.lambda_max)},
                        {"n", c.n},
                        {"ci", Round6(c.ci)},
                        {"ri", Round6(c.ri)},
                        {"cr", Round6(c.cr)},
                        {"threshold", c.threshold},
                        {"consistent", c.consistent}};
  } else {
    j["consistency"] = nullptr;
  }
  j["mse_vs_manual"] =
      report.mse_vs_manual ? nlohmann::json(*report.mse_vs_manual) : nlohmann::json(nullptr);
  auto& entries = j["entries"] = nlohmann::json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"rank", e.rank},
                       {"name", e.name},
                       {"weight", Round6(e.weight)},
                       {"raw_score", Round6(e.raw_score)}});
  }
  return j;
}

}  // namespace

std::string FormatConsistency(const ConsistencyReport& c) {
  return fmt::format("lambda_max={:.6f} n={} CI={:.6f} RI={:.2f} CR={:.6f} ({} CR <= {})",
                     Shown(c.lambda_max), c.n, Shown(c.ci), c.ri, Shown(c.cr),
                     c.consistent ? "PASS" : "FAIL", c.threshold);
}

std::string FormatTable(std::span<const RankingReport> reports) {
  std::string out;
  bool first = true;
  for (const auto& report : reports) {
    if (!first) out += '\n';
    first = false;
    std::size_t width = std::string_view("Alternative").size();
    for (const auto& e : report.entries) width = std::max(width, e.name.size());

    out += fmt::format("Method: {}{}\n", ToString(report.method),
                       report.flagged() ? "  [INCONSISTENT: CR above threshold]" : "");
    if (report.consistency) out += "Consistency: " + FormatConsistency(*report.consistency) + '\n';
    if (report.mse_vs_manual) out += fmt::format("MSE vs manual: {:.6e}\n", *report.mse_vs_manual);
    out += fmt::format("{:>4}  {:<{}}  {:>8}  {:>8}\n", "Rank", "Alternative", width, "Weight",
                       "Mean");
    for (const auto& e : report.entries) {
      out += fmt::format("{:>4}  {:<{}}  {:>8.4f}  {:>8.4f}\n", e.rank, e.name, width, e.weight,
                         e.raw_score);
    }
  }
  return out;
}

std::string FormatJson(std::span<const RankingReport> reports) {
  nlohmann::json j;
  if (reports.size() == 1) {
    j = ToJson(reports.front());
  } else {
    j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(ToJson(r));
  }
  return j.dump(2) + '\n';
}

std::string FormatPlotCsv(std::span<const RankingReport> reports) {
  std::string out = "method,alternative,weight,rank\n";
  for (const auto& report : reports) {
    for (const auto& e : report.entries) {
      std::string name = e.name;
      if (name.find_first_of(",\"") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : name) {
          if (c == '"') quoted += '"';
          quoted += c;
        }
        name = quoted + '"';
      }
      out += fmt::format("{},{},{:.6f},{}\n", ToString(report.method), name, e.weight, e.rank);
    }
  }
  return out;
}

}  // namespace mcdm
