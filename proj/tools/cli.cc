#include "cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "mcdm/ahp.h"
#include "mcdm/dataset.h"
#include "mcdm/errors.h"
#include "mcdm/report.h"

namespace mcdm::cli {
namespace {

ReviewMatrix LoadInput(const RunConfig& config) {
  LoadOptions options;
  options.delimiter = config.delimiter;
  if (config.names_config) {
    std::ifstream names(*config.names_config);
    if (!names) throw InputError("cannot open names config '" + *config.names_config + "'");
    options.names = ParseNamesConfig(names);
  }
  std::ifstream in(config.input_path);
  if (!in) throw InputError("cannot open input file '" + config.input_path + "'");
  return LoadReviews(in, options);
}

std::vector<Method> MethodsFor(const std::string& method) {
  if (method == "manual") return {Method::kManual};
  if (method == "ahp") return {Method::kAhp};
  if (method == "fuzzy-ahp") return {Method::kFuzzyAhp};
  return {Method::kManual, Method::kAhp, Method::kFuzzyAhp};
}

CompareOptions OptionsFor(const RunConfig& config) {
  CompareOptions options;
  options.methods = MethodsFor(config.method);
  options.score_mode = config.score_mode;
  options.normalize = config.normalize;
  options.cr_threshold = config.cr_threshold;
  return options;
}

// Avoids printing "-0.000000" for round-off below the shown precision.
double Shown(double x) { return std::abs(x) < 5e-7 ? 0.0 : x; }

void FlushWarnings(const Diagnostics& diag, std::ostream& err) {
  for (const auto& w : diag.warnings) err << "warning: " << w << '\n';
}

// Runs the comparison; returns the exit status and fills `reports`.
int RunPipeline(const RunConfig& config, std::vector<RankingReport>& reports,
                std::ostream& err) {
  if (!(config.cr_threshold > 0.0)) throw InputError("--cr-threshold must be positive");
  Diagnostics diag;
  reports = CompareMethods(LoadInput(config), OptionsFor(config), &diag);
  FlushWarnings(diag, err);
  const auto flagged = std::find_if(reports.begin(), reports.end(),
                                    [](const RankingReport& r) { return r.flagged(); });
  if (flagged != reports.end()) {
    err << "warning: pairwise matrix failed the consistency gate ("
        << FormatConsistency(*flagged->consistency)
        << "); results are reported but should not be trusted\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

template <typename Fn>
int Guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace

int CmdRank(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    std::vector<RankingReport> reports;
    const int status = RunPipeline(config, reports, err);
    switch (config.output_format) {
      case OutputFormat::kTable: out << FormatTable(reports); break;
      case OutputFormat::kJson: out << FormatJson(reports); break;
      case OutputFormat::kCsv: out << FormatPlotCsv(reports); break;
    }
    return status;
  });
}

int CmdValidate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    if (!(config.cr_threshold > 0.0)) throw InputError("--cr-threshold must be positive");
    Diagnostics diag;
    const ScoreVector means = CategoryMeans(LoadInput(config));
    const ScoreVector basis = config.normalize ? Normalize(means, &diag) : means;
    const PairwiseMatrix pairwise = BuildPairwise(basis, &diag);
    const EigenResult eigen = PrincipalEigenvector(pairwise);
    const ConsistencyReport c =
        CheckConsistency(eigen.lambda_max, pairwise.size(), config.cr_threshold);
    FlushWarnings(diag, err);
    out << fmt::format("n:          {}\n", c.n)
        << fmt::format("lambda_max: {:.6f}\n", Shown(c.lambda_max))
        << fmt::format("CI:         {:.6f}\n", Shown(c.ci))
        << fmt::format("RI:         {:.2f}\n", c.ri)
        << fmt::format("CR:         {:.6f}\n", Shown(c.cr))
        << fmt::format("threshold:  {}\n", c.threshold)
        << "result:     " << (c.consistent ? "PASS" : "FAIL") << '\n';
    return c.consistent ? kExitOk : kExitInconsistent;
  });
}

int CmdExportPlotdata(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    std::vector<RankingReport> reports;
    const int status = RunPipeline(config, reports, err);
    out << FormatPlotCsv(reports);
    return status;
  });
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank alternatives from review ratings with AHP and fuzzy AHP"};
  app.require_subcommand(1);

  RunConfig config;
  std::string delimiter = ",";
  std::string format = "table";
  std::string score_mode = "weight";
  std::string names;

  const std::map<std::string, ScoreMode> score_modes = {
      {"weight", ScoreMode::kWeight}, {"weight-times-mean", ScoreMode::kWeightTimesMean}};
  const std::map<std::string, OutputFormat> formats = {
      {"table", OutputFormat::kTable}, {"json", OutputFormat::kJson}, {"csv", OutputFormat::kCsv}};

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", config.input_path, "Ratings file (header row, id column)")
        ->required();
    cmd->add_option("-d,--delimiter", delimiter, "Field delimiter (single character or 'tab')");
    cmd->add_flag("--normalize,!--no-normalize", config.normalize,
                  "Max-normalize the per-alternative means (default on)");
    cmd->add_option("--cr-threshold", config.cr_threshold, "Consistency ratio limit")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--names", names, "index=name file overriding alternative names");
  };
  auto add_ranking = [&](CLI::App* cmd) {
    cmd->add_option("-m,--method", config.method, "ahp | fuzzy-ahp | manual | all")
        ->check(CLI::IsMember({"ahp", "fuzzy-ahp", "manual", "all"}));
    cmd->add_option("--score-mode", score_mode, "weight | weight-times-mean")
        ->check(CLI::IsMember({"weight", "weight-times-mean"}));
  };

  CLI::App* rank = app.add_subcommand("rank", "Rank alternatives and print the reports");
  add_common(rank);
  add_ranking(rank);
  rank->add_option("-f,--format", format, "table | json | csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  CLI::App* validate =
      app.add_subcommand("validate", "Print consistency diagnostics of the AHP matrix");
  add_common(validate);

  CLI::App* plot = app.add_subcommand("export-plotdata", "Emit long-format CSV for plotting");
  add_common(plot);
  add_ranking(plot);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  if (delimiter == "tab" || delimiter == "\\t") delimiter = "\t";
  if (delimiter.size() != 1) {
    err << "error: --delimiter must be a single character\n";
    return kExitInputError;
  }
  config.delimiter = delimiter.front();
  config.output_format = formats.at(format);
  config.score_mode = score_modes.at(score_mode);
  if (!names.empty()) config.names_config = names;

  if (rank->parsed()) return CmdRank(config, out, err);
  if (validate->parsed()) return CmdValidate(config, out, err);
  return CmdExportPlotdata(config, out, err);
}

}  // namespace mcdm::cli
