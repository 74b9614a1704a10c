#ifndef MCDM_TOOLS_CLI_H_
#define MCDM_TOOLS_CLI_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mcdm/ranking.h"

namespace mcdm::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitInconsistent = 2,
};

enum class OutputFormat { kTable, kJson, kCsv };

struct RunConfig {
  std::string input_path;
  std::string method = "all";  // ahp | fuzzy-ahp | manual | all
  char delimiter = ',';
  bool normalize = true;
  ScoreMode score_mode = ScoreMode::kWeight;
  double cr_threshold = kDefaultCrThreshold;
  OutputFormat output_format = OutputFormat::kTable;
  std::optional<std::string> names_config;
};

int CmdRank(const RunConfig& config, std::ostream& out, std::ostream& err);
int CmdValidate(const RunConfig& config, std::ostream& out, std::ostream& err);
int CmdExportPlotdata(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses `args` (without the program name) and dispatches to a subcommand.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcdm::cli

#endif  // MCDM_TOOLS_CLI_H_
