#ifndef MCDM_REPORT_H_
#define MCDM_REPORT_H_

#include <span>
#include <string>

#include "mcdm/ranking.h"

namespace mcdm {

// Human-readable table, four decimals.
std::string FormatTable(std::span<const RankingReport> reports);

// One report -> JSON object; several -> JSON array of objects. Six decimals.
//   {"method": ..., "consistency": {...} | null, "mse_vs_manual": x | null,
//    "entries": [{"rank", "name", "weight", "raw_score"}, ...]}
std::string FormatJson(std::span<const RankingReport> reports);

// Long format, header "method,alternative,weight,rank", rows ordered by
// method then rank. Six decimals.
std::string FormatPlotCsv(std::span<const RankingReport> reports);

std::string FormatConsistency(const ConsistencyReport& report);

}  // namespace mcdm

#endif  // MCDM_REPORT_H_
