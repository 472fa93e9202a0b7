#ifndef ACCELKEY_REPORT_H_
#define ACCELKEY_REPORT_H_

#include <optional>
#include <string>
#include <string_view>

#include "accelkey/eval.h"

namespace accelkey {

enum class ReportFormat { kTable, kCsv, kJson };

std::optional<ReportFormat> ParseReportFormat(std::string_view name);

// Datasets as rows, one column per (method, layout) pair, averages to two
// decimals.
std::string RenderTable(const EvalReport& report);

// "dataset,method,layout,average,count". Averages use the shortest
// representation that parses back to the same double.
std::string RenderCsv(const EvalReport& report);

// {"rows": [{"dataset", "method", "layout", "average", "count", "costs"}]}
std::string RenderJson(const EvalReport& report);

std::string Render(const EvalReport& report, ReportFormat format);

// Inverse of RenderCsv; rows carry no per-entry costs.
EvalReport ParseCsvReport(std::string_view text);
EvalReport ParseJsonReport(std::string_view text);

}  // namespace accelkey

#endif  // ACCELKEY_REPORT_H_
