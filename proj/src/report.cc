#include "accelkey/report.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>

#include "accelkey/dataset.h"
#include "json.hpp"

namespace accelkey {

namespace {

std::string ShortestDouble(double value) {
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string Fixed2(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

Method RequireMethod(std::string_view name) {
  auto method = ParseMethod(name);
  if (!method) throw Error("unknown method '" + std::string(name) + "'");
  return *method;
}

}  // namespace

std::optional<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "table") return ReportFormat::kTable;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  return std::nullopt;
}

std::string RenderTable(const EvalReport& report) {
  std::vector<std::string> datasets;
  std::vector<std::pair<Method, std::string>> columns;
  std::map<std::string, size_t> counts;
  for (const ReportRow& row : report.rows) {
    if (std::find(datasets.begin(), datasets.end(), row.dataset) ==
        datasets.end()) {
      datasets.push_back(row.dataset);
    }
    std::pair<Method, std::string> column{row.method, row.layout};
    if (std::find(columns.begin(), columns.end(), column) == columns.end()) {
      columns.push_back(column);
    }
    counts[row.dataset] = row.count;
  }
  bool one_layout = true;
  bool one_method = true;
  for (const auto& [method, layout] : columns) {
    one_layout = one_layout && layout == columns.front().second;
    one_method = one_method && method == columns.front().first;
  }

  std::vector<std::string> header = {"dataset", "n"};
  for (const auto& [method, layout] : columns) {
    if (one_layout) {
      header.emplace_back(MethodName(method));
    } else if (one_method) {
      header.push_back(layout);
    } else {
      header.push_back(std::string(MethodName(method)) + "/" + layout);
    }
  }
  std::vector<std::vector<std::string>> cells = {header};
  for (const std::string& dataset : datasets) {
    std::vector<std::string> line = {dataset,
                                     std::to_string(counts[dataset])};
    for (const auto& [method, layout] : columns) {
      const ReportRow* row = report.Find(dataset, method, layout);
      line.push_back(row ? Fixed2(row->average) : "-");
    }
    cells.push_back(std::move(line));
  }

  std::vector<size_t> widths(header.size(), 0);
  for (const auto& line : cells) {
    for (size_t i = 0; i < line.size(); ++i) {
      widths[i] = std::max(widths[i], line[i].size());
    }
  }
  std::ostringstream out;
  for (const auto& line : cells) {
    for (size_t i = 0; i < line.size(); ++i) {
      const size_t pad = widths[i] - line[i].size();
      if (i == 0) {
        out << line[i] << std::string(pad, ' ');
      } else {
        out << "  " << std::string(pad, ' ') << line[i];
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string RenderCsv(const EvalReport& report) {
  std::ostringstream out;
  out << "dataset,method,layout,average,count\n";
  for (const ReportRow& row : report.rows) {
    out << CsvEscape(row.dataset) << ',' << MethodName(row.method) << ','
        << CsvEscape(row.layout) << ',' << ShortestDouble(row.average) << ','
        << row.count << '\n';
  }
  return out.str();
}

std::string RenderJson(const EvalReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const ReportRow& row : report.rows) {
    rows.push_back({{"dataset", row.dataset},
                    {"method", MethodName(row.method)},
                    {"layout", row.layout},
                    {"average", row.average},
                    {"count", row.count},
                    {"costs", row.costs}});
  }
  nlohmann::ordered_json doc = {{"rows", rows}};
  return doc.dump(2) + "\n";
}

std::string Render(const EvalReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kTable:
      return RenderTable(report);
    case ReportFormat::kCsv:
      return RenderCsv(report);
    case ReportFormat::kJson:
      return RenderJson(report);
  }
  return {};
}

EvalReport ParseCsvReport(std::string_view text) {
  const auto records = ParseCsv(text);
  if (records.empty() ||
      records.front() != std::vector<std::string>{"dataset", "method",
                                                  "layout", "average",
                                                  "count"}) {
    throw Error("report csv: missing header");
  }
  EvalReport report;
  for (size_t r = 1; r < records.size(); ++r) {
    const auto& fields = records[r];
    if (fields.size() != 5) {
      throw Error("report csv: row " + std::to_string(r + 1) +
                  " has wrong field count");
    }
    ReportRow row{fields[0], RequireMethod(fields[1]), fields[2], 0.0, 0, {}};
    const auto& average = fields[3];
    auto parsed = std::from_chars(average.data(),
                                  average.data() + average.size(),
                                  row.average);
    if (parsed.ec != std::errc() ||
        parsed.ptr != average.data() + average.size()) {
      throw Error("report csv: bad average '" + average + "'");
    }
    const auto& count = fields[4];
    auto parsed_count =
        std::from_chars(count.data(), count.data() + count.size(), row.count);
    if (parsed_count.ec != std::errc() ||
        parsed_count.ptr != count.data() + count.size()) {
      throw Error("report csv: bad count '" + count + "'");
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

EvalReport ParseJsonReport(std::string_view text) {
  EvalReport report;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& item : doc.at("rows")) {
      report.rows.push_back(
          ReportRow{item.at("dataset").get<std::string>(),
                    RequireMethod(item.at("method").get<std::string>()),
                    item.at("layout").get<std::string>(),
                    item.at("average").get<double>(),
                    item.at("count").get<size_t>(),
                    item.at("costs").get<std::vector<size_t>>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("report json: ") + e.what());
  }
  return report;
}

}  // namespace accelkey
