#include "accelkey/dataset.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "accelkey/layout.h"

#ifndef ACCELKEY_DATA_DIR
#define ACCELKEY_DATA_DIR "data"
#endif

namespace accelkey {

namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read dataset '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool Skipped(std::string_view value) {
  const auto first = value.find_first_not_of(" \t");
  return first == std::string_view::npos || value[first] == '#';
}

}  // namespace

std::string DatasetSpec::DisplayName() const {
  return name.empty() ? path.stem().string() : name;
}

std::vector<std::string> ParseLines(std::string_view text) {
  std::vector<std::string> entries;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!Skipped(line)) entries.emplace_back(line);
    start = end + 1;
  }
  return entries;
}

std::vector<std::vector<std::string>> ParseCsv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  size_t i = 0;
  int line = 1;
  bool row_has_content = false;
  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
  };
  auto end_record = [&] {
    end_field();
    if (row_has_content || record.size() > 1 || !record.front().empty()) {
      records.push_back(std::move(record));
    }
    record.clear();
    row_has_content = false;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '"' && field.empty()) {
      row_has_content = true;
      ++i;
      bool closed = false;
      while (i < text.size()) {
        if (text[i] == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            field.push_back('"');
            i += 2;
            continue;
          }
          closed = true;
          ++i;
          break;
        }
        if (text[i] == '\n') ++line;
        field.push_back(text[i++]);
      }
      if (!closed) {
        throw Error("malformed csv: unterminated quote starting near line " +
                    std::to_string(line));
      }
      if (i < text.size() && text[i] != ',' && text[i] != '\n' &&
          text[i] != '\r') {
        throw Error("malformed csv: unexpected character after quoted field "
                    "on line " + std::to_string(line));
      }
      continue;
    }
    if (c == ',') {
      row_has_content = true;
      end_field();
    } else if (c == '\n') {
      end_record();
      ++line;
    } else if (c != '\r') {
      field.push_back(c);
    }
    ++i;
  }
  if (!field.empty() || !record.empty() || row_has_content) end_record();
  return records;
}

std::string CsvEscape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<std::string> LoadDataset(const DatasetSpec& spec) {
  const std::string text = ReadFile(spec.path);
  std::vector<std::string> entries;
  if (spec.format == DatasetFormat::kLines) {
    entries = ParseLines(text);
  } else {
    if (spec.csv_column.empty()) {
      throw Error("csv dataset '" + spec.path.string() +
                  "' needs a column selector");
    }
    const auto records = ParseCsv(text);
    if (records.empty()) {
      throw Error("csv dataset '" + spec.path.string() + "' has no header");
    }
    const auto& header = records.front();
    size_t column = header.size();
    for (size_t i = 0; i < header.size(); ++i) {
      if (header[i] == spec.csv_column) {
        column = i;
        break;
      }
    }
    if (column == header.size()) {
      throw Error("csv dataset '" + spec.path.string() + "' has no column '" +
                  spec.csv_column + "'");
    }
    for (size_t r = 1; r < records.size(); ++r) {
      if (records[r].size() != header.size()) {
        throw Error("malformed csv: row " + std::to_string(r + 1) + " of '" +
                    spec.path.string() + "' has " +
                    std::to_string(records[r].size()) + " fields, expected " +
                    std::to_string(header.size()));
      }
      if (!Skipped(records[r][column])) entries.push_back(records[r][column]);
    }
  }
  if (entries.empty()) {
    throw Error("dataset '" + spec.path.string() + "' has no entries");
  }
  return entries;
}

std::filesystem::path BundledDataDir() {
  if (const char* dir = std::getenv("ACCELKEY_DATA_DIR")) return dir;
  return ACCELKEY_DATA_DIR;
}

std::vector<DatasetSpec> BundledDatasets() {
  std::vector<DatasetSpec> specs;
  for (const char* name : {"writers", "representatives", "graduates"}) {
    DatasetSpec spec;
    spec.path = BundledDataDir() / (std::string(name) + ".txt");
    spec.name = name;
    specs.push_back(std::move(spec));
  }
  return specs;
}

}  // namespace accelkey
