#ifndef ACCELKEY_DATASET_H_
#define ACCELKEY_DATASET_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace accelkey {

enum class DatasetFormat { kLines, kCsv };

struct DatasetSpec {
  std::filesystem::path path;
  DatasetFormat format = DatasetFormat::kLines;
  // Header name of the column to read; required for kCsv.
  std::string csv_column;
  // Defaults to the file stem.
  std::string name;

  std::string DisplayName() const;
};

// Lines format: one entry per line, blank lines and lines starting with '#'
// skipped. CSV format: the selected column of every data row, with the same
// skipping applied to empty cells. Duplicates are kept. Throws Error for a
// missing file, malformed CSV, an unknown column or an empty result.
std::vector<std::string> LoadDataset(const DatasetSpec& spec);

std::vector<std::string> ParseLines(std::string_view text);

// RFC 4180 records: comma separated, double-quoted fields may contain commas,
// newlines and doubled quotes. Throws Error on an unterminated quote or
// stray characters after a closing quote.
std::vector<std::vector<std::string>> ParseCsv(std::string_view text);

std::string CsvEscape(std::string_view field);

// Directory holding the bundled datasets.
std::filesystem::path BundledDataDir();

// writers, representatives, graduates.
std::vector<DatasetSpec> BundledDatasets();

}  // namespace accelkey

#endif  // ACCELKEY_DATASET_H_
