#ifndef ACCELKEY_CLI_H_
#define ACCELKEY_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "accelkey/dataset.h"
#include "accelkey/eval.h"
#include "accelkey/matcher.h"
#include "accelkey/report.h"
#include "accelkey/session.h"

namespace accelkey {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Bad names or flag combinations, detected before any work starts.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::vector<std::string> layouts = {"qwerty"};  // builtin names or files
  std::vector<std::string> methods;               // empty: all four
  MatchOptions options;
  CursorPolicy cursor_policy = CursorPolicy::kFirst;
  std::string output = "table";
};

struct BenchResult {
  EvalReport report;
  std::string rendered;
};

// Loads and sorts each dataset, evaluates datasets x layouts x methods and
// renders the report. Throws UsageError for unresolvable names and Error for
// load or evaluation failures.
BenchResult RunBench(const RunConfig& config,
                     const std::vector<DatasetSpec>& specs);

// Replays a comma separated event script over the dataset in file order.
std::string RunSimulate(const RunConfig& config, const DatasetSpec& spec,
                        const std::string& script);

// Entry point of the accelkey tool. Returns the process exit code.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace accelkey

#endif  // ACCELKEY_CLI_H_
