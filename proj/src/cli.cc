#include "accelkey/cli.h"

#include <algorithm>
#include <csignal>
#include <sstream>

#include "CLI11.hpp"
#include "accelkey/demo_server.h"
#include "accelkey/protocol.h"
#include "accelkey/simulate.h"

namespace accelkey {

namespace {

Layout ResolveLayout(const std::string& name) {
  try {
    return Layout::Resolve(name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<Method> ResolveMethods(const std::vector<std::string>& names) {
  std::vector<Method> methods;
  if (names.empty()) return {std::begin(kAllMethods), std::end(kAllMethods)};
  for (const std::string& name : names) {
    const auto method = ParseMethod(name);
    if (!method) {
      throw UsageError("unknown method '" + name +
                       "' (valid: accelkey, scroll, multitap_first, "
                       "multitap_match)");
    }
    methods.push_back(*method);
  }
  return methods;
}

ReportFormat ResolveFormat(const std::string& name) {
  const auto format = ParseReportFormat(name);
  if (!format) {
    throw UsageError("unknown output format '" + name +
                     "' (valid: table, csv, json)");
  }
  return *format;
}

std::string DescribeLayout(const Layout& layout) {
  std::ostringstream out;
  out << layout.name() << '\n';
  for (Direction direction : {Direction::kUp, Direction::kLeft,
                              Direction::kRight, Direction::kDown}) {
    std::string label = std::string(DirectionName(direction)) + ":";
    label.resize(7, ' ');
    out << "  " << label;
    for (Letter letter : layout.group(direction)) {
      out << ' ' << EncodeUtf8(letter);
    }
    out << '\n';
  }
  return out.str();
}

struct DatasetFlags {
  std::vector<std::string> paths;
  std::string format = "lines";
  std::string csv_column;

  std::vector<DatasetSpec> Specs() const {
    if (format != "lines" && format != "csv") {
      throw UsageError("unknown dataset format '" + format +
                       "' (valid: lines, csv)");
    }
    if (format == "csv" && csv_column.empty()) {
      throw UsageError("--format csv needs --csv-column");
    }
    std::vector<DatasetSpec> specs;
    for (const std::string& path : paths) {
      DatasetSpec spec;
      spec.path = path;
      spec.format =
          format == "csv" ? DatasetFormat::kCsv : DatasetFormat::kLines;
      spec.csv_column = csv_column;
      specs.push_back(std::move(spec));
    }
    return specs;
  }
};

void AddDatasetFlags(CLI::App* command, DatasetFlags* flags) {
  command->add_option("--dataset", flags->paths, "Dataset file (repeatable)");
  command->add_option("--format", flags->format, "Dataset format: lines|csv");
  command->add_option("--csv-column", flags->csv_column,
                      "Column header to read in csv format");
}

void AddMatchFlags(CLI::App* command, RunConfig* config, bool* word_mode,
                   bool* span, bool* wrap) {
  command->add_flag("--word-mode", *word_mode,
                    "Let any word of an entry start a match");
  command->add_flag("--span-words", *span,
                    "Any word starts a match and matching continues into the "
                    "following words");
  command->add_flag("--wrap", *wrap,
                    "Like --span-words, continuing from the last word to the "
                    "first");
  command->add_flag("--case-sensitive", config->options.case_sensitive,
                    "Literal letters match case exactly");
}

void ApplyMatchFlags(RunConfig* config, bool word_mode, bool span,
                     bool wrap) {
  if (word_mode || span || wrap) {
    config->options.word_mode = true;
    config->options.span_words = span || wrap;
    config->options.wrap = wrap;
  }
}

CursorPolicy ResolveCursor(const std::string& name) {
  const auto policy = ParseCursorPolicy(name);
  if (!policy) {
    throw UsageError("unknown cursor policy '" + name +
                     "' (valid: first, middle)");
  }
  return *policy;
}

int Serve(const std::vector<DatasetSpec>& specs,
          const std::vector<std::string>& layouts, ServerOptions options,
          std::ostream& out) {
  DatasetCatalog catalog;
  for (const std::string& name : layouts) catalog.AddLayout(ResolveLayout(name));
  for (const DatasetSpec& spec : specs.empty() ? BundledDatasets() : specs) {
    catalog.AddDataset(spec.DisplayName(), LoadDataset(spec));
  }

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  DemoServer server(std::move(catalog), options);
  const uint16_t port = server.Start();
  out << "serving on http://" << options.address << ':' << port
      << "/ (WebSocket protocol on the same port); Ctrl-C to stop"
      << std::endl;
  int received = 0;
  sigwait(&signals, &received);
  server.Stop();
  return kExitOk;
}

}  // namespace

BenchResult RunBench(const RunConfig& config,
                     const std::vector<DatasetSpec>& specs) {
  std::vector<Layout> layouts;
  for (const std::string& name : config.layouts) {
    layouts.push_back(ResolveLayout(name));
  }
  const std::vector<Method> methods = ResolveMethods(config.methods);
  const ReportFormat format = ResolveFormat(config.output);

  std::vector<NamedDataset> datasets;
  for (const DatasetSpec& spec : specs) {
    datasets.push_back({spec.DisplayName(), LoadDataset(spec)});
  }
  BenchResult result;
  result.report = Compare(datasets, methods, layouts, KeypadLayout::Standard(),
                          config.cursor_policy);
  result.rendered = Render(result.report, format);
  return result;
}

std::string RunSimulate(const RunConfig& config, const DatasetSpec& spec,
                        const std::string& script) {
  if (config.layouts.size() != 1) {
    throw UsageError("simulate takes exactly one --layout");
  }
  Layout layout = ResolveLayout(config.layouts.front());
  if (config.options.wrap && !config.options.span_words) {
    throw UsageError("--wrap requires word spanning");
  }
  std::vector<InputEvent> events;
  try {
    events = ParseEventScript(script);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const std::vector<std::string> entries = LoadDataset(spec);
  Session session = Session::Create(entries, std::move(layout), config.options,
                                    SessionConfig{config.cursor_policy});
  return RunSimulation(session, events);
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"AccelKey 4-way list selection: benchmarks, replay and demo"};
  app.require_subcommand(1);

  RunConfig config;
  std::string cursor = "first";
  DatasetFlags dataset_flags;
  std::vector<std::string> layouts;
  std::string methods;
  bool word_mode = false;
  bool span = false;
  bool wrap = false;

  auto* bench = app.add_subcommand(
      "bench", "Average events per entry for each method and layout");
  AddDatasetFlags(bench, &dataset_flags);
  bench->add_option("--layout", layouts,
                    "abc, qwerty or a layout file (repeatable)");
  bench->add_option("--methods", methods,
                    "Comma separated: accelkey,scroll,multitap_first,"
                    "multitap_match");
  bench->add_option("--cursor", cursor, "Initial scrolling cursor");
  bench->add_option("--output", config.output, "table|csv|json");

  std::string script;
  auto* simulate = app.add_subcommand(
      "simulate", "Replay an event script and print a transcript");
  AddDatasetFlags(simulate, &dataset_flags);
  simulate->add_option("--layout", layouts, "abc, qwerty or a layout file");
  simulate->add_option("--cursor", cursor, "Initial scrolling cursor");
  simulate->add_option("--script", script,
                       "Events: U,D,L,R direction; S select; B backspace; "
                       "X reset; 2-9 keypad; a-z letters");
  AddMatchFlags(simulate, &config, &word_mode, &span, &wrap);

  auto* list_layouts =
      app.add_subcommand("layouts", "Print builtin and given layouts");
  list_layouts->add_option("--layout", layouts, "Extra layout file");

  ServerOptions server_options;
  double jitter = server_options.jitter.threshold;
  auto* serve =
      app.add_subcommand("serve", "Run the interactive demo server");
  AddDatasetFlags(serve, &dataset_flags);
  serve->add_option("--layout", layouts, "Extra layout file (repeatable)");
  serve->add_option("--port", server_options.port, "Listen port");
  serve->add_option("--address", server_options.address, "Listen address");
  serve->add_option("--static-dir", server_options.static_dir,
                    "Directory with the browser UI assets");
  serve->add_option("--jitter", jitter, "Trackball jitter threshold")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    config.cursor_policy = ResolveCursor(cursor);
    if (!methods.empty()) {
      std::stringstream stream(methods);
      std::string name;
      while (std::getline(stream, name, ',')) config.methods.push_back(name);
    }
    if (*bench) {
      if (!layouts.empty()) config.layouts = layouts;
      std::vector<DatasetSpec> specs = dataset_flags.Specs();
      if (specs.empty()) specs = BundledDatasets();
      out << RunBench(config, specs).rendered;
    } else if (*simulate) {
      if (!layouts.empty()) config.layouts = layouts;
      if (dataset_flags.paths.size() != 1) {
        throw UsageError("simulate needs exactly one --dataset");
      }
      ApplyMatchFlags(&config, word_mode, span, wrap);
      out << RunSimulate(config, dataset_flags.Specs().front(), script);
    } else if (*list_layouts) {
      const auto builtins = Layout::BuiltinNames();
      for (const std::string& name : builtins) {
        out << DescribeLayout(Layout::Builtin(name));
      }
      for (const std::string& name : layouts) {
        if (std::find(builtins.begin(), builtins.end(), name) !=
            builtins.end()) {
          continue;
        }
        out << DescribeLayout(ResolveLayout(name));
      }
    } else if (*serve) {
      server_options.jitter.threshold = jitter;
      return Serve(dataset_flags.Specs(), layouts, server_options, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace accelkey
