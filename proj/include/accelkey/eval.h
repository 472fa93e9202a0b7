#ifndef ACCELKEY_EVAL_H_
#define ACCELKEY_EVAL_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "accelkey/layout.h"
#include "accelkey/session.h"

namespace accelkey {

// Event-count models for selecting one entry from a sorted list. Select
// presses are never counted: the scroll model then averages (n - 1) / 2 over
// a list of n entries.
enum class Method { kAccelKey, kScroll, kMultiTapFirst, kMultiTapMatch };

inline constexpr Method kAllMethods[] = {Method::kAccelKey, Method::kScroll,
                                         Method::kMultiTapFirst,
                                         Method::kMultiTapMatch};

std::string_view MethodName(Method method);
std::optional<Method> ParseMethod(std::string_view name);

// A dataset sorted case-insensitively (stable), with the whole-entry letter
// stream of each entry under one layout.
struct SortedDataset {
  std::string name;
  std::vector<std::string> texts;
  std::vector<std::u32string> streams;
};

SortedDataset PrepareDataset(std::string name,
                             std::span<const std::string> raw_entries,
                             const Layout& layout);

// Down presses from the first entry.
size_t CostScroll(const SortedDataset& dataset, size_t target);

// Presses to type `letter` with multi-tap. Throws Error for letters not on
// the keypad.
int MultiTapLetterCost(Letter letter, const KeypadLayout& keypad);

// Multi-tap the first letter, then scroll down from the first entry starting
// with it.
size_t CostMultiTapFirst(const SortedDataset& dataset, size_t target,
                         const KeypadLayout& keypad);

// Best stopping point: multi-tap k letters (cursor jumps to the first entry
// starting with them), then scroll.
size_t CostMultiTapMatch(const SortedDataset& dataset, size_t target,
                         const KeypadLayout& keypad);

// Best stopping point: k direction events following the target's stream,
// then scroll from the initial cursor within the filtered list.
size_t CostAccelKey(const SortedDataset& dataset, size_t target,
                    const Layout& layout,
                    CursorPolicy cursor_policy = CursorPolicy::kFirst);

std::vector<size_t> PerEntryCosts(const SortedDataset& dataset, Method method,
                                  const Layout& layout,
                                  const KeypadLayout& keypad,
                                  CursorPolicy cursor_policy);

// Mean per-entry cost. Throws Error for an empty dataset.
double AverageEvents(const SortedDataset& dataset, Method method,
                     const Layout& layout, const KeypadLayout& keypad,
                     CursorPolicy cursor_policy = CursorPolicy::kFirst);

struct NamedDataset {
  std::string name;
  std::vector<std::string> entries;
};

struct ReportRow {
  std::string dataset;
  Method method;
  std::string layout;
  double average;
  size_t count;
  std::vector<size_t> costs;

  bool operator==(const ReportRow&) const = default;
};

struct EvalReport {
  std::vector<ReportRow> rows;

  const ReportRow* Find(std::string_view dataset, Method method,
                        std::string_view layout) const;
  bool operator==(const EvalReport&) const = default;
};

// Cross product of datasets x layouts x methods. Datasets are sorted here.
// Rows come out in dataset, layout, method order regardless of the order in
// which the parallel evaluations finish.
EvalReport Compare(std::span<const NamedDataset> datasets,
                   std::span<const Method> methods,
                   std::span<const Layout> layouts,
                   const KeypadLayout& keypad = KeypadLayout::Standard(),
                   CursorPolicy cursor_policy = CursorPolicy::kFirst);

}  // namespace accelkey

#endif  // ACCELKEY_EVAL_H_
