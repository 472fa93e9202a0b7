#include "accelkey/eval.h"

#include <algorithm>
#include <future>
#include <numeric>

#include "accelkey/matcher.h"

namespace accelkey {

namespace {

void CheckTarget(const SortedDataset& dataset, size_t target) {
  if (target >= dataset.streams.size()) {
    throw Error("target index " + std::to_string(target) +
                " out of range for dataset '" + dataset.name + "' of size " +
                std::to_string(dataset.streams.size()));
  }
}

size_t Distance(size_t a, size_t b) { return a > b ? a - b : b - a; }

// Index of the first entry whose stream starts with the first `length`
// letters of the target's stream.
size_t FirstWithPrefix(const SortedDataset& dataset, size_t target,
                       size_t length) {
  const std::u32string_view wanted =
      std::u32string_view(dataset.streams[target]).substr(0, length);
  for (size_t i = 0; i < dataset.streams.size(); ++i) {
    if (dataset.streams[i].starts_with(wanted)) return i;
  }
  return target;
}

}  // namespace

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kAccelKey:
      return "accelkey";
    case Method::kScroll:
      return "scroll";
    case Method::kMultiTapFirst:
      return "multitap_first";
    case Method::kMultiTapMatch:
      return "multitap_match";
  }
  return "?";
}

std::optional<Method> ParseMethod(std::string_view name) {
  for (Method method : kAllMethods) {
    if (MethodName(method) == name) return method;
  }
  return std::nullopt;
}

SortedDataset PrepareDataset(std::string name,
                             std::span<const std::string> raw_entries,
                             const Layout& layout) {
  std::vector<std::u32string> keys;
  keys.reserve(raw_entries.size());
  for (const std::string& raw : raw_entries) {
    std::u32string key = DecodeUtf8(raw);
    for (Letter& letter : key) letter = FoldCase(letter);
    keys.push_back(std::move(key));
  }
  std::vector<size_t> order(raw_entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&keys](size_t a, size_t b) { return keys[a] < keys[b]; });

  SortedDataset dataset;
  dataset.name = std::move(name);
  for (size_t index : order) {
    dataset.texts.push_back(raw_entries[index]);
    dataset.streams.push_back(
        NormalizeEntry(raw_entries[index], layout, MatchOptions{})
            .WholeStream());
  }
  return dataset;
}

size_t CostScroll(const SortedDataset& dataset, size_t target) {
  CheckTarget(dataset, target);
  return target;
}

int MultiTapLetterCost(Letter letter, const KeypadLayout& keypad) {
  const auto presses = keypad.PressCount(letter);
  if (!presses) {
    throw Error("unmapped letter '" + EncodeUtf8(letter) +
                "' (not on the keypad)");
  }
  return *presses;
}

size_t CostMultiTapFirst(const SortedDataset& dataset, size_t target,
                         const KeypadLayout& keypad) {
  CheckTarget(dataset, target);
  const std::u32string& stream = dataset.streams[target];
  if (stream.empty()) {
    throw Error("entry '" + dataset.texts[target] +
                "' has no significant letters");
  }
  const size_t typed = MultiTapLetterCost(stream.front(), keypad);
  return typed + (target - FirstWithPrefix(dataset, target, 1));
}

size_t CostMultiTapMatch(const SortedDataset& dataset, size_t target,
                         const KeypadLayout& keypad) {
  CheckTarget(dataset, target);
  const std::u32string& stream = dataset.streams[target];
  size_t best = target;  // k = 0: scroll from the first entry
  size_t typed = 0;
  for (size_t k = 1; k <= stream.size(); ++k) {
    typed += MultiTapLetterCost(stream[k - 1], keypad);
    if (typed >= best) break;
    best = std::min(best,
                    typed + Distance(target, FirstWithPrefix(dataset, target, k)));
  }
  return best;
}

size_t CostAccelKey(const SortedDataset& dataset, size_t target,
                    const Layout& layout, CursorPolicy cursor_policy) {
  CheckTarget(dataset, target);
  const std::u32string& stream = dataset.streams[target];
  std::vector<Direction> wanted;
  for (Letter letter : stream) wanted.push_back(*layout.DirectionOf(letter));

  // Entries still matching after k direction events.
  std::vector<size_t> filtered(dataset.streams.size());
  std::iota(filtered.begin(), filtered.end(), 0);
  size_t best = SIZE_MAX;
  for (size_t k = 0;; ++k) {
    if (k > 0) {
      std::erase_if(filtered, [&](size_t i) {
        const std::u32string& s = dataset.streams[i];
        return s.size() < k || layout.DirectionOf(s[k - 1]) != wanted[k - 1];
      });
    }
    const size_t position =
        std::find(filtered.begin(), filtered.end(), target) - filtered.begin();
    const size_t cursor = InitialCursor(cursor_policy, filtered.size());
    best = std::min(best, k + Distance(position, cursor));
    if (k == wanted.size() || k + 1 >= best) break;
  }
  return best;
}

std::vector<size_t> PerEntryCosts(const SortedDataset& dataset, Method method,
                                  const Layout& layout,
                                  const KeypadLayout& keypad,
                                  CursorPolicy cursor_policy) {
  std::vector<size_t> costs(dataset.streams.size());
  for (size_t target = 0; target < costs.size(); ++target) {
    switch (method) {
      case Method::kAccelKey:
        costs[target] = CostAccelKey(dataset, target, layout, cursor_policy);
        break;
      case Method::kScroll:
        costs[target] = CostScroll(dataset, target);
        break;
      case Method::kMultiTapFirst:
        costs[target] = CostMultiTapFirst(dataset, target, keypad);
        break;
      case Method::kMultiTapMatch:
        costs[target] = CostMultiTapMatch(dataset, target, keypad);
        break;
    }
  }
  return costs;
}

double AverageEvents(const SortedDataset& dataset, Method method,
                     const Layout& layout, const KeypadLayout& keypad,
                     CursorPolicy cursor_policy) {
  if (dataset.streams.empty()) {
    throw Error("dataset '" + dataset.name + "' is empty");
  }
  const auto costs =
      PerEntryCosts(dataset, method, layout, keypad, cursor_policy);
  const double total = std::accumulate(costs.begin(), costs.end(), 0.0);
  return total / static_cast<double>(costs.size());
}

const ReportRow* EvalReport::Find(std::string_view dataset, Method method,
                                  std::string_view layout) const {
  for (const ReportRow& row : rows) {
    if (row.dataset == dataset && row.method == method &&
        row.layout == layout) {
      return &row;
    }
  }
  return nullptr;
}

EvalReport Compare(std::span<const NamedDataset> datasets,
                   std::span<const Method> methods,
                   std::span<const Layout> layouts,
                   const KeypadLayout& keypad, CursorPolicy cursor_policy) {
  EvalReport report;
  if (methods.empty() || layouts.empty()) return report;

  std::vector<std::future<std::vector<ReportRow>>> pending;
  for (const NamedDataset& named : datasets) {
    for (const Layout& layout : layouts) {
      pending.push_back(std::async(std::launch::async, [&, methods] {
        if (named.entries.empty()) {
          throw Error("dataset '" + named.name + "' is empty");
        }
        const SortedDataset dataset =
            PrepareDataset(named.name, named.entries, layout);
        std::vector<ReportRow> rows;
        for (Method method : methods) {
          ReportRow row{named.name, method, layout.name(), 0.0,
                        dataset.streams.size(),
                        PerEntryCosts(dataset, method, layout, keypad,
                                      cursor_policy)};
          const double total =
              std::accumulate(row.costs.begin(), row.costs.end(), 0.0);
          row.average = total / static_cast<double>(row.count);
          rows.push_back(std::move(row));
        }
        return rows;
      }));
    }
  }
  for (auto& future : pending) {
    for (ReportRow& row : future.get()) report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace accelkey
