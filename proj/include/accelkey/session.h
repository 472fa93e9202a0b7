#ifndef ACCELKEY_SESSION_H_
#define ACCELKEY_SESSION_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "accelkey/constraint.h"
#include "accelkey/event.h"
#include "accelkey/layout.h"
#include "accelkey/matcher.h"

namespace accelkey {

enum class Mode { kSelection, kScrolling };

std::string_view ModeName(Mode mode);

// Where the cursor lands when scrolling mode is entered.
enum class CursorPolicy { kFirst, kMiddle };

std::string_view CursorPolicyName(CursorPolicy policy);
std::optional<CursorPolicy> ParseCursorPolicy(std::string_view name);

// Initial cursor index in a filtered list of `size` entries.
size_t InitialCursor(CursorPolicy policy, size_t size);

struct SessionConfig {
  CursorPolicy cursor_policy = CursorPolicy::kFirst;
};

struct Outcome {
  enum class Kind { kContinue, kSelected, kRejected };

  static Outcome Continue() { return {Kind::kContinue, 0, {}}; }
  static Outcome Selected(size_t index) { return {Kind::kSelected, index, {}}; }
  static Outcome Rejected(std::string reason) {
    return {Kind::kRejected, 0, std::move(reason)};
  }

  Kind kind;
  size_t entry_index;  // kSelected only
  std::string reason;  // kRejected only

  bool operator==(const Outcome&) const = default;
};

struct SessionState {
  Mode mode = Mode::kSelection;
  Prefix prefix;
  // Indices into the session's entries matching the prefix, in entry order.
  std::vector<size_t> filtered;
  // Position within `filtered`; present only in scrolling mode.
  std::optional<size_t> cursor;

  bool operator==(const SessionState&) const = default;
};

struct ViewEntry {
  size_t index;
  std::string text;
  // Code point offsets into text, one per prefix constraint.
  std::vector<size_t> highlights;

  bool operator==(const ViewEntry&) const = default;
};

struct View {
  Mode mode;
  Prefix prefix;
  std::vector<ViewEntry> entries;
  std::optional<size_t> cursor;
  ViableLetters viable;

  bool operator==(const View&) const = default;
};

// The live selection state machine. Single-writer; copies are independent
// and share the immutable entry list.
class Session {
 public:
  // Entries keep the given order. Throws Error for an empty entry list or
  // options with wrap but not span_words.
  static Session Create(std::span<const std::string> raw_entries,
                        Layout layout, MatchOptions options = {},
                        SessionConfig config = {},
                        const KeypadLayout& keypad = KeypadLayout::Standard());

  Outcome Apply(const InputEvent& event);

  View GetView() const;

  const SessionState& state() const { return state_; }
  bool at_initial_state() const { return history_.empty(); }
  const std::vector<Entry>& entries() const { return shared_->entries; }
  const Layout& layout() const { return shared_->layout; }
  const KeypadLayout& keypad() const { return *shared_->keypad; }
  const MatchOptions& options() const { return shared_->options; }
  const SessionConfig& config() const { return shared_->config; }

 private:
  struct Shared {
    std::vector<Entry> entries;
    Layout layout;
    const KeypadLayout* keypad;
    MatchOptions options;
    SessionConfig config;
    SessionState initial;
  };

  explicit Session(std::shared_ptr<const Shared> shared);

  Outcome Extend(const Constraint& constraint);
  Outcome Select();
  void Commit(SessionState next);

  std::shared_ptr<const Shared> shared_;
  SessionState state_;
  std::vector<SessionState> history_;
};

}  // namespace accelkey

#endif  // ACCELKEY_SESSION_H_
