#include "accelkey/session.h"

#include <algorithm>

namespace accelkey {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

constexpr char kDeadEnd[] = "dead end";

}  // namespace

std::string_view ModeName(Mode mode) {
  return mode == Mode::kSelection ? "selection" : "scrolling";
}

std::string_view CursorPolicyName(CursorPolicy policy) {
  return policy == CursorPolicy::kFirst ? "first" : "middle";
}

std::optional<CursorPolicy> ParseCursorPolicy(std::string_view name) {
  if (name == "first") return CursorPolicy::kFirst;
  if (name == "middle") return CursorPolicy::kMiddle;
  return std::nullopt;
}

size_t InitialCursor(CursorPolicy policy, size_t size) {
  if (policy == CursorPolicy::kFirst || size == 0) return 0;
  return (size - 1) / 2;
}

Session::Session(std::shared_ptr<const Shared> shared)
    : shared_(std::move(shared)), state_(shared_->initial) {}

Session Session::Create(std::span<const std::string> raw_entries,
                        Layout layout, MatchOptions options,
                        SessionConfig config, const KeypadLayout& keypad) {
  if (raw_entries.empty()) throw Error("session needs at least one entry");
  if (options.wrap && !options.span_words) {
    throw Error("match option 'wrap' requires 'span_words'");
  }
  std::vector<Entry> entries;
  entries.reserve(raw_entries.size());
  for (const std::string& raw : raw_entries) {
    entries.push_back(NormalizeEntry(raw, layout, options));
  }
  SessionState initial;
  initial.filtered.resize(entries.size());
  for (size_t i = 0; i < entries.size(); ++i) initial.filtered[i] = i;
  auto shared = std::make_shared<Shared>(Shared{
      std::move(entries), std::move(layout), &keypad, options, config,
      std::move(initial)});
  return Session(std::move(shared));
}

void Session::Commit(SessionState next) {
  history_.push_back(std::move(state_));
  state_ = std::move(next);
}

Outcome Session::Extend(const Constraint& constraint) {
  if (const auto* literal = std::get_if<Literal>(&constraint)) {
    if (!layout().IsSignificant(literal->letter)) {
      return Outcome::Rejected("insignificant literal");
    }
  }
  if (const auto* key = std::get_if<KeypadGroup>(&constraint)) {
    if (!KeypadLayout::IsKey(key->key)) {
      return Outcome::Rejected("unmapped key");
    }
  }
  SessionState next;
  next.mode = Mode::kSelection;
  next.prefix = state_.prefix;
  next.prefix.push_back(constraint);
  for (size_t index : state_.filtered) {
    if (Matches(entries()[index], next.prefix, layout(), keypad(),
                options())) {
      next.filtered.push_back(index);
    }
  }
  if (next.filtered.empty()) return Outcome::Rejected(kDeadEnd);
  Commit(std::move(next));
  return Outcome::Continue();
}

Outcome Session::Select() {
  if (state_.mode == Mode::kScrolling) {
    return Outcome::Selected(state_.filtered[*state_.cursor]);
  }
  if (state_.filtered.size() == 1) {
    return Outcome::Selected(state_.filtered.front());
  }
  SessionState next = state_;
  next.mode = Mode::kScrolling;
  next.cursor = InitialCursor(config().cursor_policy, next.filtered.size());
  Commit(std::move(next));
  return Outcome::Continue();
}

Outcome Session::Apply(const InputEvent& event) {
  return std::visit(
      Overloaded{
          [&](const DirectionalEvent& e) {
            if (state_.mode == Mode::kSelection) {
              return Extend(DirectionGroup{e.direction});
            }
            SessionState next = state_;
            if (e.direction == Direction::kUp ||
                e.direction == Direction::kDown) {
              const size_t last = next.filtered.size() - 1;
              size_t cursor = *next.cursor;
              if (e.direction == Direction::kUp) {
                cursor = cursor == 0 ? 0 : cursor - 1;
              } else {
                cursor = std::min(cursor + 1, last);
              }
              next.cursor = cursor;
            } else {
              // Back to selection with the last used prefix.
              next.mode = Mode::kSelection;
              next.cursor.reset();
            }
            Commit(std::move(next));
            return Outcome::Continue();
          },
          [&](const SelectEvent&) { return Select(); },
          [&](const BackspaceEvent&) {
            if (!history_.empty()) {
              state_ = std::move(history_.back());
              history_.pop_back();
            }
            return Outcome::Continue();
          },
          [&](const ResetEvent&) {
            Commit(shared_->initial);
            return Outcome::Continue();
          },
          [&](const KeypadEvent& e) { return Extend(KeypadGroup{e.key}); },
          [&](const LiteralEvent& e) { return Extend(Literal{e.letter}); },
      },
      event);
}

View Session::GetView() const {
  View view;
  view.mode = state_.mode;
  view.prefix = state_.prefix;
  view.cursor = state_.cursor;
  view.entries.reserve(state_.filtered.size());
  std::vector<Entry> visible;
  visible.reserve(state_.filtered.size());
  for (size_t index : state_.filtered) {
    const Entry& entry = entries()[index];
    auto highlights =
        MatchPositions(entry, state_.prefix, layout(), keypad(), options());
    view.entries.push_back(
        ViewEntry{index, entry.display_text, highlights.value_or(std::vector<size_t>{})});
    visible.push_back(entry);
  }
  view.viable =
      NextLetters(visible, state_.prefix, layout(), keypad(), options());
  return view;
}

}  // namespace accelkey
