#include "accelkey/simulate.h"

#include <sstream>

namespace accelkey {

namespace {

std::string_view Trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::string Summary(const Session& session) {
  const SessionState& state = session.state();
  std::string prefix;
  for (const Constraint& constraint : state.prefix) {
    if (!prefix.empty()) prefix += ",";
    prefix += ConstraintToken(constraint);
  }
  std::string out = "mode=" + std::string(ModeName(state.mode)) +
                    " filtered=" + std::to_string(state.filtered.size()) +
                    " prefix=[" + prefix + "]";
  if (state.cursor) {
    out += " cursor=" + std::to_string(*state.cursor) + " \"" +
           session.entries()[state.filtered[*state.cursor]].display_text +
           "\"";
  }
  return out;
}

}  // namespace

std::vector<InputEvent> ParseEventScript(std::string_view script) {
  std::vector<InputEvent> events;
  if (Trim(script).empty()) return events;
  size_t position = 0;
  size_t start = 0;
  while (start <= script.size()) {
    size_t end = script.find(',', start);
    if (end == std::string_view::npos) end = script.size();
    const std::string_view token = Trim(script.substr(start, end - start));
    ++position;
    auto bad = [&] {
      return Error("unparseable token '" + std::string(token) +
                   "' at position " + std::to_string(position));
    };
    if (token.size() != 1) throw bad();
    const char c = token.front();
    switch (c) {
      case 'U':
        events.push_back(DirectionalEvent{Direction::kUp});
        break;
      case 'D':
        events.push_back(DirectionalEvent{Direction::kDown});
        break;
      case 'L':
        events.push_back(DirectionalEvent{Direction::kLeft});
        break;
      case 'R':
        events.push_back(DirectionalEvent{Direction::kRight});
        break;
      case 'S':
        events.push_back(SelectEvent{});
        break;
      case 'B':
        events.push_back(BackspaceEvent{});
        break;
      case 'X':
        events.push_back(ResetEvent{});
        break;
      default:
        if (KeypadLayout::IsKey(c)) {
          events.push_back(KeypadEvent{c});
        } else if (c >= 'a' && c <= 'z') {
          events.push_back(LiteralEvent{FoldCase(static_cast<Letter>(c))});
        } else {
          throw bad();
        }
    }
    start = end + 1;
  }
  return events;
}

std::string RunSimulation(Session& session,
                          const std::vector<InputEvent>& events) {
  std::ostringstream out;
  out << "start: " << Summary(session) << '\n';
  for (size_t i = 0; i < events.size(); ++i) {
    const Outcome outcome = session.Apply(events[i]);
    out << (i + 1) << ' ' << DescribeEvent(events[i]) << ": ";
    switch (outcome.kind) {
      case Outcome::Kind::kContinue:
        out << "continue " << Summary(session) << '\n';
        break;
      case Outcome::Kind::kRejected:
        out << "rejected (" << outcome.reason << ") " << Summary(session)
            << '\n';
        break;
      case Outcome::Kind::kSelected: {
        const std::string& text =
            session.entries()[outcome.entry_index].display_text;
        out << "selected \"" << text << "\"\n";
        if (i + 1 < events.size()) {
          out << "ignored " << (events.size() - i - 1)
              << " event(s) after selection\n";
        }
        out << "result: selected \"" << text << "\"\n";
        return out.str();
      }
    }
  }
  out << "result: pending " << Summary(session) << '\n';
  return out.str();
}

}  // namespace accelkey
