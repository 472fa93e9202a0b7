#include "accelkey/protocol.h"

#include <algorithm>
#include <numeric>

namespace accelkey {

namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

json LettersJson(const std::vector<Letter>& letters) {
  json out = json::array();
  for (Letter letter : letters) out.push_back(EncodeUtf8(letter));
  return out;
}

json ConstraintJson(const Constraint& constraint) {
  return std::visit(
      Overloaded{
          [](const DirectionGroup& c) {
            return json{{"kind", "direction"},
                        {"value", DirectionName(c.direction)}};
          },
          [](const KeypadGroup& c) {
            return json{{"kind", "keypad"}, {"value", std::string(1, c.key)}};
          },
          [](const Literal& c) {
            return json{{"kind", "literal"}, {"value", EncodeUtf8(c.letter)}};
          },
      },
      constraint);
}

bool OptionalBool(const json& object, const char* key, bool fallback) {
  if (!object.contains(key)) return fallback;
  if (!object[key].is_boolean()) {
    throw Error(std::string("option '") + key + "' must be a boolean");
  }
  return object[key].get<bool>();
}

const json& RequireString(const json& message, const char* key) {
  if (!message.contains(key) || !message[key].is_string()) {
    throw Error(std::string("missing string field '") + key + "'");
  }
  return message[key];
}

}  // namespace

DatasetCatalog::DatasetCatalog() {
  for (const std::string& name : Layout::BuiltinNames()) {
    AddLayout(Layout::Builtin(name));
  }
}

void DatasetCatalog::AddDataset(std::string name,
                                std::vector<std::string> entries) {
  std::vector<std::u32string> keys;
  for (const std::string& entry : entries) {
    std::u32string key = DecodeUtf8(entry);
    for (Letter& letter : key) letter = FoldCase(letter);
    keys.push_back(std::move(key));
  }
  std::vector<size_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&keys](size_t a, size_t b) { return keys[a] < keys[b]; });
  std::vector<std::string> sorted;
  sorted.reserve(entries.size());
  for (size_t index : order) sorted.push_back(std::move(entries[index]));
  datasets_.insert_or_assign(std::move(name), std::move(sorted));
}

void DatasetCatalog::AddLayout(Layout layout) {
  std::string name = layout.name();
  layouts_.insert_or_assign(std::move(name), std::move(layout));
}

const std::vector<std::string>* DatasetCatalog::FindDataset(
    std::string_view name) const {
  auto it = datasets_.find(name);
  return it == datasets_.end() ? nullptr : &it->second;
}

const Layout* DatasetCatalog::FindLayout(std::string_view name) const {
  auto it = layouts_.find(name);
  return it == layouts_.end() ? nullptr : &it->second;
}

std::vector<std::string> DatasetCatalog::DatasetNames() const {
  std::vector<std::string> names;
  for (const auto& [name, entries] : datasets_) names.push_back(name);
  return names;
}

std::vector<std::string> DatasetCatalog::LayoutNames() const {
  std::vector<std::string> names;
  for (const auto& [name, layout] : layouts_) names.push_back(name);
  return names;
}

json SnapshotJson(const Session& session) {
  const View view = session.GetView();
  json prefix = json::array();
  for (const Constraint& constraint : view.prefix) {
    prefix.push_back(ConstraintJson(constraint));
  }
  json entries = json::array();
  for (const ViewEntry& entry : view.entries) {
    entries.push_back({{"index", entry.index},
                       {"text", entry.text},
                       {"highlight", entry.highlights}});
  }
  json viable = json::object();
  json layout = {{"name", session.layout().name()}};
  for (Direction direction : kAllDirections) {
    const std::string name(DirectionName(direction));
    viable[name] = LettersJson(view.viable[static_cast<int>(direction)]);
    layout[name] = LettersJson(session.layout().group(direction));
  }
  return {{"type", "state"},
          {"mode", ModeName(view.mode)},
          {"prefix", prefix},
          {"entries", entries},
          {"cursor", view.cursor ? json(*view.cursor) : json(nullptr)},
          {"viable", viable},
          {"layout", layout},
          {"total", session.entries().size()}};
}

json ErrorMessage(std::string_view message) {
  return {{"type", "error"}, {"message", message}};
}

ProtocolSession::ProtocolSession(const DatasetCatalog& catalog,
                                 JitterConfig jitter)
    : catalog_(catalog), jitter_(jitter) {}

std::string ProtocolSession::HandleText(std::string_view text) {
  json message = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (message.is_discarded()) {
    return ErrorMessage("malformed message: not valid JSON").dump();
  }
  return Handle(message).dump();
}

json ProtocolSession::Handle(const json& message) {
  try {
    if (!message.is_object()) throw Error("message must be a JSON object");
    const std::string type = RequireString(message, "type").get<std::string>();
    if (type == "hello") return Hello(message);
    if (type != "event" && type != "trackball") {
      throw Error("unknown message type '" + type + "'");
    }
    if (!session_) throw Error("send 'hello' before '" + type + "'");
    if (type == "trackball") {
      if (!message.contains("dx") || !message["dx"].is_number() ||
          !message.contains("dy") || !message["dy"].is_number()) {
        throw Error("trackball needs numeric 'dx' and 'dy'");
      }
      const auto direction = TrackballToDirection(
          {message["dx"].get<double>(), message["dy"].get<double>()}, jitter_);
      if (!direction) return SnapshotJson(*session_);
      return ApplyEvent(DirectionalEvent{*direction});
    }
    return ApplyEvent(DecodeEvent(message));
  } catch (const Error& e) {
    return ErrorMessage(e.what());
  } catch (const json::exception& e) {
    return ErrorMessage(std::string("malformed message: ") + e.what());
  }
}

json ProtocolSession::Hello(const json& message) {
  std::vector<std::string> entries;
  if (message.contains("entries")) {
    if (!message["entries"].is_array()) {
      throw Error("'entries' must be an array of strings");
    }
    for (const json& item : message["entries"]) {
      if (!item.is_string()) {
        throw Error("'entries' must be an array of strings");
      }
      entries.push_back(item.get<std::string>());
    }
  } else {
    const std::string name =
        RequireString(message, "dataset").get<std::string>();
    const auto* dataset = catalog_.FindDataset(name);
    if (!dataset) throw Error("unknown dataset '" + name + "'");
    entries = *dataset;
  }
  const std::string layout_name =
      message.contains("layout")
          ? RequireString(message, "layout").get<std::string>()
          : "qwerty";
  const Layout* layout = catalog_.FindLayout(layout_name);
  if (!layout) throw Error("unknown layout '" + layout_name + "'");

  MatchOptions options;
  SessionConfig config;
  if (message.contains("options")) {
    const json& raw = message["options"];
    if (!raw.is_object()) throw Error("'options' must be an object");
    options.case_sensitive =
        OptionalBool(raw, "case_sensitive", options.case_sensitive);
    options.word_mode = OptionalBool(raw, "word_mode", options.word_mode);
    options.span_words = OptionalBool(raw, "span_words", options.span_words);
    options.wrap = OptionalBool(raw, "wrap", options.wrap);
    if (raw.contains("cursor")) {
      const auto policy =
          ParseCursorPolicy(RequireString(raw, "cursor").get<std::string>());
      if (!policy) throw Error("'cursor' must be 'first' or 'middle'");
      config.cursor_policy = *policy;
    }
  }
  session_ = Session::Create(entries, *layout, options, config);
  return SnapshotJson(*session_);
}

InputEvent ProtocolSession::DecodeEvent(const json& message) const {
  const std::string name = RequireString(message, "event").get<std::string>();
  if (auto direction = ParseDirection(name)) {
    return DirectionalEvent{*direction};
  }
  if (name == "select") return SelectEvent{};
  if (name == "backspace") return BackspaceEvent{};
  if (name == "reset") return ResetEvent{};
  if (name == "keypad") {
    const std::string key = RequireString(message, "key").get<std::string>();
    if (key.size() != 1) throw Error("unmapped key '" + key + "'");
    return KeypadToEvent(key.front());
  }
  if (name == "literal") {
    const std::u32string letter =
        DecodeUtf8(RequireString(message, "letter").get<std::string>());
    if (letter.size() != 1) {
      throw Error("'letter' must be a single character");
    }
    return KeyboardToEvent(letter.front(), session_->layout(),
                           session_->options().case_sensitive);
  }
  throw Error("unknown event '" + name + "'");
}

json ProtocolSession::ApplyEvent(const InputEvent& event) {
  const Outcome outcome = session_->Apply(event);
  switch (outcome.kind) {
    case Outcome::Kind::kContinue:
      return SnapshotJson(*session_);
    case Outcome::Kind::kSelected:
      return {{"type", "selected"},
              {"index", outcome.entry_index},
              {"text", session_->entries()[outcome.entry_index].display_text}};
    case Outcome::Kind::kRejected:
      return {{"type", "rejected"}, {"reason", outcome.reason}};
  }
  return ErrorMessage("internal: unknown outcome");
}

}  // namespace accelkey
