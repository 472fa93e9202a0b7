#include "accelkey/layout.h"

#include <fstream>
#include <sstream>

namespace accelkey {

namespace {

std::vector<Letter> Letters(std::u32string_view text) {
  return {text.begin(), text.end()};
}

std::string Describe(Letter letter) { return "'" + EncodeUtf8(letter) + "'"; }

}  // namespace

std::string_view DirectionName(Direction direction) {
  switch (direction) {
    case Direction::kUp:
      return "up";
    case Direction::kDown:
      return "down";
    case Direction::kLeft:
      return "left";
    case Direction::kRight:
      return "right";
  }
  return "?";
}

std::optional<Direction> ParseDirection(std::string_view name) {
  for (Direction direction : kAllDirections) {
    if (DirectionName(direction) == name) return direction;
  }
  return std::nullopt;
}

Layout Layout::Create(std::string name, const Groups& groups) {
  Layout layout;
  layout.name_ = std::move(name);
  for (Direction direction : kAllDirections) {
    auto& target = layout.groups_[static_cast<int>(direction)];
    for (Letter raw : groups[static_cast<int>(direction)]) {
      const Letter letter = FoldCase(raw);
      auto [it, inserted] = layout.direction_of_.emplace(letter, direction);
      if (!inserted) {
        if (it->second == direction) continue;
        throw Error("layout '" + layout.name_ + "': letter " +
                    Describe(letter) + " assigned to both " +
                    std::string(DirectionName(it->second)) + " and " +
                    std::string(DirectionName(direction)));
      }
      target.push_back(letter);
      layout.alphabet_.push_back(letter);
    }
  }
  if (layout.alphabet_.empty()) {
    throw Error("layout '" + layout.name_ + "' has an empty alphabet");
  }
  return layout;
}

Layout Layout::Builtin(std::string_view name) {
  Groups groups;
  auto set = [&groups](Direction d, std::u32string_view letters) {
    groups[static_cast<int>(d)] = Letters(letters);
  };
  if (name == "abc") {
    set(Direction::kUp, U"ABCDEFG");
    set(Direction::kLeft, U"HIJKLMN");
    set(Direction::kRight, U"OPQRSTU");
    set(Direction::kDown, U"VWXYZ");
  } else if (name == "qwerty") {
    set(Direction::kUp, U"QWERTYUIOP");
    set(Direction::kLeft, U"ASDFG");
    set(Direction::kRight, U"HJKL");
    set(Direction::kDown, U"ZXCVBNM");
  } else {
    throw Error("unknown layout '" + std::string(name) +
                "' (valid choices: abc, qwerty, or a layout file path)");
  }
  return Create(std::string(name), groups);
}

std::vector<std::string> Layout::BuiltinNames() { return {"abc", "qwerty"}; }

Layout Layout::Parse(std::string name, std::string_view text) {
  Groups groups;
  std::array<bool, 4> seen{};
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':', first);
    if (colon == std::string::npos) {
      throw Error("layout '" + name + "' line " + std::to_string(line_number) +
                  ": expected '<direction>: <letters>'");
    }
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) {
      key.pop_back();
    }
    const auto direction = ParseDirection(key);
    if (!direction) {
      throw Error("layout '" + name + "' line " + std::to_string(line_number) +
                  ": unknown direction '" + key + "'");
    }
    const int slot = static_cast<int>(*direction);
    if (seen[slot]) {
      throw Error("layout '" + name + "': direction '" + key +
                  "' defined twice");
    }
    seen[slot] = true;
    for (Letter letter : DecodeUtf8(std::string_view(line).substr(colon + 1))) {
      if (letter == U' ' || letter == U'\t' || letter == U',') continue;
      groups[slot].push_back(letter);
    }
  }
  for (Direction direction : kAllDirections) {
    if (!seen[static_cast<int>(direction)]) {
      throw Error("layout '" + name + "': missing '" +
                  std::string(DirectionName(direction)) + ":' line");
    }
  }
  return Create(std::move(name), groups);
}

Layout Layout::LoadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read layout file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Parse(path.stem().string(), buffer.str());
}

Layout Layout::Resolve(std::string_view name_or_path) {
  for (const auto& builtin : BuiltinNames()) {
    if (builtin == name_or_path) return Builtin(name_or_path);
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(name_or_path, ec)) {
    return LoadFile(name_or_path);
  }
  // Reports the valid choices.
  return Builtin(name_or_path);
}

std::optional<Direction> Layout::DirectionOf(Letter letter) const {
  auto it = direction_of_.find(FoldCase(letter));
  if (it == direction_of_.end()) return std::nullopt;
  return it->second;
}

KeypadLayout::KeypadLayout() {
  static constexpr std::u32string_view kGroups[] = {
      U"ABC", U"DEF", U"GHI", U"JKL", U"MNO", U"PQRS", U"TUV", U"WXYZ"};
  for (int slot = 0; slot < 8; ++slot) {
    groups_[slot] = Letters(kGroups[slot]);
    for (size_t i = 0; i < kGroups[slot].size(); ++i) {
      index_.emplace(kGroups[slot][i],
                     std::pair{static_cast<char>('2' + slot),
                               static_cast<int>(i) + 1});
    }
  }
}

const KeypadLayout& KeypadLayout::Standard() {
  static const KeypadLayout keypad;
  return keypad;
}

const std::vector<Letter>& KeypadLayout::group(char key) const {
  if (!IsKey(key)) {
    throw Error(std::string("unmapped key '") + key + "'");
  }
  return groups_[key - '2'];
}

std::optional<char> KeypadLayout::KeyOf(Letter letter) const {
  auto it = index_.find(FoldCase(letter));
  if (it == index_.end()) return std::nullopt;
  return it->second.first;
}

std::optional<int> KeypadLayout::PressCount(Letter letter) const {
  auto it = index_.find(FoldCase(letter));
  if (it == index_.end()) return std::nullopt;
  return it->second.second;
}

}  // namespace accelkey
