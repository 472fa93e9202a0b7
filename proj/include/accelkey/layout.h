#ifndef ACCELKEY_LAYOUT_H_
#define ACCELKEY_LAYOUT_H_

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "accelkey/text.h"

namespace accelkey {

// Thrown for contract violations on user-supplied input: unknown names,
// malformed layouts, letters outside an alphabet.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Direction { kUp = 0, kDown = 1, kLeft = 2, kRight = 3 };

inline constexpr std::array<Direction, 4> kAllDirections = {
    Direction::kUp, Direction::kDown, Direction::kLeft, Direction::kRight};

std::string_view DirectionName(Direction direction);
std::optional<Direction> ParseDirection(std::string_view name);

// Assignment of letters to the four directional events. Groups are pairwise
// disjoint; letters are stored case-folded.
class Layout {
 public:
  using Groups = std::array<std::vector<Letter>, 4>;

  // Throws Error if groups overlap or the alphabet is empty.
  static Layout Create(std::string name, const Groups& groups);

  // Builtin layouts: "abc" and "qwerty".
  static Layout Builtin(std::string_view name);
  static std::vector<std::string> BuiltinNames();

  // Parses the layout definition format: lines "up:", "left:", "right:",
  // "down:" each followed by a run of letters. Blank lines and lines starting
  // with '#' are ignored, as are spaces and commas between letters.
  static Layout Parse(std::string name, std::string_view text);
  static Layout LoadFile(const std::filesystem::path& path);

  // A builtin name or a path to a layout file.
  static Layout Resolve(std::string_view name_or_path);

  const std::string& name() const { return name_; }
  const std::vector<Letter>& group(Direction direction) const {
    return groups_[static_cast<int>(direction)];
  }
  const std::vector<Letter>& alphabet() const { return alphabet_; }

  // Case-insensitive: the letter is folded before lookup.
  std::optional<Direction> DirectionOf(Letter letter) const;
  bool IsSignificant(Letter letter) const {
    return DirectionOf(letter).has_value();
  }

 private:
  Layout() = default;

  std::string name_;
  Groups groups_;
  std::vector<Letter> alphabet_;
  std::unordered_map<Letter, Direction> direction_of_;
};

// Phone keypad groups for keys '2'..'9'. Letter order within a group is the
// multi-tap press order.
class KeypadLayout {
 public:
  // ITU E.161 grouping: 2 ABC, 3 DEF, 4 GHI, 5 JKL, 6 MNO, 7 PQRS, 8 TUV,
  // 9 WXYZ.
  static const KeypadLayout& Standard();

  static bool IsKey(char key) { return key >= '2' && key <= '9'; }

  // Throws Error for keys outside '2'..'9'.
  const std::vector<Letter>& group(char key) const;

  // Case-insensitive.
  std::optional<char> KeyOf(Letter letter) const;
  // 1-based position of the letter within its key group.
  std::optional<int> PressCount(Letter letter) const;

 private:
  KeypadLayout();

  std::array<std::vector<Letter>, 8> groups_;
  std::unordered_map<Letter, std::pair<char, int>> index_;
};

}  // namespace accelkey

#endif  // ACCELKEY_LAYOUT_H_
