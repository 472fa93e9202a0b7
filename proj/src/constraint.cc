#include "accelkey/constraint.h"

namespace accelkey {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::vector<Letter> LetterSet(const Constraint& constraint,
                              const Layout& layout,
                              const KeypadLayout& keypad) {
  return std::visit(
      Overloaded{
          [&](const DirectionGroup& c) { return layout.group(c.direction); },
          [&](const KeypadGroup& c) { return keypad.group(c.key); },
          [&](const Literal& c) {
            if (!layout.IsSignificant(c.letter)) {
              throw Error("insignificant literal '" + EncodeUtf8(c.letter) +
                          "' (not in layout '" + layout.name() + "')");
            }
            return std::vector<Letter>{c.letter};
          },
      },
      constraint);
}

bool Accepts(const Constraint& constraint, Letter letter, const Layout& layout,
             const KeypadLayout& keypad, bool case_sensitive) {
  return std::visit(
      Overloaded{
          [&](const DirectionGroup& c) {
            return layout.DirectionOf(letter) == c.direction;
          },
          [&](const KeypadGroup& c) { return keypad.KeyOf(letter) == c.key; },
          [&](const Literal& c) {
            return case_sensitive ? c.letter == letter
                                  : FoldCase(c.letter) == FoldCase(letter);
          },
      },
      constraint);
}

std::string ConstraintToken(const Constraint& constraint) {
  return std::visit(
      Overloaded{
          [](const DirectionGroup& c) {
            return std::string(DirectionName(c.direction));
          },
          [](const KeypadGroup& c) { return std::string(1, c.key); },
          [](const Literal& c) { return EncodeUtf8(c.letter); },
      },
      constraint);
}

}  // namespace accelkey
