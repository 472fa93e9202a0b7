#ifndef ACCELKEY_CONSTRAINT_H_
#define ACCELKEY_CONSTRAINT_H_

#include <string>
#include <variant>
#include <vector>

#include "accelkey/layout.h"

namespace accelkey {

struct DirectionGroup {
  Direction direction;
  bool operator==(const DirectionGroup&) const = default;
};

struct KeypadGroup {
  char key;  // '2'..'9'
  bool operator==(const KeypadGroup&) const = default;
};

struct Literal {
  Letter letter;
  bool operator==(const Literal&) const = default;
};

// One input step of the prefix.
using Constraint = std::variant<DirectionGroup, KeypadGroup, Literal>;

// Ordered constraints entered so far.
using Prefix = std::vector<Constraint>;

// The letters a constraint admits. Throws Error("insignificant literal ...")
// for a literal outside the layout alphabet and Error("unmapped key ...") for
// keypad keys outside '2'..'9'.
std::vector<Letter> LetterSet(const Constraint& constraint,
                              const Layout& layout,
                              const KeypadLayout& keypad);

// Membership test used by the matcher. Direction and keypad constraints
// compare the folded letter; literals compare exactly when case_sensitive.
bool Accepts(const Constraint& constraint, Letter letter, const Layout& layout,
             const KeypadLayout& keypad, bool case_sensitive);

// "up", "7", "Z".
std::string ConstraintToken(const Constraint& constraint);

}  // namespace accelkey

#endif  // ACCELKEY_CONSTRAINT_H_
