#ifndef ACCELKEY_EVENT_H_
#define ACCELKEY_EVENT_H_

#include <string>
#include <variant>

#include "accelkey/layout.h"

namespace accelkey {

struct DirectionalEvent {
  Direction direction;
  bool operator==(const DirectionalEvent&) const = default;
};
struct SelectEvent {
  bool operator==(const SelectEvent&) const = default;
};
struct BackspaceEvent {
  bool operator==(const BackspaceEvent&) const = default;
};
struct ResetEvent {
  bool operator==(const ResetEvent&) const = default;
};
struct KeypadEvent {
  char key;  // '2'..'9'
  bool operator==(const KeypadEvent&) const = default;
};
struct LiteralEvent {
  Letter letter;
  bool operator==(const LiteralEvent&) const = default;
};

using InputEvent = std::variant<DirectionalEvent, SelectEvent, BackspaceEvent,
                                ResetEvent, KeypadEvent, LiteralEvent>;

// "up", "select", "backspace", "reset", "key 7", "literal Z".
std::string DescribeEvent(const InputEvent& event);

}  // namespace accelkey

#endif  // ACCELKEY_EVENT_H_
