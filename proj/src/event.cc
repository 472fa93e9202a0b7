#include "accelkey/event.h"

namespace accelkey {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string DescribeEvent(const InputEvent& event) {
  return std::visit(
      Overloaded{
          [](const DirectionalEvent& e) {
            return std::string(DirectionName(e.direction));
          },
          [](const SelectEvent&) { return std::string("select"); },
          [](const BackspaceEvent&) { return std::string("backspace"); },
          [](const ResetEvent&) { return std::string("reset"); },
          [](const KeypadEvent& e) { return std::string("key ") + e.key; },
          [](const LiteralEvent& e) {
            return "literal " + EncodeUtf8(e.letter);
          },
      },
      event);
}

}  // namespace accelkey
