#include "accelkey/adapters.h"

#include <cmath>

namespace accelkey {

std::optional<Direction> TrackballToDirection(TrackballDelta delta,
                                              JitterConfig jitter) {
  if (std::hypot(delta.dx, delta.dy) < jitter.threshold) return std::nullopt;
  if (std::abs(delta.dx) > std::abs(delta.dy)) {
    return delta.dx > 0 ? Direction::kRight : Direction::kLeft;
  }
  return delta.dy > 0 ? Direction::kUp : Direction::kDown;
}

InputEvent KeypadToEvent(char key) {
  if (!KeypadLayout::IsKey(key)) {
    throw Error(std::string("unmapped key '") + key + "'");
  }
  return KeypadEvent{key};
}

InputEvent KeyboardToEvent(Letter letter, const Layout& layout,
                           bool case_sensitive) {
  if (!layout.IsSignificant(letter)) {
    throw Error("insignificant literal '" + EncodeUtf8(letter) + "'");
  }
  return LiteralEvent{case_sensitive ? letter : FoldCase(letter)};
}

}  // namespace accelkey
