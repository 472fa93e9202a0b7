#ifndef ACCELKEY_SIMULATE_H_
#define ACCELKEY_SIMULATE_H_

#include <string>
#include <string_view>
#include <vector>

#include "accelkey/event.h"
#include "accelkey/session.h"

namespace accelkey {

// Comma separated tokens: U D L R (directions), S select, B backspace,
// X reset, 2-9 keypad keys, a-z literal letters. Throws Error naming the
// 1-based position of the first bad token.
std::vector<InputEvent> ParseEventScript(std::string_view script);

// Replays events through the session, one transcript line per event, and
// stops at the first selection.
std::string RunSimulation(Session& session,
                          const std::vector<InputEvent>& events);

}  // namespace accelkey

#endif  // ACCELKEY_SIMULATE_H_
