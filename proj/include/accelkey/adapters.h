#ifndef ACCELKEY_ADAPTERS_H_
#define ACCELKEY_ADAPTERS_H_

#include <optional>

#include "accelkey/event.h"
#include "accelkey/layout.h"

namespace accelkey {

// Trackball motion: dx negative left / positive right, dy negative down /
// positive up.
struct TrackballDelta {
  double dx = 0;
  double dy = 0;
};

struct JitterConfig {
  double threshold = 2.0;
};

// Deltas with magnitude below the threshold are jitter and yield nullopt.
// Otherwise the dominant axis picks the direction; ties go vertical.
std::optional<Direction> TrackballToDirection(TrackballDelta delta,
                                              JitterConfig jitter = {});

// Throws Error("unmapped key ...") for keys outside '2'..'9'.
InputEvent KeypadToEvent(char key);

// Folds case unless case_sensitive. Throws Error("insignificant literal ...")
// when the letter is not in the layout alphabet.
InputEvent KeyboardToEvent(Letter letter, const Layout& layout,
                           bool case_sensitive = false);

}  // namespace accelkey

#endif  // ACCELKEY_ADAPTERS_H_
