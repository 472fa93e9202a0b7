#ifndef ACCELKEY_TEXT_H_
#define ACCELKEY_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace accelkey {

// A single character of an entry or layout, as a Unicode code point.
using Letter = char32_t;

// Decodes UTF-8. Malformed sequences decode to U+FFFD one byte at a time.
std::u32string DecodeUtf8(std::string_view text);

std::string EncodeUtf8(Letter letter);
std::string EncodeUtf8(std::u32string_view letters);

// Simple one-to-one upper-casing. Covers ASCII, Latin-1, Greek and the
// basic Cyrillic block; everything else is returned unchanged.
Letter FoldCase(Letter letter);

}  // namespace accelkey

#endif  // ACCELKEY_TEXT_H_
