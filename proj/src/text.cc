#include "accelkey/text.h"

namespace accelkey {

namespace {

constexpr Letter kReplacement = 0xFFFD;

int SequenceLength(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 0;
}

}  // namespace

std::u32string DecodeUtf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    const int length = SequenceLength(lead);
    if (length == 0 || i + length > text.size()) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (length == 1) {
      out.push_back(lead);
      ++i;
      continue;
    }
    Letter value = lead & (0x7F >> length);
    bool valid = true;
    for (int k = 1; k < length; ++k) {
      const auto next = static_cast<unsigned char>(text[i + k]);
      if ((next & 0xC0) != 0x80) {
        valid = false;
        break;
      }
      value = (value << 6) | (next & 0x3F);
    }
    // Reject overlong forms and surrogates.
    static constexpr Letter kMinForLength[] = {0, 0, 0x80, 0x800, 0x10000};
    if (!valid || value < kMinForLength[length] || value > 0x10FFFF ||
        (value >= 0xD800 && value <= 0xDFFF)) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(value);
    i += length;
  }
  return out;
}

std::string EncodeUtf8(Letter letter) {
  std::string out;
  if (letter < 0x80) {
    out.push_back(static_cast<char>(letter));
  } else if (letter < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (letter >> 6)));
    out.push_back(static_cast<char>(0x80 | (letter & 0x3F)));
  } else if (letter < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (letter >> 12)));
    out.push_back(static_cast<char>(0x80 | ((letter >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (letter & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (letter >> 18)));
    out.push_back(static_cast<char>(0x80 | ((letter >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((letter >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (letter & 0x3F)));
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view letters) {
  std::string out;
  for (Letter letter : letters) out += EncodeUtf8(letter);
  return out;
}

Letter FoldCase(Letter letter) {
  if (letter >= U'a' && letter <= U'z') return letter - 0x20;
  if (letter < 0x80) return letter;
  // Latin-1 lower case, excluding the division sign.
  if (letter >= 0xE0 && letter <= 0xFE && letter != 0xF7) return letter - 0x20;
  // Greek, excluding final sigma which folds to capital sigma.
  if (letter == 0x3C2) return 0x3A3;
  if (letter >= 0x3B1 && letter <= 0x3C9) return letter - 0x20;
  // Cyrillic.
  if (letter >= 0x430 && letter <= 0x44F) return letter - 0x20;
  if (letter >= 0x450 && letter <= 0x45F) return letter - 0x50;
  return letter;
}

}  // namespace accelkey
