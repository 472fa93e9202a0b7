#ifndef ACCELKEY_MATCHER_H_
#define ACCELKEY_MATCHER_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "accelkey/constraint.h"
#include "accelkey/layout.h"

namespace accelkey {

struct MatchOptions {
  bool case_sensitive = false;
  // Continue across adjacent word boundaries.
  bool span_words = true;
  // After the last word, continue from the first one. Requires span_words.
  bool wrap = false;
  // Any word may start a match; otherwise only the first word.
  bool word_mode = false;

  bool operator==(const MatchOptions&) const = default;
};

// Significant letters of one word with their code point offsets into the
// entry's display text.
struct WordStream {
  std::u32string letters;
  std::vector<size_t> offsets;

  bool operator==(const WordStream&) const = default;
};

struct Entry {
  std::string display_text;
  std::vector<std::string> words;
  std::vector<WordStream> streams;  // parallel to words

  // All significant letters of the entry in order.
  std::u32string WholeStream() const;

  bool operator==(const Entry&) const = default;
};

// Splits raw text into words: maximal runs of letters significant under the
// layout. Everything else separates words and is skipped. Letters are folded
// to upper case unless options.case_sensitive.
Entry NormalizeEntry(std::string_view raw_text, const Layout& layout,
                     const MatchOptions& options);

bool Matches(const Entry& entry, const Prefix& prefix, const Layout& layout,
             const KeypadLayout& keypad, const MatchOptions& options);

// Witness for a match: the display-text offset satisfying each prefix
// position. Uses the leftmost matching start word. Empty for an empty prefix;
// nullopt when the entry does not match.
std::optional<std::vector<size_t>> MatchPositions(const Entry& entry,
                                                  const Prefix& prefix,
                                                  const Layout& layout,
                                                  const KeypadLayout& keypad,
                                                  const MatchOptions& options);

// Per direction, the group letters c for which prefix + Literal(c) still
// matches at least one entry. Letters keep the layout's group order.
using ViableLetters = std::array<std::vector<Letter>, 4>;

ViableLetters NextLetters(std::span<const Entry> entries, const Prefix& prefix,
                          const Layout& layout, const KeypadLayout& keypad,
                          const MatchOptions& options);

}  // namespace accelkey

#endif  // ACCELKEY_MATCHER_H_
