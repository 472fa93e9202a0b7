#include "accelkey/matcher.h"

#include <unordered_set>

namespace accelkey {

namespace {

// Walks the letter sequence that starts at the first letter of `start_word`,
// following the spanning and wrap rules, without ever returning to
// `start_word`.
class StreamCursor {
 public:
  StreamCursor(const Entry& entry, size_t start_word,
               const MatchOptions& options)
      : entry_(entry), options_(options), start_(start_word),
        word_(start_word) {}

  // Returns false when the sequence is exhausted.
  bool Next(Letter* letter, size_t* offset) {
    while (index_ == entry_.streams[word_].letters.size()) {
      if (!options_.span_words) return false;
      size_t next = word_ + 1;
      if (next == entry_.streams.size()) {
        if (!options_.wrap) return false;
        next = 0;
      }
      if (next == start_) return false;
      word_ = next;
      index_ = 0;
    }
    const WordStream& stream = entry_.streams[word_];
    *letter = stream.letters[index_];
    *offset = stream.offsets[index_];
    ++index_;
    return true;
  }

 private:
  const Entry& entry_;
  const MatchOptions& options_;
  const size_t start_;
  size_t word_;
  size_t index_ = 0;
};

size_t StartWordCount(const Entry& entry, const MatchOptions& options) {
  if (entry.streams.empty()) return 0;
  return options.word_mode ? entry.streams.size() : 1;
}

// Matches prefix from one start word. On success, the cursor is left just
// after the last consumed letter.
bool MatchFrom(StreamCursor& cursor, const Prefix& prefix,
               const Layout& layout, const KeypadLayout& keypad,
               const MatchOptions& options, std::vector<size_t>* offsets) {
  for (const Constraint& constraint : prefix) {
    Letter letter;
    size_t offset;
    if (!cursor.Next(&letter, &offset)) return false;
    if (!Accepts(constraint, letter, layout, keypad, options.case_sensitive)) {
      return false;
    }
    if (offsets) offsets->push_back(offset);
  }
  return true;
}

}  // namespace

std::u32string Entry::WholeStream() const {
  std::u32string out;
  for (const WordStream& stream : streams) out += stream.letters;
  return out;
}

Entry NormalizeEntry(std::string_view raw_text, const Layout& layout,
                     const MatchOptions& options) {
  Entry entry;
  entry.display_text = std::string(raw_text);
  const std::u32string decoded = DecodeUtf8(raw_text);
  bool in_word = false;
  for (size_t offset = 0; offset < decoded.size(); ++offset) {
    const Letter raw = decoded[offset];
    if (!layout.IsSignificant(raw)) {
      in_word = false;
      continue;
    }
    if (!in_word) {
      entry.streams.emplace_back();
      in_word = true;
    }
    WordStream& stream = entry.streams.back();
    stream.letters.push_back(options.case_sensitive ? raw : FoldCase(raw));
    stream.offsets.push_back(offset);
  }
  for (const WordStream& stream : entry.streams) {
    entry.words.push_back(EncodeUtf8(stream.letters));
  }
  return entry;
}

bool Matches(const Entry& entry, const Prefix& prefix, const Layout& layout,
             const KeypadLayout& keypad, const MatchOptions& options) {
  if (prefix.empty()) return true;
  const size_t starts = StartWordCount(entry, options);
  for (size_t start = 0; start < starts; ++start) {
    StreamCursor cursor(entry, start, options);
    if (MatchFrom(cursor, prefix, layout, keypad, options, nullptr)) {
      return true;
    }
  }
  return false;
}

std::optional<std::vector<size_t>> MatchPositions(const Entry& entry,
                                                  const Prefix& prefix,
                                                  const Layout& layout,
                                                  const KeypadLayout& keypad,
                                                  const MatchOptions& options) {
  if (prefix.empty()) return std::vector<size_t>{};
  const size_t starts = StartWordCount(entry, options);
  for (size_t start = 0; start < starts; ++start) {
    StreamCursor cursor(entry, start, options);
    std::vector<size_t> offsets;
    offsets.reserve(prefix.size());
    if (MatchFrom(cursor, prefix, layout, keypad, options, &offsets)) {
      return offsets;
    }
  }
  return std::nullopt;
}

ViableLetters NextLetters(std::span<const Entry> entries, const Prefix& prefix,
                          const Layout& layout, const KeypadLayout& keypad,
                          const MatchOptions& options) {
  std::unordered_set<Letter> viable;
  for (const Entry& entry : entries) {
    const size_t starts = StartWordCount(entry, options);
    for (size_t start = 0; start < starts; ++start) {
      StreamCursor cursor(entry, start, options);
      if (!MatchFrom(cursor, prefix, layout, keypad, options, nullptr)) {
        continue;
      }
      Letter letter;
      size_t offset;
      if (cursor.Next(&letter, &offset)) viable.insert(FoldCase(letter));
    }
  }
  ViableLetters result;
  for (Direction direction : kAllDirections) {
    for (Letter letter : layout.group(direction)) {
      if (viable.contains(letter)) {
        result[static_cast<int>(direction)].push_back(letter);
      }
    }
  }
  return result;
}

}  // namespace accelkey
