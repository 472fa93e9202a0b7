#include "accelkey/layout.h"

#include <set>

#include <gtest/gtest.h>

#include "accelkey/constraint.h"

namespace accelkey {
namespace {

std::u32string Group(const Layout& layout, Direction direction) {
  const auto& letters = layout.group(direction);
  return {letters.begin(), letters.end()};
}

TEST(LayoutTest, AbcGroups) {
  const Layout abc = Layout::Builtin("abc");
  EXPECT_EQ(Group(abc, Direction::kUp), U"ABCDEFG");
  EXPECT_EQ(Group(abc, Direction::kLeft), U"HIJKLMN");
  EXPECT_EQ(Group(abc, Direction::kRight), U"OPQRSTU");
  EXPECT_EQ(Group(abc, Direction::kDown), U"VWXYZ");
  EXPECT_EQ(abc.DirectionOf(U'G'), Direction::kUp);
}

TEST(LayoutTest, QwertyGroups) {
  const Layout qwerty = Layout::Builtin("qwerty");
  EXPECT_EQ(Group(qwerty, Direction::kUp), U"QWERTYUIOP");
  EXPECT_EQ(Group(qwerty, Direction::kLeft), U"ASDFG");
  EXPECT_EQ(Group(qwerty, Direction::kRight), U"HJKL");
  EXPECT_EQ(Group(qwerty, Direction::kDown), U"ZXCVBNM");
  EXPECT_EQ(qwerty.DirectionOf(U'L'), Direction::kRight);
  EXPECT_EQ(qwerty.DirectionOf(U'l'), Direction::kRight);
  EXPECT_FALSE(qwerty.IsSignificant(U'.'));
}

TEST(LayoutTest, BuiltinsPartitionTheLatinAlphabet) {
  for (const std::string& name : Layout::BuiltinNames()) {
    const Layout layout = Layout::Builtin(name);
    std::multiset<Letter> seen;
    for (Direction d : kAllDirections) {
      seen.insert(layout.group(d).begin(), layout.group(d).end());
    }
    ASSERT_EQ(seen.size(), 26u) << name;
    for (Letter c = U'A'; c <= U'Z'; ++c) {
      EXPECT_EQ(seen.count(c), 1u) << name << " letter " << char(c);
      EXPECT_TRUE(layout.DirectionOf(c).has_value());
    }
  }
}

TEST(LayoutTest, UnknownBuiltinNamesValidChoices) {
  try {
    Layout::Builtin("dvorak");
    FAIL() << "expected Error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("abc, qwerty"), std::string::npos);
  }
}

TEST(LayoutTest, RejectsOverlapAndEmptyAlphabet) {
  Layout::Groups overlapping;
  overlapping[0] = {U'A', U'B'};
  overlapping[1] = {U'b'};
  EXPECT_THROW(Layout::Create("bad", overlapping), Error);
  EXPECT_THROW(Layout::Create("empty", Layout::Groups{}), Error);
}

TEST(LayoutTest, ParsesCyrillicLayoutFile) {
  const Layout layout = Layout::Parse("cyr",
                                      "# test layout\n"
                                      "up: АБВ\n"
                                      "left: г, д\n"
                                      "\n"
                                      "right: ЕЖ\n"
                                      "down: З\n");
  EXPECT_EQ(layout.name(), "cyr");
  EXPECT_EQ(layout.alphabet().size(), 8u);
  EXPECT_EQ(layout.DirectionOf(0x0434), Direction::kLeft);  // д folds to Д
  EXPECT_EQ(layout.DirectionOf(0x0416), Direction::kRight);
}

TEST(LayoutTest, ParseErrors) {
  EXPECT_THROW(Layout::Parse("x", "up: A\nleft: B\nright: C\n"), Error);
  EXPECT_THROW(Layout::Parse("x", "up: A\nup: B\nleft: C\nright: D\ndown: E"),
               Error);
  EXPECT_THROW(Layout::Parse("x", "up: A\nleft: A\nright: C\ndown: E"), Error);
  EXPECT_THROW(Layout::Parse("x", "sideways: A\n"), Error);
  EXPECT_THROW(Layout::Parse("x", "up A\n"), Error);
}

TEST(LayoutTest, LoadsFileAndResolves) {
  const Layout layout =
      Layout::Resolve(ACCELKEY_TEST_DATA_DIR "/cyrillic_demo.layout");
  EXPECT_EQ(layout.name(), "cyrillic_demo");
  EXPECT_EQ(Layout::Resolve("abc").name(), "abc");
  EXPECT_THROW(Layout::Resolve("no/such/file.layout"), Error);
}

TEST(KeypadLayoutTest, StandardGroupsAndPressCounts) {
  const KeypadLayout& keypad = KeypadLayout::Standard();
  EXPECT_EQ(keypad.group('2'), (std::vector<Letter>{U'A', U'B', U'C'}));
  EXPECT_EQ(keypad.group('4'), (std::vector<Letter>{U'G', U'H', U'I'}));
  EXPECT_EQ(keypad.group('7'),
            (std::vector<Letter>{U'P', U'Q', U'R', U'S'}));
  EXPECT_EQ(keypad.group('9'),
            (std::vector<Letter>{U'W', U'X', U'Y', U'Z'}));
  EXPECT_EQ(keypad.KeyOf(U'j'), '5');
  EXPECT_EQ(keypad.PressCount(U'S'), 4);
  EXPECT_THROW(keypad.group('1'), Error);
  // Every Latin letter sits on exactly one key.
  for (Letter c = U'A'; c <= U'Z'; ++c) EXPECT_TRUE(keypad.KeyOf(c));
}

TEST(LetterSetTest, ResolvesEachConstraintKind) {
  const Layout qwerty = Layout::Builtin("qwerty");
  const KeypadLayout& keypad = KeypadLayout::Standard();
  EXPECT_EQ(LetterSet(DirectionGroup{Direction::kLeft}, qwerty, keypad),
            (std::vector<Letter>{U'A', U'S', U'D', U'F', U'G'}));
  EXPECT_EQ(LetterSet(KeypadGroup{'7'}, qwerty, keypad),
            (std::vector<Letter>{U'P', U'Q', U'R', U'S'}));
  EXPECT_EQ(LetterSet(Literal{U'Z'}, qwerty, keypad),
            (std::vector<Letter>{U'Z'}));
  try {
    LetterSet(Literal{U'.'}, qwerty, keypad);
    FAIL() << "expected Error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("insignificant literal"),
              std::string::npos);
  }
}

}  // namespace
}  // namespace accelkey
