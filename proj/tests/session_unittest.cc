#include "accelkey/session.h"

#include <gtest/gtest.h>

#include "oracles.h"

namespace accelkey {
namespace {

const InputEvent kUp = DirectionalEvent{Direction::kUp};
const InputEvent kDown = DirectionalEvent{Direction::kDown};
const InputEvent kLeft = DirectionalEvent{Direction::kLeft};
const InputEvent kRight = DirectionalEvent{Direction::kRight};
const InputEvent kSelect = SelectEvent{};
const InputEvent kBackspace = BackspaceEvent{};
const InputEvent kReset = ResetEvent{};

std::vector<std::string> Texts(const View& view) {
  std::vector<std::string> texts;
  for (const ViewEntry& entry : view.entries) texts.push_back(entry.text);
  return texts;
}

Session Writers(SessionConfig config = {}) {
  const std::vector<std::string> entries = {"ELIOT", "JOYCE", "ORWELL"};
  return Session::Create(entries, Layout::Builtin("qwerty"), {}, config);
}

TEST(SessionTest, StartsInSelectionWithEverything) {
  const Session session = Writers();
  const View view = session.GetView();
  EXPECT_EQ(view.mode, Mode::kSelection);
  EXPECT_TRUE(view.prefix.empty());
  EXPECT_FALSE(view.cursor);
  EXPECT_EQ(Texts(view),
            (std::vector<std::string>{"ELIOT", "JOYCE", "ORWELL"}));
  for (const ViewEntry& entry : view.entries) {
    EXPECT_TRUE(entry.highlights.empty());
  }
  // E and O go up, J goes right.
  EXPECT_EQ(view.viable[static_cast<int>(Direction::kUp)],
            (std::vector<Letter>{U'E', U'O'}));
  EXPECT_EQ(view.viable[static_cast<int>(Direction::kRight)],
            std::vector<Letter>{U'J'});
}

TEST(SessionTest, CreateErrors) {
  EXPECT_THROW(Session::Create({}, Layout::Builtin("abc")), Error);
  MatchOptions options;
  options.span_words = false;
  options.wrap = true;
  const std::vector<std::string> entries = {"A"};
  EXPECT_THROW(Session::Create(entries, Layout::Builtin("abc"), options),
               Error);
}

TEST(SessionTest, SingleEntrySelectsImmediately) {
  const std::vector<std::string> entries = {"Nabokov"};
  Session session = Session::Create(entries, Layout::Builtin("qwerty"));
  EXPECT_EQ(session.state().mode, Mode::kSelection);
  EXPECT_EQ(session.Apply(kSelect), Outcome::Selected(0));
}

TEST(SessionTest, FilterThenScroll) {
  Session session = Writers();
  EXPECT_EQ(session.Apply(kUp), Outcome::Continue());
  EXPECT_EQ(Texts(session.GetView()),
            (std::vector<std::string>{"ELIOT", "ORWELL"}));

  EXPECT_EQ(session.Apply(kSelect), Outcome::Continue());
  EXPECT_EQ(session.state().mode, Mode::kScrolling);
  EXPECT_EQ(session.state().cursor, 0u);

  EXPECT_EQ(session.Apply(kUp), Outcome::Continue());
  EXPECT_EQ(session.state().cursor, 0u);  // clamped
  session.Apply(kDown);
  session.Apply(kDown);
  EXPECT_EQ(session.state().cursor, 1u);  // clamped at the end
  EXPECT_EQ(session.Apply(kSelect), Outcome::Selected(2));
}

TEST(SessionTest, UniqueAfterFilteringSelectsDirectly) {
  Session session = Writers();
  session.Apply(kRight);  // J
  EXPECT_EQ(session.Apply(kSelect), Outcome::Selected(1));
}

TEST(SessionTest, MiddleCursorPolicy) {
  const std::vector<std::string> entries = {"A1", "A2", "A3", "A4", "A5",
                                            "A6"};
  Session session = Session::Create(entries, Layout::Builtin("abc"), {},
                                    {CursorPolicy::kMiddle});
  session.Apply(kSelect);
  EXPECT_EQ(session.state().cursor, 2u);  // floor((6 - 1) / 2)
  EXPECT_EQ(InitialCursor(CursorPolicy::kMiddle, 7), 3u);
  EXPECT_EQ(InitialCursor(CursorPolicy::kMiddle, 1), 0u);
}

TEST(SessionTest, LeftRightLeaveScrollingWithSamePrefix) {
  for (const InputEvent& exit : {kLeft, kRight}) {
    Session session = Writers();
    session.Apply(kUp);
    session.Apply(kSelect);
    session.Apply(kDown);
    EXPECT_EQ(session.Apply(exit), Outcome::Continue());
    EXPECT_EQ(session.state().mode, Mode::kSelection);
    EXPECT_FALSE(session.state().cursor);
    EXPECT_EQ(session.state().prefix, Prefix{DirectionGroup{Direction::kUp}});
    EXPECT_EQ(session.state().filtered.size(), 2u);
  }
}

TEST(SessionTest, DeadEndIsRejected) {
  Session session = Writers();
  const SessionState before = session.state();
  EXPECT_EQ(session.Apply(kDown), Outcome::Rejected("dead end"));
  EXPECT_EQ(session.Apply(LiteralEvent{U'Q'}), Outcome::Rejected("dead end"));
  EXPECT_EQ(session.Apply(KeypadEvent{'9'}), Outcome::Rejected("dead end"));
  EXPECT_EQ(session.state(), before);
  EXPECT_TRUE(session.at_initial_state());
  EXPECT_EQ(session.Apply(LiteralEvent{U'.'}).kind, Outcome::Kind::kRejected);
}

TEST(SessionTest, KeypadAndLiteralMix) {
  Session session = Writers();
  EXPECT_EQ(session.Apply(KeypadEvent{'3'}), Outcome::Continue());  // DEF
  EXPECT_EQ(session.Apply(LiteralEvent{U'L'}), Outcome::Continue());
  EXPECT_EQ(session.Apply(kSelect), Outcome::Selected(0));
}

TEST(SessionTest, LiteralInScrollingReturnsToSelection) {
  Session session = Writers();
  session.Apply(kUp);
  session.Apply(kSelect);
  EXPECT_EQ(session.Apply(LiteralEvent{U'R'}), Outcome::Continue());
  EXPECT_EQ(session.state().mode, Mode::kSelection);
  EXPECT_EQ(session.state().filtered, std::vector<size_t>{2});
}

TEST(SessionTest, BackspaceAndReset) {
  Session session = Writers();
  EXPECT_EQ(session.Apply(kBackspace), Outcome::Continue());
  EXPECT_TRUE(session.at_initial_state());

  const View initial = session.GetView();
  session.Apply(kUp);
  session.Apply(kSelect);
  session.Apply(kDown);
  session.Apply(kBackspace);
  EXPECT_EQ(session.state().cursor, 0u);
  session.Apply(kBackspace);
  EXPECT_EQ(session.state().mode, Mode::kSelection);
  EXPECT_EQ(session.state().prefix.size(), 1u);

  session.Apply(kReset);
  EXPECT_EQ(session.GetView(), initial);
  // Reset is itself undoable.
  session.Apply(kBackspace);
  EXPECT_EQ(session.state().prefix.size(), 1u);
}

TEST(SessionTest, ViewHighlightsMatchedLetters) {
  const std::vector<std::string> entries = {"Joyce", "T.S., Eliot", "Tolkien"};
  Session session = Session::Create(entries, Layout::Builtin("qwerty"));
  session.Apply(kUp);
  session.Apply(kLeft);
  const View view = session.GetView();
  ASSERT_EQ(view.entries.size(), 1u);
  EXPECT_EQ(view.entries[0].text, "T.S., Eliot");
  EXPECT_EQ(view.entries[0].highlights, (std::vector<size_t>{0, 2}));
}

TEST(SessionTest, ScrollingViewKeepsPrefixViability) {
  Session session = Writers();
  session.Apply(kUp);
  const View selecting = session.GetView();
  session.Apply(kSelect);
  const View scrolling = session.GetView();
  EXPECT_EQ(scrolling.cursor, 0u);
  EXPECT_EQ(scrolling.viable, selecting.viable);
  EXPECT_EQ(scrolling.viable[static_cast<int>(Direction::kLeft)],
            std::vector<Letter>{});
  EXPECT_EQ(scrolling.viable[static_cast<int>(Direction::kRight)],
            std::vector<Letter>{U'L'});
  EXPECT_EQ(scrolling.viable[static_cast<int>(Direction::kUp)],
            std::vector<Letter>{U'R'});
}

// Random sessions and event sequences for the property checks.
struct RandomSession {
  Session session;
  oracle::Generator* gen;

  InputEvent NextEvent() {
    switch (gen->Uniform(0, 9)) {
      case 0:
        return kSelect;
      case 1:
        return kBackspace;
      case 2:
        return gen->Uniform(0, 3) == 0 ? kReset : kSelect;
      case 3:
        return KeypadEvent{static_cast<char>('2' + gen->Uniform(0, 7))};
      case 4: {
        const auto& alphabet = session.layout().alphabet();
        return LiteralEvent{alphabet[gen->Uniform(0, alphabet.size() - 1)]};
      }
      default:
        return DirectionalEvent{kAllDirections[gen->Uniform(0, 3)]};
    }
  }
};

RandomSession MakeRandomSession(oracle::Generator& gen) {
  const Layout layout = gen.RandomLayout(gen.Uniform(2, 8));
  std::vector<std::string> entries;
  for (size_t i = gen.Uniform(1, 12); i > 0; --i) {
    entries.push_back(gen.RandomText(layout, 6));
  }
  const SessionConfig config{gen.Uniform(0, 1) ? CursorPolicy::kFirst
                                               : CursorPolicy::kMiddle};
  return {Session::Create(entries, layout, gen.RandomOptions(), config), &gen};
}

TEST(SessionPropertyTest, BackspaceUndoesEveryCommittedEvent) {
  oracle::Generator gen(21);
  for (int round = 0; round < 300; ++round) {
    RandomSession r = MakeRandomSession(gen);
    for (int step = 0; step < 20; ++step) {
      const InputEvent event = r.NextEvent();
      if (std::holds_alternative<BackspaceEvent>(event)) continue;
      const SessionState before = r.session.state();
      Session probe = r.session;
      if (probe.Apply(event).kind != Outcome::Kind::kContinue) continue;
      probe.Apply(kBackspace);
      ASSERT_EQ(probe.state(), before) << DescribeEvent(event);
      r.session.Apply(event);
    }
  }
}

TEST(SessionPropertyTest, FilteringIsMonotoneAndNeverEmpty) {
  oracle::Generator gen(22);
  for (int round = 0; round < 300; ++round) {
    RandomSession r = MakeRandomSession(gen);
    const View initial = r.session.GetView();
    for (int step = 0; step < 20; ++step) {
      const InputEvent event = r.NextEvent();
      const SessionState before = r.session.state();
      const View view = r.session.GetView();
      const Outcome outcome = r.session.Apply(event);
      const SessionState& after = r.session.state();
      ASSERT_FALSE(after.filtered.empty());
      ASSERT_TRUE(std::is_sorted(after.filtered.begin(), after.filtered.end()));
      if (outcome.kind == Outcome::Kind::kRejected) {
        ASSERT_EQ(after, before);
        continue;
      }
      if (after.prefix.size() == before.prefix.size() + 1) {
        ASSERT_TRUE(std::includes(before.filtered.begin(),
                                  before.filtered.end(),
                                  after.filtered.begin(),
                                  after.filtered.end()));
        // A committed literal was offered as viable beforehand.
        if (const auto* literal = std::get_if<LiteralEvent>(&event)) {
          const Letter folded = FoldCase(literal->letter);
          const auto& group = view.viable[static_cast<int>(
              *r.session.layout().DirectionOf(folded))];
          ASSERT_NE(std::find(group.begin(), group.end(), folded),
                    group.end());
        }
      }
    }
    r.session.Apply(kReset);
    ASSERT_EQ(r.session.GetView(), initial);
  }
}

TEST(SessionPropertyTest, EveryEntryIsReachable) {
  oracle::Generator gen(23);
  for (int round = 0; round < 200; ++round) {
    RandomSession r = MakeRandomSession(gen);
    const Session initial = r.session;
    for (size_t target = 0; target < initial.entries().size(); ++target) {
      Session session = initial;
      const Entry& entry = session.entries()[target];
      std::u32string letters;
      if (!entry.streams.empty()) {
        letters = session.options().span_words ? entry.WholeStream()
                                               : entry.streams[0].letters;
      }
      for (Letter letter : letters) {
        ASSERT_EQ(session.Apply(LiteralEvent{letter}).kind,
                  Outcome::Kind::kContinue);
      }
      Outcome outcome = session.Apply(kSelect);
      if (outcome.kind == Outcome::Kind::kContinue) {
        const auto& filtered = session.state().filtered;
        const size_t position =
            std::find(filtered.begin(), filtered.end(), target) -
            filtered.begin();
        ASSERT_LT(position, filtered.size());
        while (*session.state().cursor < position) session.Apply(kDown);
        while (*session.state().cursor > position) session.Apply(kUp);
        outcome = session.Apply(kSelect);
      }
      ASSERT_EQ(outcome, Outcome::Selected(target));
    }
  }
}

TEST(SessionPropertyTest, Deterministic) {
  for (uint32_t seed = 0; seed < 100; ++seed) {
    std::vector<Outcome> first;
    std::vector<Outcome> second;
    for (auto* outcomes : {&first, &second}) {
      oracle::Generator gen(seed);
      RandomSession r = MakeRandomSession(gen);
      for (int step = 0; step < 30; ++step) {
        outcomes->push_back(r.session.Apply(r.NextEvent()));
      }
    }
    EXPECT_EQ(first, second);
  }
}

}  // namespace
}  // namespace accelkey
